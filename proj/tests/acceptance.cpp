// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hopfgl/cli.hpp"
#include "hopfgl/expression.hpp"
#include "hopfgl/hopfext.hpp"
#include "hopfgl/verify.hpp"
#include "oracles.hpp"

using namespace hopfgl;

namespace
{

using Clock = std::chrono::steady_clock;

// Collects the first few failures of one criterion.
class Tally
{
public:
    void expect(bool ok, const std::string &what)
    {
        ++checks_;
        if (!ok) {
            ++failures_;
            if (failures_ <= 3) {
                notes_ += (notes_.empty() ? "" : "; ") + what;
            }
        }
    }

    bool passed() const { return failures_ == 0; }
    std::size_t checks() const { return checks_; }
    std::string summary() const
    {
        std::ostringstream os;
        os << checks_ << " checks";
        if (failures_ > 0) {
            os << ", " << failures_ << " failed: " << notes_;
        }
        return os.str();
    }

private:
    std::size_t checks_ = 0;
    std::size_t failures_ = 0;
    std::string notes_;
};

std::vector<FormalGroupLaw> builtin_laws(unsigned order)
{
    return {additive(order), multiplicative(order), mishchenko_model(order)};
}

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void fgl_axioms(Tally &t)
{
    const auto start = Clock::now();
    for (const auto &law : builtin_laws(8)) {
        for (const auto &c : validate_fgl(law).checks) {
            t.expect(c.passed, law.name() + " " + c.name + " " + c.detail);
        }
    }
    const double s = seconds_since(start);
    t.expect(s < 30.0, "runtime " + std::to_string(s) + " s");
}

void power_systems(Tally &t)
{
    for (const auto &law : builtin_laws(8)) {
        std::vector<Series1> phi;
        for (int n = -6; n <= 6; ++n) {
            phi.push_back(n_series(law, n));
        }
        const auto at = [&](int n) -> const Series1 & { return phi[static_cast<std::size_t>(n + 6)]; };
        for (int n = -5; n <= 5; ++n) {
            t.expect(is_fgl_hom(at(n), law, law), law.name() + " hom n=" + std::to_string(n));
        }
        for (int m = -3; m <= 3; ++m) {
            for (int n = -3; n <= 3; ++n) {
                const auto sum = evaluate(law.series(), at(m), at(n));
                t.expect(sum == at(m + n), law.name() + " addition m=" + std::to_string(m) + " n=" + std::to_string(n));
            }
        }
        if (law.name() == "multiplicative") {
            for (int n = -5; n <= 5; ++n) {
                t.expect(at(n) == oracle::binomial_oracle(n, 8), "binomial n=" + std::to_string(n));
            }
        }
    }
}

void inverse_series_check(Tally &t)
{
    for (const auto &law : builtin_laws(8)) {
        const auto theta = inverse_series(law);
        const auto x = Series1::variable(law.ring(), 8);
        t.expect(evaluate(law.series(), x, theta).is_zero(), law.name() + " F(x, theta)");
        t.expect(compose1(theta, theta) == x, law.name() + " theta(theta)");
    }
}

void hopf_axioms(Tally &t)
{
    const auto h = beta_instance(8);
    for (const auto &c : h->validation().checks) {
        t.expect(c.passed, c.name + " " + c.detail);
    }
    t.expect(h->cocommutative(), "cocommutative");
    if (!h->valid()) {
        return;
    }
    const auto id = AlgebraMorphism::identity(h->carrier());
    t.expect(convolution(*h, h->antipode(), id) == h->unit_counit(), "S * id");
    t.expect(convolution(*h, id, h->antipode()) == h->unit_counit(), "id * S");
}

void convolution_group(Tally &t)
{
    const auto h = beta_instance(6);
    std::vector<AlgebraMorphism> powers;
    for (int n = -6; n <= 6; ++n) {
        powers.push_back(conv_power(*h, n));
    }
    const auto at = [&](int n) -> const AlgebraMorphism & { return powers[static_cast<std::size_t>(n + 6)]; };
    for (int m = -3; m <= 3; ++m) {
        for (int n = -3; n <= 3; ++n) {
            const auto product = convolution(*h, at(m), at(n));
            for (std::size_t i = 0; i < h->carrier()->size(); ++i) {
                t.expect(*product.image(i) == *at(m + n).image(i),
                         "m=" + std::to_string(m) + " n=" + std::to_string(n) + " generator " +
                             h->carrier()->generator(i).name);
            }
        }
    }
}

void twist_suite(Tally &t)
{
    const auto law = mishchenko_model(5);
    const auto h = beta_instance(5, law.ring());
    const auto b = default_twist_series(h, 5);
    const auto g = canonical_extension(law, h, b);
    t.expect(twist(g, 1) == g, "twist(G, 1) = G");
    t.expect(twist(g, 0) == trivial_extension(law, h), "twist(G, 0) = F");
    for (int n = -3; n <= 3; ++n) {
        t.expect(is_extension(twist(g, n)), "extension n=" + std::to_string(n));
    }
    for (int m = -3; m <= 3; ++m) {
        for (int n = -3; n <= 3; ++n) {
            const auto composed = convolution(*h, conv_power(*h, m), conv_power(*h, n));
            t.expect(twist_by(g, composed) == twist(g, m + n),
                     "twist by (m)*(n) m=" + std::to_string(m) + " n=" + std::to_string(n));
        }
    }
}

void covering_suite(Tally &t)
{
    const auto law = mishchenko_model(5);
    const auto h = beta_instance(5, law.ring());
    const auto b = default_twist_series(h, 5);
    const auto g = canonical_extension(law, h, b);
    for (int n = -2; n <= 3; ++n) {
        const auto phi = phi_n(law, h, b, n);
        t.expect(is_hopf_hom(phi, g, twist(g, n)), "hom n=" + std::to_string(n));
        t.expect(project(phi) == n_series(law, n), "project n=" + std::to_string(n));
        if (n == -1) {
            t.expect(project(phi) == inverse_series(law), "project(Phi(-1)) = theta");
        }
        if (n == 0) {
            t.expect(phi.series().is_zero(), "Phi(0) = 0");
        }
    }

    const auto start = Clock::now();
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli({"verify", "all", "--order", "5", "--range", "3"}, out, err);
    const double s = seconds_since(start);
    t.expect(code == exit_ok, "verify all exit " + std::to_string(code));
    t.expect(s < 120.0, "verify all took " + std::to_string(s) + " s");
}

void oracle_cross_checks(Tally &t)
{
    std::mt19937 rng(8);
    const auto r = make_base_ring({{"a", 1}, {"c", 2}});
    for (int trial = 0; trial < 100; ++trial) {
        const unsigned n = 1 + static_cast<unsigned>(trial) % 5;
        const auto f = oracle::random_series<2>(r, n, rng);
        const auto g = oracle::random_series<1>(r, n, rng);
        const auto k = oracle::random_series<1>(r, n, rng);
        const auto m = oracle::random_series<1>(r, n, rng, true);
        const auto label = " trial " + std::to_string(trial);
        t.expect(subst2(f, g, k) == oracle::naive_subst2(f, g, k), "subst2" + label);
        t.expect(subst_into1(g, f) == oracle::naive_subst_into1(g, f), "subst_into1" + label);
        t.expect(reversion(m) == oracle::lagrange_reversion(m), "reversion" + label);
    }
    const auto h = beta_instance(3);
    const auto &c = h->carrier();
    const auto &s = h->antipode();
    t.expect(*s.image(0) == parse_polynomial(c, "-b1"), "S(b1)");
    t.expect(*s.image(1) == parse_polynomial(c, "b1^2 - b2"), "S(b2)");
    t.expect(*s.image(2) == parse_polynomial(c, "-b1^3 + 2*b1*b2 - b3"), "S(b3)");
}

void determinism(Tally &t)
{
    const auto capture = [](const std::string &threads) {
        std::ostringstream out;
        std::ostringstream err;
        run_cli({"verify", "all", "--order", "5", "--range", "3", "--format", "records", "--threads", threads}, out,
                err);
        return out.str();
    };
    const auto first = capture("0");
    const auto second = capture("0");
    const auto serial = capture("1");
    t.expect(!first.empty(), "empty output");
    t.expect(first == second, "two runs differ");
    t.expect(first == serial, "threaded and serial runs differ");
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Tally &)>>> criteria{
        {"FGL axioms at N = 8", fgl_axioms},
        {"power systems, addition rule and binomial closed form at N = 8", power_systems},
        {"inverse series at N = 8", inverse_series_check},
        {"beta(8) Hopf axioms and antipode laws", hopf_axioms},
        {"(m)*(n) = (m+n) on beta(6)", convolution_group},
        {"twist suite at N = 5", twist_suite},
        {"covering suite at N = 5 and full verify run time", covering_suite},
        {"oracle cross-checks and antipode closed forms", oracle_cross_checks},
        {"byte-identical verify output", determinism},
    };
    int failed = 0;
    int index = 1;
    for (const auto &[name, run] : criteria) {
        Tally t;
        const auto start = Clock::now();
        try {
            run(t);
        } catch (const std::exception &e) {
            t.expect(false, std::string("exception: ") + e.what());
        }
        const double s = seconds_since(start);
        std::ostringstream line;
        line.precision(2);
        line << std::fixed << (t.passed() ? "PASS" : "FAIL") << "  [" << index << "] " << name << "  (" << t.summary()
             << ", " << s << " s)";
        std::cout << line.str() << '\n';
        failed += t.passed() ? 0 : 1;
        ++index;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
