#include "hopfgl/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <future>
#include <map>
#include <thread>

#include "hopfgl/error.hpp"

namespace hopfgl
{

namespace
{

VerifyRecord make_record(std::string check, Json params, const std::optional<std::string> &diff)
{
    return {std::move(check), std::move(params), !diff, diff.value_or("")};
}

std::optional<std::string> morphism_difference(const AlgebraMorphism &a, const AlgebraMorphism &b)
{
    if (a.source() != b.source() || a.target() != b.target()) {
        return std::string("morphisms between different rings");
    }
    for (std::size_t i = 0; i < a.images().size(); ++i) {
        if (!(a.image(i) == b.image(i))) {
            const auto show = [](const std::optional<PolyElement> &p) { return p ? to_string(*p) : std::string("?"); };
            return a.source()->generator(i).name + ": " + show(a.image(i)) + " vs " + show(b.image(i));
        }
    }
    return std::nullopt;
}

unsigned thread_count(unsigned requested)
{
    if (requested > 0) {
        return requested;
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

// Run tasks on up to `threads` workers; results keep task order.
template <typename T>
std::vector<T> run_ordered(const std::vector<std::function<T()>> &tasks, unsigned threads)
{
    std::vector<T> results(tasks.size());
    const std::size_t workers = std::min<std::size_t>(thread_count(threads), tasks.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            results[i] = tasks[i]();
        }
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.push_back(std::async(std::launch::async, [&] {
            for (std::size_t i = next++; i < tasks.size(); i = next++) {
                results[i] = tasks[i]();
            }
        }));
    }
    for (auto &f : pool) {
        f.get();
    }
    return results;
}

// (n) for n in [-bound, bound], built by the defining recursions.
std::map<int, AlgebraMorphism> convolution_powers(const HopfDescriptor &h, int bound)
{
    std::map<int, AlgebraMorphism> powers;
    powers.emplace(0, h.unit_counit());
    const auto id = AlgebraMorphism::identity(h.carrier());
    for (int n = 1; n <= bound; ++n) {
        powers.emplace(n, convolution(h, powers.at(n - 1), id));
        powers.emplace(-n, convolution(h, powers.at(-(n - 1)), h.antipode()));
    }
    return powers;
}

} // namespace

Json to_json(const VerifyRecord &r)
{
    return {{"check", r.check}, {"params", r.params}, {"status", r.passed ? "pass" : "fail"}, {"detail", r.detail}};
}

Series1 binomial_power_series(int n, unsigned order)
{
    const auto &q = rationals();
    Series1 s(q, order);
    Rational c = 1;
    for (unsigned k = 1; k <= order; ++k) {
        c = c * Rational(n - static_cast<int>(k) + 1) / Rational(static_cast<int>(k));
        if (c != 0) {
            s.set({k}, PolyElement(q, c));
        }
    }
    return s;
}

std::vector<VerifyRecord> verify_law(const FormalGroupLaw &law, int range)
{
    std::vector<VerifyRecord> out;
    const Json base{{"law", law.name()}, {"order", law.order()}};
    for (const auto &c : validate_fgl(law).checks) {
        out.push_back({"fgl." + c.name, base, c.passed, c.detail});
    }

    const auto &ring = law.ring();
    const auto x = Series1::variable(ring, law.order());
    const auto theta = inverse_series(law);
    const auto cancel = evaluate(law.series(), x, theta);
    out.push_back(make_record("fgl.inverse.cancel", base, first_difference(cancel, Series1(ring, law.order()))));
    out.push_back(make_record("fgl.inverse.involution", base, first_difference(compose1(theta, theta), x)));
    out.push_back(make_record("fgl.inverse.hom", base,
                              is_fgl_hom(theta, law, law) ? std::nullopt
                                                          : std::optional<std::string>("theta is not an endomorphism")));

    std::map<int, Series1> phi;
    for (int n = -2 * range; n <= 2 * range; ++n) {
        phi.emplace(n, n_series(law, n));
    }
    for (int n = -range; n <= range; ++n) {
        Json p = base;
        p["n"] = n;
        const auto lhs = subst_into1(phi.at(n), law.series());
        const auto rhs = subst2(law.series(), phi.at(n), phi.at(n));
        out.push_back(make_record("fgl.power.hom", p, first_difference(lhs, rhs)));
    }
    for (int m = -range; m <= range; ++m) {
        for (int n = -range; n <= range; ++n) {
            Json p = base;
            p["m"] = m;
            p["n"] = n;
            const auto sum = evaluate(law.series(), phi.at(m), phi.at(n));
            out.push_back(make_record("fgl.power.addition", p, first_difference(sum, phi.at(m + n))));
        }
    }
    if (law.name() == "multiplicative") {
        for (int n = -range; n <= range; ++n) {
            Json p = base;
            p["n"] = n;
            out.push_back(make_record("fgl.power.binomial", p,
                                      first_difference(phi.at(n), binomial_power_series(n, law.order()))));
        }
    }
    return out;
}

std::vector<VerifyRecord> verify_hopf(const Hopf &hopf, int range)
{
    const auto &h = *hopf;
    std::vector<VerifyRecord> out;
    const Json base{{"instance", h.name()}, {"generators", h.carrier()->hopf_count()}};
    for (const auto &c : h.validation().checks) {
        out.push_back({"hopf.validate." + c.name, base, c.passed, c.detail});
    }
    if (!h.valid()) {
        return out;
    }
    const auto id = AlgebraMorphism::identity(h.carrier());
    const auto &s = h.antipode();
    out.push_back(make_record("hopf.antipode.left", base, morphism_difference(convolution(h, s, id), h.unit_counit())));
    out.push_back(make_record("hopf.antipode.right", base, morphism_difference(convolution(h, id, s), h.unit_counit())));
    auto unit = morphism_difference(convolution(h, id, h.unit_counit()), id);
    if (!unit) {
        unit = morphism_difference(convolution(h, h.unit_counit(), id), id);
    }
    out.push_back(make_record("hopf.convolution.unit", base, unit));

    const auto powers = convolution_powers(h, 2 * range);
    for (int m = -range; m <= range; ++m) {
        for (int n = -range; n <= range; ++n) {
            Json p = base;
            p["m"] = m;
            p["n"] = n;
            out.push_back(make_record("hopf.power.group", p,
                                      morphism_difference(convolution(h, powers.at(m), powers.at(n)), powers.at(m + n))));
        }
    }
    if (h.cocommutative()) {
        for (int n = -range; n <= range; ++n) {
            Json p = base;
            p["n"] = n;
            const auto &f = powers.at(n);
            out.push_back(make_record("hopf.power.coalgebra", p,
                                      morphism_difference(compose(f, h.diagonal()),
                                                          compose(h.diagonal(), tensor_square_map(h, f, f)))));
        }
    }
    return out;
}

std::vector<VerifyRecord> verify_extension(const FormalGroupLaw &law, const Hopf &hopf, const CoveringSeries &b,
                                           int range, unsigned threads)
{
    const auto &h = *hopf;
    const unsigned order = std::min(law.order(), b.order());
    const Json base{{"law", law.name()}, {"instance", h.name()}, {"order", order}};
    std::vector<VerifyRecord> out;
    if (!h.valid() || !h.cocommutative()) {
        out.push_back({"ext.precondition", base, false, "Hopf algebra must be valid and cocommutative"});
        return out;
    }

    const auto g = canonical_extension(law, hopf, b);
    out.push_back(make_record("ext.extension", base, extension_discrepancy(g)));
    out.push_back(make_record("ext.unit-slots", base, unit_slot_discrepancy(g)));

    const int bound = std::max(2 * range, range * range);
    const auto powers = convolution_powers(h, bound);

    std::vector<int> twist_ns;
    for (int n = -bound; n <= bound; ++n) {
        twist_ns.push_back(n);
    }
    std::vector<std::function<std::optional<HopfFormalGroup>()>> twist_tasks;
    for (int n : twist_ns) {
        twist_tasks.emplace_back([&, n] { return std::optional<HopfFormalGroup>(twist_by(g, powers.at(n))); });
    }
    std::map<int, HopfFormalGroup> twisted;
    {
        auto results = run_ordered(twist_tasks, threads);
        for (std::size_t i = 0; i < twist_ns.size(); ++i) {
            twisted.emplace(twist_ns[i], std::move(*results[i]));
        }
    }

    const auto same_group = [](const HopfFormalGroup &a, const HopfFormalGroup &b) {
        return first_difference(a.body(), b.body());
    };
    out.push_back(make_record("ext.twist.identity", base, same_group(twisted.at(1), g)));
    out.push_back(make_record("ext.twist.zero", base, same_group(twisted.at(0), trivial_extension(law, hopf))));
    for (int n = -range; n <= range; ++n) {
        Json p = base;
        p["n"] = n;
        out.push_back(make_record("ext.twist.extension", p, extension_discrepancy(twisted.at(n))));
    }

    std::vector<std::function<std::vector<VerifyRecord>()>> cells;
    for (int m = -range; m <= range; ++m) {
        for (int n = -range; n <= range; ++n) {
            cells.emplace_back([&, m, n] {
                Json p = base;
                p["m"] = m;
                p["n"] = n;
                std::vector<VerifyRecord> r;
                const auto product = convolution(h, powers.at(m), powers.at(n));
                r.push_back(make_record("ext.twist.convolution", p,
                                        same_group(twist_by(g, product), twisted.at(m + n))));
                r.push_back(make_record("ext.twist.composition", p,
                                        same_group(twist_by(twisted.at(m), powers.at(n)), twisted.at(m * n))));
                return r;
            });
        }
    }
    for (int n = -range; n <= range; ++n) {
        cells.emplace_back([&, n] {
            Json p = base;
            p["n"] = n;
            std::vector<VerifyRecord> r;
            const auto phi = phi_n(law, hopf, b, n);
            const auto [lhs, rhs] = hopf_hom_sides(phi, g, twisted.at(n));
            r.push_back(make_record("ext.covering.hom", p, first_difference(lhs, rhs)));
            r.push_back(make_record("ext.covering.project", p,
                                    first_difference(project(phi), truncate(n_series(law, n), order))));
            if (n == 0) {
                r.push_back(make_record("ext.covering.zero", p,
                                        first_difference(phi.series(), Series1(h.carrier(), order))));
            } else if (n == 1) {
                r.push_back(make_record("ext.covering.identity", p,
                                        first_difference(phi.series(), Series1::variable(h.carrier(), order))));
            } else if (n == -1) {
                r.push_back(make_record("ext.covering.inverse", p,
                                        first_difference(project(phi), truncate(inverse_series(law), order))));
            }
            return r;
        });
    }
    for (auto &chunk : run_ordered(cells, threads)) {
        out.insert(out.end(), std::make_move_iterator(chunk.begin()), std::make_move_iterator(chunk.end()));
    }
    return out;
}

std::vector<VerifyRecord> verify_all(const VerifyConfig &config)
{
    std::vector<std::function<std::vector<VerifyRecord>()>> suites;
    std::vector<std::string> laws{"additive", "multiplicative", "mishchenko-model"};
    if (std::find(laws.begin(), laws.end(), config.law) == laws.end()) {
        laws.push_back(config.law);
    }
    for (const auto &name : laws) {
        suites.emplace_back([&, name] { return verify_law(load_law(name, config.order), config.range); });
    }

    const auto law = load_law(config.law, config.order);
    const auto hopf = load_hopf(config.instance, law.ring(), config.order);
    suites.emplace_back([&] { return verify_hopf(hopf, config.range); });
    const auto b = config.twist_series ? load_twist_series(*config.twist_series, hopf, config.order)
                                       : default_twist_series(hopf, config.order);

    std::vector<VerifyRecord> out;
    for (auto &chunk : run_ordered(suites, config.threads)) {
        out.insert(out.end(), std::make_move_iterator(chunk.begin()), std::make_move_iterator(chunk.end()));
    }
    if (hopf->valid()) {
        auto ext = verify_extension(law, hopf, b, config.range, config.threads);
        out.insert(out.end(), std::make_move_iterator(ext.begin()), std::make_move_iterator(ext.end()));
    } else {
        out.push_back({"ext.precondition", Json{{"instance", hopf->name()}}, false, "Hopf descriptor is invalid"});
    }
    return out;
}

} // namespace hopfgl
