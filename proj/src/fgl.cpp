#include "hopfgl/fgl.hpp"

#include <cstdlib>

namespace hopfgl
{

FormalGroupLaw::FormalGroupLaw(Series2 law, std::string name) : law_(std::move(law)), name_(std::move(name))
{
    if (law_.ring()->kind() != RingKind::base) {
        throw PreconditionError("a formal group law lives over a base ring");
    }
}

FormalGroupLaw additive(unsigned order)
{
    const auto &q = rationals();
    return {Series2::variable(q, order, 0) + Series2::variable(q, order, 1), "additive"};
}

FormalGroupLaw multiplicative(unsigned order)
{
    const auto &q = rationals();
    auto law = Series2::variable(q, order, 0) + Series2::variable(q, order, 1);
    law.set({1, 1}, PolyElement(q, 1));
    return {std::move(law), "multiplicative"};
}

FormalGroupLaw from_logarithm(const Series1 &logarithm, std::string name)
{
    const auto exponential = reversion(logarithm);
    const auto sum = lift<2>(logarithm, {0}) + lift<2>(logarithm, {1});
    return {subst_into1(exponential, sum), std::move(name)};
}

FormalGroupLaw mishchenko_model(unsigned order)
{
    std::vector<Generator> gens;
    for (unsigned k = 1; k < order; ++k) {
        gens.push_back({"m" + std::to_string(k), static_cast<long>(k)});
    }
    const auto ring = make_base_ring(std::move(gens));
    auto log = Series1::variable(ring, order);
    for (unsigned k = 1; k < order; ++k) {
        log.set({k + 1}, PolyElement::generator(ring, k - 1));
    }
    return from_logarithm(log, "mishchenko-model");
}

namespace
{

template <std::size_t Vars>
CheckResult compare(std::string name, const TruncatedSeries<Vars> &got, const TruncatedSeries<Vars> &want)
{
    auto diff = first_difference(got, want);
    return {std::move(name), !diff, diff.value_or("")};
}

// Keep only the coefficients with the other exponent zero.
Series2 restrict_to_axis(const Series2 &f, std::size_t axis)
{
    Series2 r(f.ring(), f.order());
    for (unsigned k = 1; k <= f.order(); ++k) {
        Exponents<2> e{};
        e[axis] = k;
        if (!f.coefficient(e).is_zero()) {
            r.set(e, f.coefficient(e));
        }
    }
    return r;
}

} // namespace

Report validate_fgl(const FormalGroupLaw &law)
{
    const auto &f = law.series();
    const auto &ring = law.ring();
    const unsigned n = law.order();
    Report report;
    report.checks.push_back(compare("unit-left", restrict_to_axis(f, 0), Series2::variable(ring, n, 0)));
    report.checks.push_back(compare("unit-right", restrict_to_axis(f, 1), Series2::variable(ring, n, 1)));
    report.checks.push_back(compare("commutativity", lift<2>(f, {1, 0}), f));

    const auto x = Series3::variable(ring, n, 0);
    const auto z = Series3::variable(ring, n, 2);
    const auto left = evaluate(f, lift<3>(f, {0, 1}), z);
    const auto right = evaluate(f, x, lift<3>(f, {1, 2}));
    report.checks.push_back(compare("associativity", left, right));
    return report;
}

Series1 inverse_series(const FormalGroupLaw &law)
{
    const auto &ring = law.ring();
    const auto x = Series1::variable(ring, law.order());
    Series1 theta = -x;
    for (unsigned k = 2; k <= law.order(); ++k) {
        const auto residual = evaluate(truncate(law.series(), k), truncate(x, k), truncate(theta, k));
        const auto &c = residual.coefficient({k});
        if (!c.is_zero()) {
            theta.set({k}, -c);
        }
    }
    return theta;
}

Series1 n_series(const FormalGroupLaw &law, int n)
{
    const auto &ring = law.ring();
    const auto x = Series1::variable(ring, law.order());
    if (n == 0) {
        return Series1(ring, law.order());
    }
    const Series1 step = n > 0 ? x : inverse_series(law);
    Series1 phi = step;
    for (int k = 1; k < std::abs(n); ++k) {
        phi = evaluate(law.series(), step, phi);
    }
    return phi;
}

bool is_fgl_hom(const Series1 &phi, const FormalGroupLaw &source, const FormalGroupLaw &target)
{
    const auto lhs = subst_into1(phi, source.series());
    const auto rhs = subst2(target.series(), phi, phi);
    return lhs == rhs;
}

} // namespace hopfgl
