#include "hopfgl/series.hpp"

namespace hopfgl
{

Series1 compose1(const Series1 &outer, const Series1 &inner)
{
    return evaluate(outer, inner);
}

Series1 reversion(const Series1 &f)
{
    if (!(f.coefficient({1}) == PolyElement(f.ring(), 1))) {
        throw PreconditionError("reversion needs a series with linear coefficient 1");
    }
    // Fix one coefficient per degree: if f(g) = x + c x^k + O(x^{k+1}) then
    // replacing g by g - c x^k removes c without disturbing lower degrees.
    Series1 g = Series1::variable(f.ring(), f.order());
    for (unsigned k = 2; k <= f.order(); ++k) {
        const auto fg = compose1(truncate(f, k), truncate(g, k));
        const auto &c = fg.coefficient({k});
        if (!c.is_zero()) {
            g.set({k}, -c);
        }
    }
    return g;
}

Series2 subst2(const Series2 &outer, const Series1 &g, const Series1 &h)
{
    return evaluate(outer, lift<2>(g, {0}), lift<2>(h, {1}));
}

Series2 subst_into1(const Series1 &phi, const Series2 &inner)
{
    return evaluate(phi, inner);
}

namespace
{

template <std::size_t Vars>
std::string name_with(const Exponents<Vars> &e, const char *const *names)
{
    std::string out;
    for (std::size_t v = 0; v < Vars; ++v) {
        if (e[v] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += names[v];
        if (e[v] > 1) {
            out += '^' + std::to_string(e[v]);
        }
    }
    return out.empty() ? std::string("1") : out;
}

} // namespace

std::string monomial_name(const Exponents<1> &e)
{
    static const char *const names[] = {"x"};
    return name_with<1>(e, names);
}

std::string monomial_name(const Exponents<2> &e)
{
    static const char *const names[] = {"u", "v"};
    return name_with<2>(e, names);
}

std::string monomial_name(const Exponents<3> &e)
{
    static const char *const names[] = {"x", "y", "z"};
    return name_with<3>(e, names);
}

} // namespace hopfgl
