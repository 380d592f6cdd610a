// Test-only reference computations. Nothing here calls the series
// composition, reversion or convolution code it is used to check; series are
// only read coefficient by coefficient.
#ifndef HOPFGL_TESTS_ORACLES_HPP
#define HOPFGL_TESTS_ORACLES_HPP

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "hopfgl/hopf.hpp"
#include "hopfgl/series.hpp"

namespace oracle
{

using hopfgl::PolyElement;
using hopfgl::Rational;
using hopfgl::Ring;

// Untruncated polynomial in (u, v) with ring coefficients.
using Bivariate = std::map<std::pair<unsigned, unsigned>, PolyElement>;

inline void accumulate(Bivariate &p, std::pair<unsigned, unsigned> e, const PolyElement &c)
{
    auto it = p.find(e);
    if (it == p.end()) {
        p.emplace(e, c);
    } else {
        it->second = it->second + c;
    }
}

inline Bivariate multiply(const Bivariate &a, const Bivariate &b)
{
    Bivariate r;
    for (const auto &[ea, ca] : a) {
        for (const auto &[eb, cb] : b) {
            accumulate(r, {ea.first + eb.first, ea.second + eb.second}, hopfgl::mul(ca, cb));
        }
    }
    return r;
}

inline Bivariate from_series(const hopfgl::Series2 &s)
{
    Bivariate r;
    for (unsigned i = 0; i <= s.order(); ++i) {
        for (unsigned j = 0; i + j <= s.order(); ++j) {
            if (i + j > 0 && !s.coefficient({i, j}).is_zero()) {
                r.emplace(std::make_pair(i, j), s.coefficient({i, j}));
            }
        }
    }
    return r;
}

// Series in one variable placed on the u (var = 0) or v (var = 1) axis.
inline Bivariate from_series(const hopfgl::Series1 &s, int var)
{
    Bivariate r;
    for (unsigned k = 1; k <= s.order(); ++k) {
        if (!s.coefficient({k}).is_zero()) {
            r.emplace(var == 0 ? std::make_pair(k, 0U) : std::make_pair(0U, k), s.coefficient({k}));
        }
    }
    return r;
}

inline hopfgl::Series2 to_series(const Ring &ring, unsigned order, const Bivariate &p)
{
    hopfgl::Series2 s(ring, order);
    for (const auto &[e, c] : p) {
        if (e.first + e.second <= order && e.first + e.second > 0) {
            s.set({e.first, e.second}, c);
        }
    }
    return s;
}

inline Bivariate power(const Bivariate &p, unsigned k, const Ring &ring)
{
    Bivariate r{{{0, 0}, PolyElement(ring, 1)}};
    for (unsigned i = 0; i < k; ++i) {
        r = multiply(r, p);
    }
    return r;
}

// F(g(u), h(v)) by full expansion, truncated only at the end.
inline hopfgl::Series2 naive_subst2(const hopfgl::Series2 &f, const hopfgl::Series1 &g, const hopfgl::Series1 &h)
{
    const auto &ring = f.ring();
    const unsigned order = std::min({f.order(), g.order(), h.order()});
    const auto gu = from_series(g, 0);
    const auto hv = from_series(h, 1);
    Bivariate total;
    for (unsigned i = 0; i <= order; ++i) {
        for (unsigned j = 0; i + j <= order; ++j) {
            if (i + j == 0 || f.coefficient({i, j}).is_zero()) {
                continue;
            }
            const auto term = multiply(power(gu, i, ring), power(hv, j, ring));
            for (const auto &[e, c] : term) {
                accumulate(total, e, hopfgl::mul(f.coefficient({i, j}), c));
            }
        }
    }
    return to_series(ring, order, total);
}

// phi(F(u, v)) by full expansion.
inline hopfgl::Series2 naive_subst_into1(const hopfgl::Series1 &phi, const hopfgl::Series2 &f)
{
    const auto &ring = f.ring();
    const unsigned order = std::min(phi.order(), f.order());
    const auto base = from_series(f);
    Bivariate total;
    for (unsigned k = 1; k <= order; ++k) {
        if (phi.coefficient({k}).is_zero()) {
            continue;
        }
        for (const auto &[e, c] : power(base, k, ring)) {
            accumulate(total, e, hopfgl::mul(phi.coefficient({k}), c));
        }
    }
    return to_series(ring, order, total);
}

// Univariate dense polynomial helpers, index = exponent.
using Dense = std::vector<PolyElement>;

inline Dense dense_multiply(const Dense &a, const Dense &b, std::size_t keep)
{
    Dense r(keep, PolyElement(a.front().ring()));
    for (std::size_t i = 0; i < a.size() && i < keep; ++i) {
        for (std::size_t j = 0; j < b.size() && i + j < keep; ++j) {
            r[i + j] = r[i + j] + hopfgl::mul(a[i], b[j]);
        }
    }
    return r;
}

// 1 / p for p with constant term 1, first `keep` coefficients.
inline Dense dense_inverse(const Dense &p, std::size_t keep)
{
    Dense q(keep, PolyElement(p.front().ring()));
    q[0] = PolyElement(p.front().ring(), 1);
    for (std::size_t k = 1; k < keep; ++k) {
        PolyElement acc(p.front().ring());
        for (std::size_t j = 1; j <= k && j < p.size(); ++j) {
            acc = acc + hopfgl::mul(p[j], q[k - j]);
        }
        q[k] = -acc;
    }
    return q;
}

// Lagrange inversion: [x^n] f^{-1} = (1/n) [x^{n-1}] (x / f(x))^n, for f with
// linear coefficient 1.
inline hopfgl::Series1 lagrange_reversion(const hopfgl::Series1 &f)
{
    const auto &ring = f.ring();
    const unsigned order = f.order();
    Dense f_over_x(order, PolyElement(ring));
    for (unsigned k = 1; k <= order; ++k) {
        f_over_x[k - 1] = f.coefficient({k});
    }
    const auto x_over_f = dense_inverse(f_over_x, order);
    hopfgl::Series1 g(ring, order);
    Dense pw(order, PolyElement(ring));
    pw[0] = PolyElement(ring, 1);
    for (unsigned n = 1; n <= order; ++n) {
        pw = dense_multiply(pw, x_over_f, order);
        g.set({n}, Rational(1, n) * pw[n - 1]);
    }
    return g;
}

// (1 + x)^n - 1 via generalised binomial coefficients, integers only.
inline hopfgl::Series1 binomial_oracle(int n, unsigned order)
{
    const auto &q = hopfgl::rationals();
    hopfgl::Series1 s(q, order);
    for (unsigned k = 1; k <= order; ++k) {
        mpz_class num = 1;
        mpz_class den = 1;
        for (unsigned i = 0; i < k; ++i) {
            num *= n - static_cast<int>(i);
            den *= i + 1;
        }
        const Rational c = hopfgl::make_rational(num, den);
        if (c != 0) {
            s.set({k}, PolyElement(q, c));
        }
    }
    return s;
}

// For the beta instance, (n)(b_k) = [t^k] B(t)^n with B(t) = 1 + sum b_i t^i.
inline PolyElement beta_power_image(const hopfgl::HopfDescriptor &h, int n, unsigned k)
{
    const auto &c = h.carrier();
    const std::size_t keep = k + 1;
    Dense b(keep, PolyElement(c));
    b[0] = PolyElement(c, 1);
    for (unsigned i = 1; i < keep; ++i) {
        b[i] = PolyElement::generator(c, c->base_count() + i - 1);
    }
    const Dense factor = n >= 0 ? b : dense_inverse(b, keep);
    Dense r(keep, PolyElement(c));
    r[0] = PolyElement(c, 1);
    for (int i = 0; i < std::abs(n); ++i) {
        r = dense_multiply(r, factor, keep);
    }
    return r[k];
}

// Random element of `ring` with up to `terms` terms of weight <= max_weight
// and small integer or half-integer coefficients.
inline PolyElement random_poly(const Ring &ring, std::mt19937 &rng, int terms, long max_weight)
{
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> den(1, 2);
    std::uniform_int_distribution<std::size_t> gen(0, ring->size() == 0 ? 0 : ring->size() - 1);
    std::uniform_int_distribution<int> factors(0, 3);
    std::vector<PolyElement::Term> out;
    for (int t = 0; t < terms; ++t) {
        std::vector<hopfgl::Monomial::Power> powers;
        const int nf = ring->size() == 0 ? 0 : factors(rng);
        for (int f = 0; f < nf; ++f) {
            powers.emplace_back(static_cast<std::uint32_t>(gen(rng)), 1U);
        }
        hopfgl::Monomial m(*ring, powers);
        if (m.weight() > max_weight) {
            continue;
        }
        out.push_back({m, hopfgl::make_rational(coef(rng), den(rng))});
    }
    return PolyElement::from_terms(ring, std::move(out));
}

// Random homogeneous element of the given weight in the Hopf generators of a
// carrier (plus base generators), built from random products.
inline PolyElement random_homogeneous(const Ring &ring, std::mt19937 &rng, long weight, int terms)
{
    std::uniform_int_distribution<int> coef(-2, 2);
    std::uniform_int_distribution<std::size_t> gen(0, ring->size() - 1);
    std::vector<PolyElement::Term> out;
    for (int t = 0; t < terms; ++t) {
        std::vector<hopfgl::Monomial::Power> powers;
        long w = 0;
        for (int guard = 0; guard < 64 && w < weight; ++guard) {
            const auto g = gen(rng);
            if (w + ring->generator(g).weight <= weight) {
                powers.emplace_back(static_cast<std::uint32_t>(g), 1U);
                w += ring->generator(g).weight;
            }
        }
        if (w == weight) {
            out.push_back({hopfgl::Monomial(*ring, powers), Rational(coef(rng))});
        }
    }
    return PolyElement::from_terms(ring, std::move(out));
}

template <std::size_t Vars>
hopfgl::TruncatedSeries<Vars> random_series(const Ring &ring, unsigned order, std::mt19937 &rng, bool monic = false)
{
    hopfgl::TruncatedSeries<Vars> s(ring, order);
    const auto &layout = s.layout();
    for (std::size_t i = 0; i < layout.size(); ++i) {
        s.set(layout.tuple(i), random_poly(ring, rng, 2, 3));
    }
    if (monic) {
        hopfgl::Exponents<Vars> e{};
        e[0] = 1;
        s.set(e, PolyElement(ring, 1));
    }
    return s;
}

} // namespace oracle

#endif
