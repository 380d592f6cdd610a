#ifndef HOPFGL_SERIES_HPP
#define HOPFGL_SERIES_HPP

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hopfgl/error.hpp"
#include "hopfgl/morphism.hpp"
#include "hopfgl/poly.hpp"

namespace hopfgl
{

template <std::size_t Vars>
using Exponents = std::array<unsigned, Vars>;

template <std::size_t Vars>
unsigned total_degree(const Exponents<Vars> &e) noexcept
{
    unsigned d = 0;
    for (auto x : e) {
        d += x;
    }
    return d;
}

namespace detail
{

// Enumeration of exponent tuples with 1 <= total degree <= order, in
// graded-lex order (u^2, u*v, v^2 for two variables), plus a dense lookup
// table. Shared between all series of the same shape.
template <std::size_t Vars>
class SeriesLayout
{
public:
    explicit SeriesLayout(unsigned order) : order_(order)
    {
        std::size_t table = 1;
        for (std::size_t v = 0; v < Vars; ++v) {
            table *= order + 1;
        }
        lookup_.assign(table, -1);
        degree_begin_.assign(order + 2, 0);
        for (unsigned d = 1; d <= order; ++d) {
            degree_begin_[d] = tuples_.size();
            Exponents<Vars> e{};
            emit(e, 0, d);
        }
        degree_begin_[order + 1] = tuples_.size();
        degree_begin_[0] = 0;
    }

    static std::shared_ptr<const SeriesLayout> get(unsigned order)
    {
        static std::mutex m;
        static std::map<unsigned, std::shared_ptr<const SeriesLayout>> cache;
        std::lock_guard lock(m);
        auto &slot = cache[order];
        if (!slot) {
            slot = std::make_shared<SeriesLayout>(order);
        }
        return slot;
    }

    unsigned order() const noexcept { return order_; }
    std::size_t size() const noexcept { return tuples_.size(); }
    const Exponents<Vars> &tuple(std::size_t i) const { return tuples_[i]; }
    // Index range [begin, end) of tuples with total degree d.
    std::size_t degree_begin(unsigned d) const { return degree_begin_[d]; }
    std::size_t degree_end(unsigned d) const { return degree_begin_[d + 1]; }

    // -1 when the tuple is outside the truncation (or the zero tuple).
    long index(const Exponents<Vars> &e) const noexcept
    {
        std::size_t flat = 0;
        for (std::size_t v = 0; v < Vars; ++v) {
            if (e[v] > order_) {
                return -1;
            }
            flat = flat * (order_ + 1) + e[v];
        }
        return lookup_[flat];
    }

private:
    void emit(Exponents<Vars> &e, std::size_t var, unsigned remaining)
    {
        if (var + 1 == Vars) {
            e[var] = remaining;
            std::size_t flat = 0;
            for (std::size_t v = 0; v < Vars; ++v) {
                flat = flat * (order_ + 1) + e[v];
            }
            lookup_[flat] = static_cast<long>(tuples_.size());
            tuples_.push_back(e);
            return;
        }
        for (unsigned k = remaining + 1; k-- > 0;) {
            e[var] = k;
            emit(e, var + 1, remaining - k);
        }
    }

    unsigned order_;
    std::vector<Exponents<Vars>> tuples_;
    std::vector<long> lookup_;
    std::vector<std::size_t> degree_begin_;
};

} // namespace detail

// Truncated power series in `Vars` variables with zero constant term and
// coefficients in a polynomial ring: sum of c_e * x^e over 1 <= |e| <= order.
template <std::size_t Vars>
class TruncatedSeries
{
public:
    using Layout = detail::SeriesLayout<Vars>;

    TruncatedSeries(Ring ring, unsigned order) : ring_(std::move(ring)), layout_(Layout::get(order)), zero_(ring_)
    {
        if (order < 1) {
            throw PreconditionError("truncation order must be at least 1");
        }
        coeffs_.assign(layout_->size(), zero_);
    }

    // The coordinate function x_var.
    static TruncatedSeries variable(Ring ring, unsigned order, std::size_t var = 0)
    {
        TruncatedSeries s(ring, order);
        Exponents<Vars> e{};
        e.at(var) = 1;
        s.set(e, PolyElement(ring, 1));
        return s;
    }

    const Ring &ring() const noexcept { return ring_; }
    unsigned order() const noexcept { return layout_->order(); }
    const Layout &layout() const noexcept { return *layout_; }

    // Zero for tuples beyond the truncation.
    const PolyElement &coefficient(const Exponents<Vars> &e) const
    {
        const long i = layout_->index(e);
        return i < 0 ? zero_ : coeffs_[static_cast<std::size_t>(i)];
    }
    const PolyElement &coefficient_at(std::size_t index) const { return coeffs_[index]; }

    // Tuples beyond the truncation are silently dropped; the zero tuple is
    // rejected since series carry no constant term.
    void set(const Exponents<Vars> &e, PolyElement c)
    {
        require_same_ring(c.ring(), ring_, "series coefficient");
        if (total_degree<Vars>(e) == 0) {
            throw PreconditionError("series carry no constant term");
        }
        const long i = layout_->index(e);
        if (i >= 0) {
            coeffs_[static_cast<std::size_t>(i)] = std::move(c);
        }
    }
    void add_at(std::size_t index, const PolyElement &c) { coeffs_[index] += c; }

    bool is_zero() const
    {
        for (const auto &c : coeffs_) {
            if (!c.is_zero()) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        return a.ring_ == b.ring_ && a.order() == b.order() && a.coeffs_ == b.coeffs_;
    }

private:
    Ring ring_;
    std::shared_ptr<const Layout> layout_;
    PolyElement zero_;
    std::vector<PolyElement> coeffs_;
};

using Series1 = TruncatedSeries<1>;
using Series2 = TruncatedSeries<2>;
using Series3 = TruncatedSeries<3>;

// Drop (or keep) terms so that the result has truncation order `order`.
template <std::size_t Vars>
TruncatedSeries<Vars> truncate(const TruncatedSeries<Vars> &s, unsigned order)
{
    TruncatedSeries<Vars> r(s.ring(), order);
    const unsigned top = std::min(order, s.order());
    for (std::size_t i = 0; i < s.layout().degree_end(top); ++i) {
        if (!s.coefficient_at(i).is_zero()) {
            r.set(s.layout().tuple(i), s.coefficient_at(i));
        }
    }
    return r;
}

template <std::size_t Vars>
TruncatedSeries<Vars> operator+(const TruncatedSeries<Vars> &a, const TruncatedSeries<Vars> &b)
{
    require_same_ring(a.ring(), b.ring(), "series add");
    const unsigned order = std::min(a.order(), b.order());
    TruncatedSeries<Vars> r = truncate(a, order);
    for (std::size_t i = 0; i < r.layout().size(); ++i) {
        r.add_at(i, b.coefficient_at(i));
    }
    return r;
}

template <std::size_t Vars>
TruncatedSeries<Vars> operator-(const TruncatedSeries<Vars> &a)
{
    TruncatedSeries<Vars> r(a.ring(), a.order());
    for (std::size_t i = 0; i < a.layout().size(); ++i) {
        r.add_at(i, -a.coefficient_at(i));
    }
    return r;
}

template <std::size_t Vars>
TruncatedSeries<Vars> operator-(const TruncatedSeries<Vars> &a, const TruncatedSeries<Vars> &b)
{
    return a + (-b);
}

// Coefficientwise product with a ring element.
template <std::size_t Vars>
TruncatedSeries<Vars> operator*(const PolyElement &c, const TruncatedSeries<Vars> &a)
{
    require_same_ring(c.ring(), a.ring(), "series scale");
    TruncatedSeries<Vars> r(a.ring(), a.order());
    if (c.is_zero()) {
        return r;
    }
    for (std::size_t i = 0; i < a.layout().size(); ++i) {
        if (!a.coefficient_at(i).is_zero()) {
            r.add_at(i, mul(c, a.coefficient_at(i)));
        }
    }
    return r;
}

// Truncated Cauchy product; the result has order min(a.order, b.order).
template <std::size_t Vars>
TruncatedSeries<Vars> operator*(const TruncatedSeries<Vars> &a, const TruncatedSeries<Vars> &b)
{
    require_same_ring(a.ring(), b.ring(), "series mul");
    const unsigned order = std::min(a.order(), b.order());
    TruncatedSeries<Vars> r(a.ring(), order);
    const auto &la = a.layout();
    const auto &lb = b.layout();
    // Accumulate raw terms per output slot; normalise once at the end.
    std::vector<std::vector<PolyElement::Term>> acc(r.layout().size());
    for (unsigned da = 1; da < order; ++da) {
        for (std::size_t i = la.degree_begin(da); i < la.degree_end(da); ++i) {
            const auto &ca = a.coefficient_at(i);
            if (ca.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < lb.degree_end(order - da); ++j) {
                const auto &cb = b.coefficient_at(j);
                if (cb.is_zero()) {
                    continue;
                }
                Exponents<Vars> e = la.tuple(i);
                for (std::size_t v = 0; v < Vars; ++v) {
                    e[v] += lb.tuple(j)[v];
                }
                auto &slot = acc[static_cast<std::size_t>(r.layout().index(e))];
                for (const auto &s : ca.terms()) {
                    for (const auto &t : cb.terms()) {
                        slot.push_back({s.monomial * t.monomial, s.coefficient * t.coefficient});
                    }
                }
            }
        }
    }
    for (std::size_t k = 0; k < acc.size(); ++k) {
        if (!acc[k].empty()) {
            r.set(r.layout().tuple(k), PolyElement::from_terms(a.ring(), std::move(acc[k])));
        }
    }
    return r;
}

// Apply an algebra morphism to every coefficient.
template <std::size_t Vars>
TruncatedSeries<Vars> map_coeffs(const TruncatedSeries<Vars> &s, const AlgebraMorphism &f)
{
    require_same_ring(s.ring(), f.source(), "map_coeffs");
    TruncatedSeries<Vars> r(f.target(), s.order());
    for (std::size_t i = 0; i < s.layout().size(); ++i) {
        if (!s.coefficient_at(i).is_zero()) {
            r.set(s.layout().tuple(i), apply_map(s.coefficient_at(i), f));
        }
    }
    return r;
}

// Reinterpret a series in `From` variables as one in `To` variables, variable
// v going to target[v].
template <std::size_t To, std::size_t From>
TruncatedSeries<To> lift(const TruncatedSeries<From> &s, const std::array<std::size_t, From> &target)
{
    TruncatedSeries<To> r(s.ring(), s.order());
    for (std::size_t i = 0; i < s.layout().size(); ++i) {
        if (s.coefficient_at(i).is_zero()) {
            continue;
        }
        Exponents<To> e{};
        for (std::size_t v = 0; v < From; ++v) {
            e.at(target[v]) += s.layout().tuple(i)[v];
        }
        r.set(e, s.coefficient_at(i));
    }
    return r;
}

// Successive powers g, g^2, ..., g^count.
template <std::size_t Vars>
std::vector<TruncatedSeries<Vars>> powers(const TruncatedSeries<Vars> &g, unsigned count)
{
    std::vector<TruncatedSeries<Vars>> out;
    out.reserve(count);
    if (count == 0) {
        return out;
    }
    out.push_back(g);
    for (unsigned k = 1; k < count; ++k) {
        out.push_back(out.back() * g);
    }
    return out;
}

// outer(inner(x)): a one-variable series evaluated on any series without
// constant term. Order is min of the two orders.
template <std::size_t Vars>
TruncatedSeries<Vars> evaluate(const Series1 &outer, const TruncatedSeries<Vars> &inner)
{
    require_same_ring(outer.ring(), inner.ring(), "evaluate");
    const unsigned order = std::min(outer.order(), inner.order());
    const auto g = truncate(inner, order);
    TruncatedSeries<Vars> r(inner.ring(), order);
    const auto gp = powers(g, order);
    for (unsigned k = 1; k <= order; ++k) {
        const auto &c = outer.coefficient({k});
        if (!c.is_zero()) {
            r = r + c * gp[k - 1];
        }
    }
    return r;
}

// outer(first, second): a two-variable series with both slots filled. Uses
// outer = sum_j c_0j s^j + sum_i f^i (c_i0 + sum_j c_ij s^j).
template <std::size_t Vars>
TruncatedSeries<Vars> evaluate(const Series2 &outer, const TruncatedSeries<Vars> &first,
                               const TruncatedSeries<Vars> &second)
{
    require_same_ring(outer.ring(), first.ring(), "evaluate");
    require_same_ring(outer.ring(), second.ring(), "evaluate");
    const unsigned order = std::min({outer.order(), first.order(), second.order()});
    const auto fp = powers(truncate(first, order), order);
    const auto sp = powers(truncate(second, order), order);
    TruncatedSeries<Vars> r(outer.ring(), order);
    for (unsigned j = 1; j <= order; ++j) {
        const auto &c = outer.coefficient({0, j});
        if (!c.is_zero()) {
            r = r + c * sp[j - 1];
        }
    }
    for (unsigned i = 1; i <= order; ++i) {
        const auto &c = outer.coefficient({i, 0});
        if (!c.is_zero()) {
            r = r + c * fp[i - 1];
        }
        if (i == order) {
            break;
        }
        TruncatedSeries<Vars> tail(outer.ring(), order - i);
        bool any = false;
        for (unsigned j = 1; i + j <= order; ++j) {
            const auto &cij = outer.coefficient({i, j});
            if (!cij.is_zero()) {
                tail = tail + cij * truncate(sp[j - 1], order - i);
                any = true;
            }
        }
        if (any) {
            r = r + truncate(fp[i - 1] * truncate(tail, order), order);
        }
    }
    return r;
}

// Named entry points over one and two variables.

// outer(inner(x)).
Series1 compose1(const Series1 &outer, const Series1 &inner);

// Compositional inverse of a series whose linear coefficient is exactly 1.
// Throws PreconditionError otherwise.
Series1 reversion(const Series1 &f);

// F(g(u), h(v)).
Series2 subst2(const Series2 &outer, const Series1 &g, const Series1 &h);

// phi(F(u, v)).
Series2 subst_into1(const Series1 &phi, const Series2 &inner);

// First coefficient (graded-lex) where a and b differ, rendered as
// "u^2*v: 3 vs 0"; nullopt when equal. Orders are compared as well.
template <std::size_t Vars>
std::optional<std::string> first_difference(const TruncatedSeries<Vars> &a, const TruncatedSeries<Vars> &b);

std::string monomial_name(const Exponents<1> &e);
std::string monomial_name(const Exponents<2> &e);
std::string monomial_name(const Exponents<3> &e);

// "3*x + 3*x^2 + x^3", "(b1^2 - b2)*u*v", "0".
template <std::size_t Vars>
std::string to_string(const TruncatedSeries<Vars> &s)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < s.layout().size(); ++i) {
        const auto &c = s.coefficient_at(i);
        if (c.is_zero()) {
            continue;
        }
        const auto text = to_string(c);
        const bool single = c.terms().size() == 1;
        const bool negative = single && text.front() == '-';
        std::string body = negative ? text.substr(1) : text;
        if (first) {
            os << (negative ? "-" : "");
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const auto name = monomial_name(s.layout().tuple(i));
        if (body == "1") {
            os << name;
        } else if (single) {
            os << body << '*' << name;
        } else {
            os << '(' << body << ")*" << name;
        }
    }
    return first ? std::string("0") : os.str();
}

template <std::size_t Vars>
std::optional<std::string> first_difference(const TruncatedSeries<Vars> &a, const TruncatedSeries<Vars> &b)
{
    if (a.ring() != b.ring()) {
        return std::string("different coefficient rings");
    }
    if (a.order() != b.order()) {
        return "truncation orders " + std::to_string(a.order()) + " vs " + std::to_string(b.order());
    }
    for (std::size_t i = 0; i < a.layout().size(); ++i) {
        if (!(a.coefficient_at(i) == b.coefficient_at(i))) {
            return monomial_name(a.layout().tuple(i)) + ": " + to_string(a.coefficient_at(i)) + " vs " +
                   to_string(b.coefficient_at(i));
        }
    }
    return std::nullopt;
}

} // namespace hopfgl

#endif
