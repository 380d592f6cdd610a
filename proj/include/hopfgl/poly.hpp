#ifndef HOPFGL_POLY_HPP
#define HOPFGL_POLY_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopfgl/rational.hpp"
#include "hopfgl/ring.hpp"

namespace hopfgl
{

// Product of generator powers, stored sparsely as (generator index, exponent)
// pairs sorted by index. The total weight is cached.
class Monomial
{
public:
    using Power = std::pair<std::uint32_t, std::uint32_t>;

    Monomial() = default;
    Monomial(const RingDescriptor &ring, std::size_t index, std::uint32_t exponent = 1);
    Monomial(const RingDescriptor &ring, std::vector<Power> powers);

    long weight() const noexcept { return weight_; }
    std::span<const Power> powers() const noexcept { return powers_; }
    std::uint32_t exponent(std::size_t index) const noexcept;
    bool is_one() const noexcept { return powers_.empty(); }
    std::uint32_t degree() const noexcept;

    friend Monomial operator*(const Monomial &a, const Monomial &b);
    friend bool operator==(const Monomial &, const Monomial &) = default;

private:
    long weight_ = 0;
    std::vector<Power> powers_;
};

// Canonical term order: ascending weight, then lexicographic with the
// lower-indexed generator dominant (b1^2 precedes b2).
bool precedes(const Monomial &a, const Monomial &b) noexcept;

// Element of a graded polynomial ring over Q. Terms are kept in canonical
// order with no zero coefficients, so equality is structural.
class PolyElement
{
public:
    struct Term {
        Monomial monomial;
        Rational coefficient;

        friend bool operator==(const Term &, const Term &) = default;
    };

    explicit PolyElement(Ring ring);
    PolyElement(Ring ring, Rational constant);

    static PolyElement generator(Ring ring, std::size_t index);
    static PolyElement generator(Ring ring, std::string_view name);
    // Takes unsorted terms with possible repeats and zeros.
    static PolyElement from_terms(Ring ring, std::vector<Term> terms);

    const Ring &ring() const noexcept { return ring_; }
    std::span<const Term> terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational constant_term() const;
    // Largest monomial weight; -1 for zero.
    long max_weight() const noexcept;
    bool is_homogeneous(long weight) const noexcept;

    PolyElement operator-() const;
    PolyElement &operator+=(const PolyElement &other);
    PolyElement &operator-=(const PolyElement &other);
    PolyElement &operator*=(const Rational &scalar);

    friend bool operator==(const PolyElement &a, const PolyElement &b);

private:
    Ring ring_;
    std::vector<Term> terms_;
};

inline constexpr long no_weight_bound = std::numeric_limits<long>::max();

// Throw RingMismatch unless both operands live in the same ring.
PolyElement add(const PolyElement &a, const PolyElement &b);
PolyElement sub(const PolyElement &a, const PolyElement &b);
PolyElement mul(const PolyElement &a, const PolyElement &b);
PolyElement pow(const PolyElement &a, std::uint32_t exponent);
PolyElement truncate_above(const PolyElement &a, long max_weight);

inline PolyElement operator+(const PolyElement &a, const PolyElement &b) { return add(a, b); }
inline PolyElement operator-(const PolyElement &a, const PolyElement &b) { return sub(a, b); }
inline PolyElement operator*(const PolyElement &a, const PolyElement &b) { return mul(a, b); }
PolyElement operator*(const Rational &s, const PolyElement &a);

void require_same_ring(const Ring &a, const Ring &b, std::string_view what);

// "b1^2*b2 - 1/2*m1", "0" for zero. Deterministic.
std::string to_string(const PolyElement &a);
std::string to_string(const RingDescriptor &ring, const Monomial &m);

} // namespace hopfgl

#endif
