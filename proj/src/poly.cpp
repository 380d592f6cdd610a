#include "hopfgl/poly.hpp"

#include <algorithm>
#include <sstream>

#include "hopfgl/error.hpp"

namespace hopfgl
{

Monomial::Monomial(const RingDescriptor &ring, std::size_t index, std::uint32_t exponent)
{
    if (index >= ring.size()) {
        throw PreconditionError("generator index out of range");
    }
    if (exponent > 0) {
        powers_.emplace_back(static_cast<std::uint32_t>(index), exponent);
        weight_ = ring.generator(index).weight * static_cast<long>(exponent);
    }
}

Monomial::Monomial(const RingDescriptor &ring, std::vector<Power> powers)
{
    std::sort(powers.begin(), powers.end());
    for (const auto &[index, exponent] : powers) {
        if (index >= ring.size()) {
            throw PreconditionError("generator index out of range");
        }
        if (exponent == 0) {
            continue;
        }
        if (!powers_.empty() && powers_.back().first == index) {
            powers_.back().second += exponent;
        } else {
            powers_.emplace_back(index, exponent);
        }
        weight_ += ring.generator(index).weight * static_cast<long>(exponent);
    }
}

std::uint32_t Monomial::exponent(std::size_t index) const noexcept
{
    for (const auto &[i, e] : powers_) {
        if (i == index) {
            return e;
        }
    }
    return 0;
}

std::uint32_t Monomial::degree() const noexcept
{
    std::uint32_t d = 0;
    for (const auto &p : powers_) {
        d += p.second;
    }
    return d;
}

Monomial operator*(const Monomial &a, const Monomial &b)
{
    Monomial r;
    r.weight_ = a.weight_ + b.weight_;
    r.powers_.reserve(a.powers_.size() + b.powers_.size());
    auto i = a.powers_.begin();
    auto j = b.powers_.begin();
    while (i != a.powers_.end() && j != b.powers_.end()) {
        if (i->first < j->first) {
            r.powers_.push_back(*i++);
        } else if (j->first < i->first) {
            r.powers_.push_back(*j++);
        } else {
            r.powers_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    r.powers_.insert(r.powers_.end(), i, a.powers_.end());
    r.powers_.insert(r.powers_.end(), j, b.powers_.end());
    return r;
}

bool precedes(const Monomial &a, const Monomial &b) noexcept
{
    if (a.weight() != b.weight()) {
        return a.weight() < b.weight();
    }
    auto pa = a.powers();
    auto pb = b.powers();
    std::size_t i = 0;
    for (; i < pa.size() && i < pb.size(); ++i) {
        if (pa[i].first != pb[i].first) {
            // a carries a generator with lower index that b lacks
            return pa[i].first < pb[i].first;
        }
        if (pa[i].second != pb[i].second) {
            return pa[i].second > pb[i].second;
        }
    }
    return i < pa.size() && i == pb.size();
}

namespace
{

bool term_precedes(const PolyElement::Term &a, const PolyElement::Term &b) noexcept
{
    return precedes(a.monomial, b.monomial);
}

// Merge two canonical term lists, adding (sign = +1) or subtracting.
std::vector<PolyElement::Term> merge_terms(std::span<const PolyElement::Term> a, std::span<const PolyElement::Term> b,
                                           bool subtract)
{
    std::vector<PolyElement::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && precedes(a[i].monomial, b[j].monomial))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || precedes(b[j].monomial, a[i].monomial)) {
            out.push_back(b[j++]);
            if (subtract) {
                out.back().coefficient = -out.back().coefficient;
            }
        } else {
            Rational c = subtract ? Rational(a[i].coefficient - b[j].coefficient)
                                  : Rational(a[i].coefficient + b[j].coefficient);
            if (c != 0) {
                out.push_back({a[i].monomial, std::move(c)});
            }
            ++i;
            ++j;
        }
    }
    return out;
}

void normalize(std::vector<PolyElement::Term> &terms)
{
    for (auto &t : terms) {
        t.coefficient.canonicalize();
    }
    std::sort(terms.begin(), terms.end(), term_precedes);
    std::size_t w = 0;
    for (std::size_t r = 0; r < terms.size();) {
        std::size_t s = r + 1;
        Rational c = terms[r].coefficient;
        while (s < terms.size() && terms[s].monomial == terms[r].monomial) {
            c += terms[s].coefficient;
            ++s;
        }
        if (c != 0) {
            if (w != r) {
                terms[w].monomial = std::move(terms[r].monomial);
            }
            terms[w].coefficient = std::move(c);
            ++w;
        }
        r = s;
    }
    terms.resize(w);
}

} // namespace

void require_same_ring(const Ring &a, const Ring &b, std::string_view what)
{
    if (a != b) {
        throw RingMismatch(std::string(what) + ": operands live in different rings");
    }
}

PolyElement::PolyElement(Ring ring) : ring_(std::move(ring))
{
    if (!ring_) {
        throw PreconditionError("polynomial without a ring");
    }
}

PolyElement::PolyElement(Ring ring, Rational constant) : PolyElement(std::move(ring))
{
    constant.canonicalize();
    if (constant != 0) {
        terms_.push_back({Monomial{}, std::move(constant)});
    }
}

PolyElement PolyElement::generator(Ring ring, std::size_t index)
{
    PolyElement p(ring);
    p.terms_.push_back({Monomial(*ring, index), Rational(1)});
    return p;
}

PolyElement PolyElement::generator(Ring ring, std::string_view name)
{
    const auto index = ring->index_of(name);
    if (!index) {
        throw PreconditionError("unknown generator '" + std::string(name) + "'");
    }
    return generator(std::move(ring), *index);
}

PolyElement PolyElement::from_terms(Ring ring, std::vector<Term> terms)
{
    PolyElement p(std::move(ring));
    normalize(terms);
    p.terms_ = std::move(terms);
    return p;
}

Rational PolyElement::constant_term() const
{
    if (!terms_.empty() && terms_.front().monomial.is_one()) {
        return terms_.front().coefficient;
    }
    return 0;
}

long PolyElement::max_weight() const noexcept
{
    return terms_.empty() ? -1 : terms_.back().monomial.weight();
}

bool PolyElement::is_homogeneous(long weight) const noexcept
{
    return std::all_of(terms_.begin(), terms_.end(), [&](const Term &t) { return t.monomial.weight() == weight; });
}

PolyElement PolyElement::operator-() const
{
    PolyElement r(*this);
    for (auto &t : r.terms_) {
        t.coefficient = -t.coefficient;
    }
    return r;
}

PolyElement &PolyElement::operator+=(const PolyElement &other)
{
    require_same_ring(ring_, other.ring_, "add");
    if (other.terms_.empty()) {
        return *this;
    }
    terms_ = merge_terms(terms_, other.terms_, false);
    return *this;
}

PolyElement &PolyElement::operator-=(const PolyElement &other)
{
    require_same_ring(ring_, other.ring_, "sub");
    if (other.terms_.empty()) {
        return *this;
    }
    terms_ = merge_terms(terms_, other.terms_, true);
    return *this;
}

PolyElement &PolyElement::operator*=(const Rational &scalar)
{
    Rational s(scalar);
    s.canonicalize();
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &t : terms_) {
        t.coefficient *= s;
    }
    return *this;
}

bool operator==(const PolyElement &a, const PolyElement &b)
{
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
}

PolyElement add(const PolyElement &a, const PolyElement &b)
{
    PolyElement r(a);
    r += b;
    return r;
}

PolyElement sub(const PolyElement &a, const PolyElement &b)
{
    PolyElement r(a);
    r -= b;
    return r;
}

PolyElement mul(const PolyElement &a, const PolyElement &b)
{
    require_same_ring(a.ring(), b.ring(), "mul");
    if (a.is_zero() || b.is_zero()) {
        return PolyElement(a.ring());
    }
    std::vector<PolyElement::Term> products;
    products.reserve(a.terms().size() * b.terms().size());
    for (const auto &s : a.terms()) {
        for (const auto &t : b.terms()) {
            products.push_back({s.monomial * t.monomial, s.coefficient * t.coefficient});
        }
    }
    return PolyElement::from_terms(a.ring(), std::move(products));
}

PolyElement pow(const PolyElement &a, std::uint32_t exponent)
{
    PolyElement result(a.ring(), 1);
    PolyElement base = a;
    while (exponent > 0) {
        if (exponent & 1U) {
            result = mul(result, base);
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base = mul(base, base);
        }
    }
    return result;
}

PolyElement operator*(const Rational &s, const PolyElement &a)
{
    PolyElement r(a);
    r *= s;
    return r;
}

PolyElement truncate_above(const PolyElement &a, long max_weight)
{
    std::vector<PolyElement::Term> kept;
    for (const auto &t : a.terms()) {
        if (t.monomial.weight() <= max_weight) {
            kept.push_back(t);
        }
    }
    // already canonical; from_terms only re-sorts
    return PolyElement::from_terms(a.ring(), std::move(kept));
}

std::string to_string(const RingDescriptor &ring, const Monomial &m)
{
    if (m.is_one()) {
        return "1";
    }
    std::string out;
    for (const auto &[index, exponent] : m.powers()) {
        if (!out.empty()) {
            out += '*';
        }
        out += ring.generator(index).name;
        if (exponent > 1) {
            out += '^' + std::to_string(exponent);
        }
    }
    return out;
}

std::string to_string(const PolyElement &a)
{
    if (a.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &t : a.terms()) {
        Rational c = t.coefficient;
        if (first) {
            if (c < 0) {
                os << '-';
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        c = abs(c);
        if (t.monomial.is_one()) {
            os << to_display_string(c);
        } else {
            if (c != 1) {
                os << to_display_string(c) << '*';
            }
            os << to_string(*a.ring(), t.monomial);
        }
    }
    return os.str();
}

} // namespace hopfgl
