#include "hopfgl/rational.hpp"

#include <cctype>

namespace hopfgl
{

Rational make_rational(const mpz_class &num, const mpz_class &den)
{
    if (den == 0) {
        throw PreconditionError("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational &q)
{
    Rational c(q);
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_display_string(const Rational &q)
{
    Rational c(q);
    c.canonicalize();
    if (c.get_den() == 1) {
        return c.get_num().get_str();
    }
    return to_string(c);
}

namespace
{

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    std::string n(num);
    if (n.front() == '+') {
        n.erase(0, 1);
    }
    mpz_class p(n, 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    Rational q(p, d);
    q.canonicalize();
    return q;
}

} // namespace hopfgl
