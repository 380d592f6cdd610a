#ifndef HOPFGL_FGL_HPP
#define HOPFGL_FGL_HPP

#include <string>

#include "hopfgl/report.hpp"
#include "hopfgl/series.hpp"

namespace hopfgl
{

// A two-variable series F(u, v) over a base ring, meant to satisfy the formal
// group law axioms to its truncation order. Construction does not validate;
// use validate_fgl.
class FormalGroupLaw
{
public:
    FormalGroupLaw(Series2 law, std::string name = "custom");

    const Ring &ring() const noexcept { return law_.ring(); }
    unsigned order() const noexcept { return law_.order(); }
    const Series2 &series() const noexcept { return law_; }
    const std::string &name() const noexcept { return name_; }

private:
    Series2 law_;
    std::string name_;
};

// u + v over Q.
FormalGroupLaw additive(unsigned order);

// u + v + uv over Q.
FormalGroupLaw multiplicative(unsigned order);

// F(u, v) = exp(log u + log v) with exp the reversion of log. The logarithm
// must have linear coefficient 1 and coefficients in a base ring.
FormalGroupLaw from_logarithm(const Series1 &logarithm, std::string name = "logarithm");

// Rational model of the geometric cobordism law: log x = x + sum m_k x^{k+1}
// over Q[m_1, ..., m_{order-1}], weight(m_k) = k.
FormalGroupLaw mishchenko_model(unsigned order);

// Checks "unit-left" F(x,0)=x, "unit-right" F(0,y)=y, "commutativity" and
// "associativity" (three-variable expansion).
Report validate_fgl(const FormalGroupLaw &law);

// theta with F(x, theta(x)) = 0, solved one degree at a time.
Series1 inverse_series(const FormalGroupLaw &law);

// Power system: phi(1) = x, phi(n) = F(x, phi(n-1)); phi(0) = 0,
// phi(-1) = theta, phi(-n) = F(theta, phi(-(n-1))).
Series1 n_series(const FormalGroupLaw &law, int n);

// phi(F1(u, v)) == F2(phi(u), phi(v)) to the truncation order.
bool is_fgl_hom(const Series1 &phi, const FormalGroupLaw &source, const FormalGroupLaw &target);

} // namespace hopfgl

#endif
