#ifndef HOPFGL_HOPFEXT_HPP
#define HOPFGL_HOPFEXT_HPP

#include <optional>
#include <string>
#include <utility>

#include "hopfgl/fgl.hpp"
#include "hopfgl/hopf.hpp"

namespace hopfgl
{

// A two-variable series with coefficients in H (x)_R H together with the
// base law it is meant to extend. Nothing is enforced at construction; the
// extension and unit-slot conditions are separate predicates.
class HopfFormalGroup
{
public:
    HopfFormalGroup(Hopf hopf, FormalGroupLaw base, Series2 body);

    const Hopf &hopf() const noexcept { return hopf_; }
    const FormalGroupLaw &base() const noexcept { return base_; }
    const Series2 &body() const noexcept { return body_; }
    unsigned order() const noexcept { return body_.order(); }

    friend bool operator==(const HopfFormalGroup &a, const HopfFormalGroup &b)
    {
        return a.hopf_ == b.hopf_ && a.body_ == b.body_;
    }

private:
    Hopf hopf_;
    FormalGroupLaw base_;
    Series2 body_;
};

// A one-variable series with coefficients in H.
class CoveringSeries
{
public:
    CoveringSeries(Hopf hopf, Series1 series);

    const Hopf &hopf() const noexcept { return hopf_; }
    const Series1 &series() const noexcept { return series_; }
    unsigned order() const noexcept { return series_.order(); }

    friend bool operator==(const CoveringSeries &a, const CoveringSeries &b)
    {
        return a.hopf_ == b.hopf_ && a.series_ == b.series_;
    }

private:
    Hopf hopf_;
    Series1 series_;
};

// A law over R seen in H (x) H via r -> r (1 (x) 1).
Series2 embed_base_series(const Series2 &law, const HopfDescriptor &hopf);

// body = F with every coefficient embedded via 1 (x) 1.
HopfFormalGroup trivial_extension(const FormalGroupLaw &law, const Hopf &hopf);

// (eps (x) eps) body == F.
bool is_extension(const HopfFormalGroup &g);
std::optional<std::string> extension_discrepancy(const HopfFormalGroup &g);

// (eps (x) id) body(0, v) == v and (id (x) eps) body(u, 0) == u.
bool unit_slots_hold(const HopfFormalGroup &g);
std::optional<std::string> unit_slot_discrepancy(const HopfFormalGroup &g);

// Both sides of (Delta Phi)(G1(u, v)) = G2(Phi(u) (x) 1, 1 (x) Phi(v)).
std::pair<Series2, Series2> hopf_hom_sides(const CoveringSeries &phi, const HopfFormalGroup &source,
                                           const HopfFormalGroup &target);
bool is_hopf_hom(const CoveringSeries &phi, const HopfFormalGroup &source, const HopfFormalGroup &target);

// eps applied coefficientwise: the homomorphism over R that phi covers.
Series1 project(const CoveringSeries &phi);

// body <- ((f (x) f) body) for an endomorphism f of H. Requires a
// cocommutative descriptor.
HopfFormalGroup twist_by(const HopfFormalGroup &g, const AlgebraMorphism &f);

// twist_by with the convolution power (n).
HopfFormalGroup twist(const HopfFormalGroup &g, int n);

// b = x + sum_{i=1}^{order-1} b_i x^{i+1} using the first Hopf generators.
CoveringSeries default_twist_series(const Hopf &hopf, unsigned order);

// body = (Delta b)(F(bbar_L(u), bbar_R(v))) with bbar = reversion(b).
HopfFormalGroup canonical_extension(const FormalGroupLaw &law, const Hopf &hopf, const CoveringSeries &b);

// Phi(n) = ((n) b)(phi(n)(bbar(x))), a homomorphism from the canonical
// extension to its twist by (n) covering the power system phi(n).
CoveringSeries phi_n(const FormalGroupLaw &law, const Hopf &hopf, const CoveringSeries &b, int n);

} // namespace hopfgl

#endif
