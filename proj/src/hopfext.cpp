#include "hopfgl/hopfext.hpp"

#include "hopfgl/error.hpp"

namespace hopfgl
{

namespace
{

void require_law_over_hopf_base(const FormalGroupLaw &law, const HopfDescriptor &hopf)
{
    if (law.ring() != hopf.base()) {
        throw RingMismatch("formal group law '" + law.name() + "' is not over the base ring of Hopf algebra '" +
                           hopf.name() + "'");
    }
}

void require_monic(const CoveringSeries &b)
{
    if (!(b.series().coefficient({1}) == PolyElement(b.series().ring(), 1))) {
        throw PreconditionError("twist series must have linear coefficient 1");
    }
}

// (eps (x) id) or (id (x) eps) : H (x) H -> H.
AlgebraMorphism collapse(const HopfDescriptor &hopf, bool keep_right)
{
    const auto id = AlgebraMorphism::identity(hopf.carrier());
    const auto scalar = compose(hopf.counit(), base_inclusion(hopf.base(), hopf.carrier()));
    return keep_right ? tensor_lift(scalar, id) : tensor_lift(id, scalar);
}

} // namespace

HopfFormalGroup::HopfFormalGroup(Hopf hopf, FormalGroupLaw base, Series2 body)
    : hopf_(std::move(hopf)), base_(std::move(base)), body_(std::move(body))
{
    require_law_over_hopf_base(base_, *hopf_);
    require_same_ring(body_.ring(), hopf_->tensor_square(), "extension body");
}

CoveringSeries::CoveringSeries(Hopf hopf, Series1 series) : hopf_(std::move(hopf)), series_(std::move(series))
{
    require_same_ring(series_.ring(), hopf_->carrier(), "covering series");
}

Series2 embed_base_series(const Series2 &law, const HopfDescriptor &hopf)
{
    return map_coeffs(law, base_inclusion(hopf.base(), hopf.tensor_square()));
}

HopfFormalGroup trivial_extension(const FormalGroupLaw &law, const Hopf &hopf)
{
    return {hopf, law, embed_base_series(law.series(), *hopf)};
}

std::optional<std::string> extension_discrepancy(const HopfFormalGroup &g)
{
    const auto &h = *g.hopf();
    const auto counit2 = tensor_lift(h.counit(), h.counit());
    return first_difference(map_coeffs(g.body(), counit2), truncate(g.base().series(), g.order()));
}

bool is_extension(const HopfFormalGroup &g)
{
    return !extension_discrepancy(g);
}

std::optional<std::string> unit_slot_discrepancy(const HopfFormalGroup &g)
{
    const auto &h = *g.hopf();
    const auto &carrier = h.carrier();
    const auto n = g.order();
    const Series1 zero(h.tensor_square(), n);
    const Series1 t = Series1::variable(h.tensor_square(), n);
    const Series1 x = Series1::variable(carrier, n);

    const auto on_v = map_coeffs(evaluate(g.body(), zero, t), collapse(h, true));
    if (auto d = first_difference(on_v, x)) {
        return "(eps (x) id) body(0, v) at " + *d;
    }
    const auto on_u = map_coeffs(evaluate(g.body(), t, zero), collapse(h, false));
    if (auto d = first_difference(on_u, x)) {
        return "(id (x) eps) body(u, 0) at " + *d;
    }
    return std::nullopt;
}

bool unit_slots_hold(const HopfFormalGroup &g)
{
    return !unit_slot_discrepancy(g);
}

std::pair<Series2, Series2> hopf_hom_sides(const CoveringSeries &phi, const HopfFormalGroup &source,
                                           const HopfFormalGroup &target)
{
    if (phi.hopf() != source.hopf() || phi.hopf() != target.hopf()) {
        throw RingMismatch("is_hopf_hom: Hopf descriptors differ");
    }
    const auto &h = *phi.hopf();
    auto lhs = subst_into1(map_coeffs(phi.series(), h.diagonal()), source.body());
    auto rhs = evaluate(target.body(), lift<2>(map_coeffs(phi.series(), left_embedding(h.carrier())), {0}),
                        lift<2>(map_coeffs(phi.series(), right_embedding(h.carrier())), {1}));
    return {std::move(lhs), std::move(rhs)};
}

bool is_hopf_hom(const CoveringSeries &phi, const HopfFormalGroup &source, const HopfFormalGroup &target)
{
    const auto [lhs, rhs] = hopf_hom_sides(phi, source, target);
    return lhs == rhs;
}

Series1 project(const CoveringSeries &phi)
{
    return map_coeffs(phi.series(), phi.hopf()->counit());
}

HopfFormalGroup twist_by(const HopfFormalGroup &g, const AlgebraMorphism &f)
{
    const auto &h = *g.hopf();
    if (!h.cocommutative()) {
        throw PreconditionError("twisting needs a cocommutative Hopf algebra ('" + h.name() + "' is not)");
    }
    return {g.hopf(), g.base(), map_coeffs(g.body(), tensor_square_map(h, f, f))};
}

HopfFormalGroup twist(const HopfFormalGroup &g, int n)
{
    return twist_by(g, conv_power(*g.hopf(), n));
}

CoveringSeries default_twist_series(const Hopf &hopf, unsigned order)
{
    const auto &carrier = hopf->carrier();
    if (carrier->hopf_count() + 1 < order) {
        throw PreconditionError("default twist series of order " + std::to_string(order) + " needs " +
                                std::to_string(order - 1) + " Hopf generators");
    }
    auto b = Series1::variable(carrier, order);
    for (unsigned i = 1; i < order; ++i) {
        b.set({i + 1}, PolyElement::generator(carrier, carrier->base_count() + i - 1));
    }
    return {hopf, std::move(b)};
}

HopfFormalGroup canonical_extension(const FormalGroupLaw &law, const Hopf &hopf, const CoveringSeries &b)
{
    require_law_over_hopf_base(law, *hopf);
    require_monic(b);
    const auto &h = *hopf;
    const unsigned n = std::min(law.order(), b.order());
    const auto bbar = reversion(truncate(b.series(), n));
    const auto left = lift<2>(map_coeffs(bbar, left_embedding(h.carrier())), {0});
    const auto right = lift<2>(map_coeffs(bbar, right_embedding(h.carrier())), {1});
    const auto inner = evaluate(embed_base_series(truncate(law.series(), n), h), left, right);
    const auto delta_b = map_coeffs(truncate(b.series(), n), h.diagonal());
    return {hopf, law, subst_into1(delta_b, inner)};
}

CoveringSeries phi_n(const FormalGroupLaw &law, const Hopf &hopf, const CoveringSeries &b, int n)
{
    require_law_over_hopf_base(law, *hopf);
    require_monic(b);
    const auto &h = *hopf;
    const unsigned order = std::min(law.order(), b.order());
    const auto bt = truncate(b.series(), order);
    const auto bbar = reversion(bt);
    const auto power = map_coeffs(n_series(law, n), base_inclusion(h.base(), h.carrier()));
    const auto twisted_b = map_coeffs(bt, conv_power(h, n));
    return {hopf, compose1(twisted_b, compose1(truncate(power, order), bbar))};
}

} // namespace hopfgl
