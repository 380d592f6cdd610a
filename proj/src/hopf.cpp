#include "hopfgl/hopf.hpp"

#include <algorithm>
#include <numeric>

#include "hopfgl/error.hpp"

namespace hopfgl
{

namespace
{

// Base generators fixed, Hopf generators sent to zero.
AlgebraMorphism kill_hopf_generators(const Ring &carrier, const Ring &target)
{
    std::vector<std::optional<PolyElement>> images;
    for (std::size_t i = 0; i < carrier->size(); ++i) {
        if (carrier->is_base_generator(i)) {
            images.emplace_back(PolyElement::generator(target, i));
        } else {
            images.emplace_back(PolyElement(target));
        }
    }
    return {carrier, target, std::move(images)};
}

AlgebraMorphism make_diagonal(const Ring &carrier, std::vector<PolyElement> diagonals)
{
    const auto &square = carrier->tensor_square();
    std::vector<std::optional<PolyElement>> images;
    for (std::size_t i = 0; i < carrier->base_count(); ++i) {
        images.emplace_back(PolyElement::generator(square, i));
    }
    for (auto &d : diagonals) {
        images.emplace_back(std::move(d));
    }
    return {carrier, square, std::move(images)};
}

std::string generator_name(const HopfDescriptor &h, std::size_t index)
{
    return h.carrier()->generator(index).name;
}

CheckResult check_per_generator(const HopfDescriptor &h, std::string name, const AlgebraMorphism &lhs,
                                const AlgebraMorphism &rhs)
{
    const auto &carrier = h.carrier();
    for (std::size_t i = carrier->base_count(); i < carrier->size(); ++i) {
        const auto g = PolyElement::generator(carrier, i);
        const auto a = apply_map(g, lhs);
        const auto b = apply_map(g, rhs);
        if (!(a == b)) {
            return {std::move(name), false, generator_name(h, i) + ": " + to_string(a) + " vs " + to_string(b)};
        }
    }
    return {std::move(name), true, ""};
}

// S on generators by induction on weight from mu o (S (x) id) o Delta = eta o eps:
// for Delta(g) = g (x) 1 + sum a' (x) a'' with a'' of positive weight,
// S(g) = -sum S(a') a''.
AlgebraMorphism derive_antipode(const HopfDescriptor &h)
{
    const auto &carrier = h.carrier();
    const auto &square = h.tensor_square();
    const std::size_t base = carrier->base_count();
    const std::size_t count = carrier->hopf_count();

    std::vector<std::optional<PolyElement>> images(carrier->size());
    for (std::size_t i = 0; i < base; ++i) {
        images[i] = PolyElement::generator(carrier, i);
    }
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return carrier->generator(base + a).weight < carrier->generator(base + b).weight;
    });

    for (const auto gi : order) {
        const auto &delta = *h.diagonal().image(base + gi);
        const AlgebraMorphism partial(carrier, carrier, images);
        std::vector<PolyElement::Term> acc;
        for (const auto &term : delta.terms()) {
            std::vector<Monomial::Power> left;
            std::vector<Monomial::Power> right;
            for (const auto &[index, exponent] : term.monomial.powers()) {
                if (index < base) {
                    left.emplace_back(index, exponent);
                } else if (index < square->copy_index(1, 0)) {
                    left.emplace_back(static_cast<std::uint32_t>(index - square->copy_index(0, 0) + base), exponent);
                } else {
                    right.emplace_back(static_cast<std::uint32_t>(index - square->copy_index(1, 0) + base), exponent);
                }
            }
            if (right.empty()) {
                continue;
            }
            const auto left_poly = PolyElement::from_terms(carrier, {{Monomial(*carrier, left), term.coefficient}});
            PolyElement s_left(carrier);
            try {
                s_left = apply_map(left_poly, partial);
            } catch (const MissingImage &) {
                throw PreconditionError("diagonal of '" + generator_name(h, base + gi) +
                                        "' is not graded; the antipode recursion cannot proceed");
            }
            const auto right_poly = PolyElement::from_terms(carrier, {{Monomial(*carrier, right), Rational(1)}});
            const auto contribution = mul(s_left, right_poly);
            acc.insert(acc.end(), contribution.terms().begin(), contribution.terms().end());
        }
        images[base + gi] = -PolyElement::from_terms(carrier, std::move(acc));
    }
    return {carrier, carrier, std::move(images)};
}

} // namespace

HopfDescriptor::HopfDescriptor(std::string name, Ring carrier, AlgebraMorphism diagonal, AlgebraMorphism counit,
                               AlgebraMorphism unit_counit, bool declared_cocommutative)
    : name_(std::move(name)), carrier_(std::move(carrier)), diagonal_(std::move(diagonal)),
      counit_(std::move(counit)), unit_counit_(std::move(unit_counit)),
      declared_cocommutative_(declared_cocommutative)
{
}

Hopf HopfDescriptor::create(Ring carrier, std::vector<PolyElement> diagonals, bool declared_cocommutative,
                            std::string name)
{
    if (!carrier || carrier->kind() != RingKind::hopf_carrier) {
        throw PreconditionError("Hopf descriptor needs a Hopf carrier ring");
    }
    if (diagonals.size() != carrier->hopf_count()) {
        throw PreconditionError("one diagonal per Hopf generator required");
    }
    for (const auto &d : diagonals) {
        require_same_ring(d.ring(), carrier->tensor_square(), "diagonal");
    }
    auto diagonal = make_diagonal(carrier, std::move(diagonals));
    auto counit = kill_hopf_generators(carrier, carrier->base());
    auto unit_counit = kill_hopf_generators(carrier, carrier);
    std::shared_ptr<HopfDescriptor> h(new HopfDescriptor(std::move(name), carrier, std::move(diagonal),
                                                         std::move(counit), std::move(unit_counit),
                                                         declared_cocommutative));
    h->validation_ = validate_hopf(*h);
    const auto *flag = h->validation_.find("cocommutativity-flag");
    h->cocommutative_ = declared_cocommutative && flag && flag->passed;
    if (h->validation_.passed()) {
        h->antipode_ = derive_antipode(*h);
    }
    return h;
}

const AlgebraMorphism &HopfDescriptor::antipode() const
{
    if (!antipode_) {
        throw PreconditionError("antipode requested for an invalid Hopf descriptor '" + name_ + "'");
    }
    return *antipode_;
}

Report validate_hopf(const HopfDescriptor &h)
{
    const auto &carrier = h.carrier();
    const auto &square = h.tensor_square();
    const auto id = AlgebraMorphism::identity(carrier);
    Report report;

    {
        CheckResult c{"connected", true, ""};
        for (std::size_t i = carrier->base_count(); i < carrier->size(); ++i) {
            if (carrier->generator(i).weight < 1) {
                c = {"connected", false, generator_name(h, i) + " has weight 0"};
                break;
            }
        }
        report.checks.push_back(c);
    }
    {
        CheckResult c{"graded", true, ""};
        for (std::size_t i = carrier->base_count(); i < carrier->size(); ++i) {
            if (!h.diagonal().image(i)->is_homogeneous(carrier->generator(i).weight)) {
                c = {"graded", false, generator_name(h, i) + ": " + to_string(*h.diagonal().image(i))};
                break;
            }
        }
        report.checks.push_back(c);
    }

    const auto scalar_counit = compose(h.counit(), base_inclusion(h.base(), carrier));
    report.checks.push_back(
        check_per_generator(h, "counit-left", compose(h.diagonal(), tensor_lift(id, scalar_counit)), id));
    report.checks.push_back(
        check_per_generator(h, "counit-right", compose(h.diagonal(), tensor_lift(scalar_counit, id)), id));

    const auto cube = make_tensor_power(carrier, 3);
    const auto e0 = copy_embedding(carrier, cube, 0);
    const auto e1 = copy_embedding(carrier, cube, 1);
    const auto e2 = copy_embedding(carrier, cube, 2);
    const auto outer_left = tensor_lift(square, {compose(h.diagonal(), tensor_lift(square, {e0, e1})), e2});
    const auto outer_right = tensor_lift(square, {e0, compose(h.diagonal(), tensor_lift(square, {e1, e2}))});
    report.checks.push_back(check_per_generator(h, "coassociativity", compose(h.diagonal(), outer_left),
                                                compose(h.diagonal(), outer_right)));

    auto symmetric = check_per_generator(h, "cocommutativity-flag", h.diagonal(), compose(h.diagonal(), flip(carrier)));
    const bool actual = symmetric.passed;
    symmetric.passed = actual == h.declared_cocommutative();
    if (!symmetric.passed) {
        symmetric.detail = actual ? "diagonal is symmetric but declared non-cocommutative"
                                  : "declared cocommutative but " + symmetric.detail;
    }
    report.checks.push_back(symmetric);
    return report;
}

Hopf beta_instance(unsigned order, const Ring &base)
{
    std::vector<Generator> gens;
    for (unsigned i = 1; i <= order; ++i) {
        gens.push_back({"b" + std::to_string(i), static_cast<long>(i)});
    }
    const auto carrier = make_hopf_carrier(base, std::move(gens));
    const auto &square = carrier->tensor_square();
    auto beta = [&](unsigned i, std::size_t copy) {
        return i == 0 ? PolyElement(square, 1) : PolyElement::generator(square, square->copy_index(copy, i - 1));
    };
    std::vector<PolyElement> diagonals;
    for (unsigned n = 1; n <= order; ++n) {
        PolyElement d(square);
        for (unsigned i = 0; i <= n; ++i) {
            d += mul(beta(i, 0), beta(n - i, 1));
        }
        diagonals.push_back(std::move(d));
    }
    return HopfDescriptor::create(carrier, std::move(diagonals), true, "beta");
}

Hopf trivial_instance(const Ring &base)
{
    return HopfDescriptor::create(make_hopf_carrier(base, {}), {}, true, "trivial");
}

const AlgebraMorphism &antipode(const HopfDescriptor &hopf)
{
    return hopf.antipode();
}

AlgebraMorphism convolution(const HopfDescriptor &hopf, const AlgebraMorphism &f, const AlgebraMorphism &g)
{
    require_same_ring(f.source(), hopf.carrier(), "convolution");
    require_same_ring(g.source(), hopf.carrier(), "convolution");
    require_same_ring(f.target(), hopf.carrier(), "convolution");
    require_same_ring(g.target(), hopf.carrier(), "convolution");
    return compose(hopf.diagonal(), tensor_lift(f, g));
}

AlgebraMorphism conv_power(const HopfDescriptor &hopf, int n)
{
    if (n == 0) {
        return hopf.unit_counit();
    }
    const AlgebraMorphism step = n > 0 ? AlgebraMorphism::identity(hopf.carrier()) : hopf.antipode();
    AlgebraMorphism result = step;
    for (int k = 1; k < std::abs(n); ++k) {
        result = convolution(hopf, result, step);
    }
    return result;
}

AlgebraMorphism tensor_square_map(const HopfDescriptor &hopf, const AlgebraMorphism &f, const AlgebraMorphism &g)
{
    return tensor_lift(compose(f, left_embedding(hopf.carrier())), compose(g, right_embedding(hopf.carrier())));
}

} // namespace hopfgl
