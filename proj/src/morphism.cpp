#include "hopfgl/morphism.hpp"

#include <sstream>

#include "hopfgl/error.hpp"

namespace hopfgl
{

AlgebraMorphism::AlgebraMorphism(Ring source, Ring target, std::vector<std::optional<PolyElement>> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images))
{
    if (!source_ || !target_) {
        throw PreconditionError("morphism without source or target ring");
    }
    if (images_.size() != source_->size()) {
        throw PreconditionError("morphism image table does not match the source generators");
    }
    for (const auto &img : images_) {
        if (img) {
            require_same_ring(img->ring(), target_, "morphism image");
        }
    }
}

AlgebraMorphism AlgebraMorphism::identity(const Ring &ring)
{
    std::vector<std::optional<PolyElement>> images;
    images.reserve(ring->size());
    for (std::size_t i = 0; i < ring->size(); ++i) {
        images.emplace_back(PolyElement::generator(ring, i));
    }
    return {ring, ring, std::move(images)};
}

bool AlgebraMorphism::is_graded() const
{
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] && !images_[i]->is_homogeneous(source_->generator(i).weight)) {
            return false;
        }
    }
    return true;
}

bool operator==(const AlgebraMorphism &f, const AlgebraMorphism &g)
{
    return f.source_ == g.source_ && f.target_ == g.target_ && f.images_ == g.images_;
}

PolyElement apply_map(const PolyElement &a, const AlgebraMorphism &f)
{
    require_same_ring(a.ring(), f.source(), "apply_map");
    // powers[i][e-1] = image(i)^e, filled on demand
    std::vector<std::vector<PolyElement>> powers(f.source()->size());
    auto power_of = [&](std::size_t index, std::uint32_t exponent) -> const PolyElement & {
        const auto &img = f.image(index);
        if (!img) {
            throw MissingImage("no image for generator '" + f.source()->generator(index).name + "'");
        }
        auto &cache = powers[index];
        if (cache.empty()) {
            cache.push_back(*img);
        }
        while (cache.size() < exponent) {
            cache.push_back(mul(cache.back(), *img));
        }
        return cache[exponent - 1];
    };

    std::vector<PolyElement::Term> out;
    for (const auto &term : a.terms()) {
        PolyElement product(f.target(), term.coefficient);
        for (const auto &[index, exponent] : term.monomial.powers()) {
            product = mul(product, power_of(index, exponent));
            if (product.is_zero()) {
                break;
            }
        }
        out.insert(out.end(), product.terms().begin(), product.terms().end());
    }
    return PolyElement::from_terms(f.target(), std::move(out));
}

AlgebraMorphism compose(const AlgebraMorphism &f, const AlgebraMorphism &g)
{
    require_same_ring(f.target(), g.source(), "compose");
    std::vector<std::optional<PolyElement>> images;
    images.reserve(f.images().size());
    for (const auto &img : f.images()) {
        images.push_back(img ? std::optional<PolyElement>(apply_map(*img, g)) : std::nullopt);
    }
    return {f.source(), g.target(), std::move(images)};
}

AlgebraMorphism base_inclusion(const Ring &base, const Ring &target)
{
    if (base != target && target->base() != base) {
        throw RingMismatch("base_inclusion: target is not built over the given base ring");
    }
    std::vector<std::optional<PolyElement>> images;
    for (std::size_t i = 0; i < base->size(); ++i) {
        images.emplace_back(PolyElement::generator(target, i));
    }
    return {base, target, std::move(images)};
}

AlgebraMorphism copy_embedding(const Ring &carrier, const Ring &power, std::size_t copy)
{
    if (carrier->kind() != RingKind::hopf_carrier || power->base() != carrier->base() ||
        power->hopf_count() != carrier->hopf_count() || power->copies() < 2) {
        throw RingMismatch("copy_embedding: target is not a tensor power of the carrier");
    }
    std::vector<std::optional<PolyElement>> images;
    for (std::size_t i = 0; i < carrier->base_count(); ++i) {
        images.emplace_back(PolyElement::generator(power, i));
    }
    for (std::size_t i = 0; i < carrier->hopf_count(); ++i) {
        images.emplace_back(PolyElement::generator(power, power->copy_index(copy, i)));
    }
    return {carrier, power, std::move(images)};
}

namespace
{

const Ring &square_of(const Ring &carrier)
{
    if (!carrier || carrier->kind() != RingKind::hopf_carrier || !carrier->tensor_square()) {
        throw PreconditionError("no tensor square registered for this ring");
    }
    return carrier->tensor_square();
}

} // namespace

AlgebraMorphism left_embedding(const Ring &carrier)
{
    return copy_embedding(carrier, square_of(carrier), 0);
}

AlgebraMorphism right_embedding(const Ring &carrier)
{
    return copy_embedding(carrier, square_of(carrier), 1);
}

PolyElement tensor_embed_left(const PolyElement &a)
{
    return apply_map(a, left_embedding(a.ring()));
}

PolyElement tensor_embed_right(const PolyElement &a)
{
    return apply_map(a, right_embedding(a.ring()));
}

AlgebraMorphism tensor_lift(const Ring &power, const std::vector<AlgebraMorphism> &factors)
{
    if (factors.size() != power->copies() || factors.empty()) {
        throw PreconditionError("tensor_lift: one factor per tensor copy required");
    }
    const auto &carrier = factors.front().source();
    const auto &target = factors.front().target();
    for (const auto &f : factors) {
        require_same_ring(f.source(), carrier, "tensor_lift source");
        require_same_ring(f.target(), target, "tensor_lift target");
    }
    if (carrier->kind() != RingKind::hopf_carrier || power->base() != carrier->base() ||
        power->hopf_count() != carrier->hopf_count()) {
        throw RingMismatch("tensor_lift: source is not a tensor power of the factors' carrier");
    }
    std::vector<std::optional<PolyElement>> images;
    for (std::size_t i = 0; i < carrier->base_count(); ++i) {
        for (const auto &f : factors) {
            if (!(f.image(i) == factors.front().image(i))) {
                throw PreconditionError("tensor_lift: factors disagree on base generator '" +
                                        carrier->generator(i).name + "'");
            }
        }
        images.push_back(factors.front().image(i));
    }
    for (const auto &f : factors) {
        for (std::size_t i = 0; i < carrier->hopf_count(); ++i) {
            images.push_back(f.image(carrier->base_count() + i));
        }
    }
    return {power, target, std::move(images)};
}

AlgebraMorphism tensor_lift(const AlgebraMorphism &left, const AlgebraMorphism &right)
{
    return tensor_lift(square_of(left.source()), {left, right});
}

AlgebraMorphism multiplication(const Ring &carrier)
{
    const auto id = AlgebraMorphism::identity(carrier);
    return tensor_lift(id, id);
}

AlgebraMorphism flip(const Ring &carrier)
{
    return tensor_lift(right_embedding(carrier), left_embedding(carrier));
}

std::string to_string(const AlgebraMorphism &f)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < f.images().size(); ++i) {
        os << f.source()->generator(i).name << " -> ";
        os << (f.image(i) ? to_string(*f.image(i)) : std::string("?")) << '\n';
    }
    return os.str();
}

} // namespace hopfgl
