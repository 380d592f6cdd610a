#include "hopfgl/ring.hpp"

#include <set>

#include "hopfgl/error.hpp"

namespace hopfgl
{

namespace
{

void check_generators(const std::vector<Generator> &generators)
{
    std::set<std::string_view> seen;
    for (const auto &g : generators) {
        if (g.name.empty()) {
            throw PreconditionError("generator with empty name");
        }
        if (g.weight < 1) {
            throw PreconditionError("generator '" + g.name + "' must have weight >= 1");
        }
        if (!seen.insert(g.name).second) {
            throw PreconditionError("duplicate generator name '" + g.name + "'");
        }
    }
}

} // namespace

std::optional<std::size_t> RingDescriptor::index_of(std::string_view name) const
{
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (generators_[i].name == name) {
            return i;
        }
    }
    return std::nullopt;
}

std::size_t RingDescriptor::copy_index(std::size_t copy, std::size_t hopf_generator) const
{
    if (copy >= copies_ || hopf_generator >= hopf_count_) {
        throw PreconditionError("tensor copy index out of range");
    }
    return base_count_ + copy * hopf_count_ + hopf_generator;
}

Ring make_base_ring(std::vector<Generator> generators)
{
    check_generators(generators);
    std::shared_ptr<RingDescriptor> ring(new RingDescriptor);
    ring->kind_ = RingKind::base;
    ring->base_count_ = generators.size();
    ring->generators_ = std::move(generators);
    return ring;
}

const Ring &rationals()
{
    static const Ring q = make_base_ring({});
    return q;
}

Ring make_hopf_carrier(Ring base, std::vector<Generator> generators)
{
    if (!base || base->kind() != RingKind::base) {
        throw PreconditionError("a Hopf carrier must be built over a base ring");
    }
    std::vector<Generator> all = base->generators();
    all.insert(all.end(), generators.begin(), generators.end());
    check_generators(all);

    std::shared_ptr<RingDescriptor> carrier(new RingDescriptor);
    carrier->kind_ = RingKind::hopf_carrier;
    carrier->generators_ = std::move(all);
    carrier->base_count_ = base->size();
    carrier->hopf_count_ = generators.size();
    carrier->copies_ = 1;
    carrier->base_ = std::move(base);

    auto square = std::const_pointer_cast<RingDescriptor>(make_tensor_power(carrier, 2));
    square->kind_ = RingKind::tensor_square;
    for (std::size_t i = 0; i < carrier->hopf_count_; ++i) {
        const auto &name = carrier->generators_[carrier->base_count_ + i].name;
        square->generators_[square->copy_index(0, i)].name = name + ".L";
        square->generators_[square->copy_index(1, i)].name = name + ".R";
    }
    carrier->tensor_square_ = std::move(square);
    return carrier;
}

Ring make_tensor_power(const Ring &carrier, std::size_t copies)
{
    if (!carrier || carrier->kind() != RingKind::hopf_carrier) {
        throw PreconditionError("tensor powers are only defined for Hopf carriers");
    }
    if (copies < 2) {
        throw PreconditionError("tensor power needs at least two copies");
    }
    std::shared_ptr<RingDescriptor> ring(new RingDescriptor);
    ring->kind_ = RingKind::scratch;
    ring->base_ = carrier->base();
    ring->base_count_ = carrier->base_count();
    ring->hopf_count_ = carrier->hopf_count();
    ring->copies_ = copies;
    ring->generators_.assign(carrier->generators().begin(),
                             carrier->generators().begin() + static_cast<std::ptrdiff_t>(carrier->base_count()));
    for (std::size_t c = 0; c < copies; ++c) {
        for (std::size_t i = 0; i < carrier->hopf_count(); ++i) {
            const auto &g = carrier->generator(carrier->base_count() + i);
            ring->generators_.push_back({g.name + "." + std::to_string(c + 1), g.weight});
        }
    }
    return ring;
}

} // namespace hopfgl
