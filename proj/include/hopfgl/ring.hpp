#ifndef HOPFGL_RING_HPP
#define HOPFGL_RING_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hopfgl
{

struct Generator {
    std::string name;
    long weight = 1;
};

enum class RingKind {
    base,          // R: a polynomial ring over Q
    hopf_carrier,  // H = R[h_1, ..., h_k]
    tensor_square, // H (x)_R H: base generators once, Hopf generators twice
    scratch        // higher tensor powers, used only inside checks
};

class RingDescriptor;
using Ring = std::shared_ptr<const RingDescriptor>;

// A graded polynomial ring Q[g_0, ..., g_{n-1}] with positive integer weights.
//
// Carriers and tensor powers are built over a base ring R, whose generators
// always occupy the leading indices. In a tensor power with c copies the
// Hopf generator i of copy j sits at index base_count() + j * hopf_count() + i.
// Rings are compared by identity: two separately built rings are different
// coefficient universes even if their generator lists coincide.
class RingDescriptor
{
public:
    RingKind kind() const noexcept { return kind_; }
    const std::vector<Generator> &generators() const noexcept { return generators_; }
    std::size_t size() const noexcept { return generators_.size(); }
    const Generator &generator(std::size_t index) const { return generators_.at(index); }
    std::optional<std::size_t> index_of(std::string_view name) const;

    // The base ring R; null for a base ring itself.
    const Ring &base() const noexcept { return base_; }
    std::size_t base_count() const noexcept { return base_count_; }
    std::size_t hopf_count() const noexcept { return hopf_count_; }
    std::size_t copies() const noexcept { return copies_; }
    std::size_t copy_index(std::size_t copy, std::size_t hopf_generator) const;

    // Registered tensor square of a Hopf carrier; null otherwise.
    const Ring &tensor_square() const noexcept { return tensor_square_; }

    bool is_base_generator(std::size_t index) const noexcept { return index < base_count_; }

private:
    RingDescriptor() = default;

    friend Ring make_base_ring(std::vector<Generator>);
    friend Ring make_hopf_carrier(Ring, std::vector<Generator>);
    friend Ring make_tensor_power(const Ring &, std::size_t);

    RingKind kind_ = RingKind::base;
    std::vector<Generator> generators_;
    Ring base_;
    std::size_t base_count_ = 0;
    std::size_t hopf_count_ = 0;
    std::size_t copies_ = 0;
    Ring tensor_square_;
};

// Throws PreconditionError on duplicate names, empty names or weight < 1.
Ring make_base_ring(std::vector<Generator> generators);

// The ring Q with no generators; the same instance on every call.
const Ring &rationals();

// H = R[generators]; also builds and registers H (x)_R H, whose copies of a
// generator "g" are named "g.L" and "g.R".
Ring make_hopf_carrier(Ring base, std::vector<Generator> generators);

// Scratch ring H^{(x) copies}, copy j of "g" named "g.<j+1>".
Ring make_tensor_power(const Ring &carrier, std::size_t copies);

} // namespace hopfgl

#endif
