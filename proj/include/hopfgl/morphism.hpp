#ifndef HOPFGL_MORPHISM_HPP
#define HOPFGL_MORPHISM_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopfgl/poly.hpp"

namespace hopfgl
{

// Q-algebra map between polynomial rings, determined by generator images.
// An image may be absent; applying the map to an element that uses such a
// generator throws MissingImage.
class AlgebraMorphism
{
public:
    AlgebraMorphism(Ring source, Ring target, std::vector<std::optional<PolyElement>> images);

    static AlgebraMorphism identity(const Ring &ring);

    const Ring &source() const noexcept { return source_; }
    const Ring &target() const noexcept { return target_; }
    const std::optional<PolyElement> &image(std::size_t index) const { return images_.at(index); }
    const std::vector<std::optional<PolyElement>> &images() const noexcept { return images_; }

    // Graded: every present image is homogeneous of its generator's weight.
    bool is_graded() const;

    // Morphisms are equal iff they agree on every generator.
    friend bool operator==(const AlgebraMorphism &, const AlgebraMorphism &);

private:
    Ring source_;
    Ring target_;
    std::vector<std::optional<PolyElement>> images_;
};

PolyElement apply_map(const PolyElement &a, const AlgebraMorphism &f);

// x -> g(f(x)).
AlgebraMorphism compose(const AlgebraMorphism &f, const AlgebraMorphism &g);

// Inclusion R -> target of a base ring into a carrier or tensor power built
// over it (or R itself).
AlgebraMorphism base_inclusion(const Ring &base, const Ring &target);

// H -> H^{(x) c}: the Hopf generators of H go to copy `copy`.
AlgebraMorphism copy_embedding(const Ring &carrier, const Ring &power, std::size_t copy);

// h -> h (x) 1 and h -> 1 (x) h into the registered tensor square.
AlgebraMorphism left_embedding(const Ring &carrier);
AlgebraMorphism right_embedding(const Ring &carrier);
PolyElement tensor_embed_left(const PolyElement &a);
PolyElement tensor_embed_right(const PolyElement &a);

// Universal map out of a tensor power: given f_j : H -> T, the algebra map
// H^{(x) c} -> T sending h_1 (x) ... (x) h_c to f_1(h_1) ... f_c(h_c). All f_j
// must agree on the base generators (the tensor product is over R).
AlgebraMorphism tensor_lift(const Ring &power, const std::vector<AlgebraMorphism> &factors);
AlgebraMorphism tensor_lift(const AlgebraMorphism &left, const AlgebraMorphism &right);

// Multiplication H (x) H -> H and the flip of the tensor square.
AlgebraMorphism multiplication(const Ring &carrier);
AlgebraMorphism flip(const Ring &carrier);

// "name -> image" lines in generator order.
std::string to_string(const AlgebraMorphism &f);

} // namespace hopfgl

#endif
