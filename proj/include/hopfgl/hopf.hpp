#ifndef HOPFGL_HOPF_HPP
#define HOPFGL_HOPF_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfgl/morphism.hpp"
#include "hopfgl/report.hpp"

namespace hopfgl
{

class HopfDescriptor;
using Hopf = std::shared_ptr<const HopfDescriptor>;

// Connected graded commutative Hopf algebra H = R[h_1, ..., h_k] over a base
// ring R, presented by the diagonal of each generator. Base generators are
// scalars: Delta(r) = r, eps(r) = r, S(r) = r.
//
// The descriptor is validated at construction; the antipode is derived then
// as well, and only when validation passed.
class HopfDescriptor
{
public:
    // diagonals[i] is Delta of Hopf generator i (carrier index base_count + i),
    // an element of the registered tensor square.
    static Hopf create(Ring carrier, std::vector<PolyElement> diagonals, bool declared_cocommutative,
                       std::string name = "custom");

    const std::string &name() const noexcept { return name_; }
    const Ring &carrier() const noexcept { return carrier_; }
    const Ring &base() const noexcept { return carrier_->base(); }
    const Ring &tensor_square() const noexcept { return carrier_->tensor_square(); }

    const AlgebraMorphism &diagonal() const noexcept { return diagonal_; }
    // eps : H -> R.
    const AlgebraMorphism &counit() const noexcept { return counit_; }
    // eta o eps : H -> H, the convolution unit "(0)".
    const AlgebraMorphism &unit_counit() const noexcept { return unit_counit_; }

    bool declared_cocommutative() const noexcept { return declared_cocommutative_; }
    // Declared and verified.
    bool cocommutative() const noexcept { return cocommutative_; }

    const Report &validation() const noexcept { return validation_; }
    bool valid() const noexcept { return validation_.passed(); }

    // Throws PreconditionError for an invalid descriptor.
    const AlgebraMorphism &antipode() const;

private:
    HopfDescriptor(std::string name, Ring carrier, AlgebraMorphism diagonal, AlgebraMorphism counit,
                   AlgebraMorphism unit_counit, bool declared_cocommutative);

    std::string name_;
    Ring carrier_;
    AlgebraMorphism diagonal_;
    AlgebraMorphism counit_;
    AlgebraMorphism unit_counit_;
    bool declared_cocommutative_;
    bool cocommutative_ = false;
    Report validation_;
    std::optional<AlgebraMorphism> antipode_;
};

// Checks "connected", "graded", "counit-left" ((id (x) eps) Delta = id),
// "counit-right" ((eps (x) id) Delta = id), "coassociativity" and
// "cocommutativity-flag" (declared flag agrees with Delta = flip o Delta).
Report validate_hopf(const HopfDescriptor &hopf);

// Generators b1..b_order of weight i over `base`, with
// Delta(b_n) = sum_{i+j=n} b_i (x) b_j, b_0 = 1.
Hopf beta_instance(unsigned order, const Ring &base = rationals());

// The Hopf algebra with no generators over `base`.
Hopf trivial_instance(const Ring &base = rationals());

const AlgebraMorphism &antipode(const HopfDescriptor &hopf);

// f * g = mu o (f (x) g) o Delta for endomorphisms of H.
AlgebraMorphism convolution(const HopfDescriptor &hopf, const AlgebraMorphism &f, const AlgebraMorphism &g);

// (1) = id, (-1) = S, (0) = eta o eps, (n) = (n-1) * (1), (-n) = (-(n-1)) * S.
AlgebraMorphism conv_power(const HopfDescriptor &hopf, int n);

// f (x) g on H (x) H, built from the tensor embeddings.
AlgebraMorphism tensor_square_map(const HopfDescriptor &hopf, const AlgebraMorphism &f, const AlgebraMorphism &g);

} // namespace hopfgl

#endif
