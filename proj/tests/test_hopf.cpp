#include "doctest.h"

#include <random>

#include "hopfgl/error.hpp"
#include "hopfgl/expression.hpp"
#include "hopfgl/hopf.hpp"
#include "oracles.hpp"

using namespace hopfgl;

namespace
{

// x1, x2 primitive, Delta(x3) = x3 (x) 1 + 1 (x) x3 + x1 (x) x2.
Hopf skew_instance(bool declared_cocommutative)
{
    const auto carrier = make_hopf_carrier(rationals(), {{"x1", 1}, {"x2", 1}, {"x3", 2}});
    const auto &sq = carrier->tensor_square();
    return HopfDescriptor::create(carrier,
                                  {parse_polynomial(sq, "x1.L + x1.R"), parse_polynomial(sq, "x2.L + x2.R"),
                                   parse_polynomial(sq, "x3.L + x3.R + x1.L*x2.R")},
                                  declared_cocommutative, "skew");
}

Hopf left_only_instance()
{
    const auto carrier = make_hopf_carrier(rationals(), {{"g", 1}});
    return HopfDescriptor::create(carrier, {parse_polynomial(carrier->tensor_square(), "g.L")}, true, "left-only");
}

bool check_passed(const Report &r, const std::string &name)
{
    const auto *c = r.find(name);
    REQUIRE_MESSAGE(c != nullptr, name);
    return c->passed;
}

// Random graded endomorphism: each generator goes to a homogeneous element of
// its own weight.
AlgebraMorphism random_graded(const HopfDescriptor &h, std::mt19937 &rng)
{
    const auto &c = h.carrier();
    std::vector<std::optional<PolyElement>> images;
    for (std::size_t i = 0; i < c->size(); ++i) {
        if (c->is_base_generator(i)) {
            images.emplace_back(PolyElement::generator(c, i));
        } else {
            images.emplace_back(oracle::random_homogeneous(c, rng, c->generator(i).weight, 3));
        }
    }
    return {c, c, std::move(images)};
}

} // namespace

TEST_CASE("beta instance structure")
{
    const auto h = beta_instance(3);
    const auto &sq = h->tensor_square();
    const auto &c = h->carrier();
    CHECK(apply_map(PolyElement::generator(c, "b1"), h->diagonal()) == parse_polynomial(sq, "b1.L + b1.R"));
    CHECK(apply_map(PolyElement::generator(c, "b2"), h->diagonal()) ==
          parse_polynomial(sq, "b2.L + b1.L*b1.R + b2.R"));
    CHECK(apply_map(PolyElement::generator(c, "b3"), h->diagonal()) ==
          parse_polynomial(sq, "b3.L + b2.L*b1.R + b1.L*b2.R + b3.R"));
    CHECK(h->valid());
    CHECK(h->cocommutative());
    for (const auto &check : h->validation().checks) {
        CHECK_MESSAGE(check.passed, check.name);
    }
    CHECK(h->validation().checks.size() == 6);
}

TEST_CASE("validate_hopf examples")
{
    const auto bad = left_only_instance();
    CHECK_FALSE(bad->valid());
    CHECK_FALSE(check_passed(bad->validation(), "counit-right"));
    CHECK(check_passed(bad->validation(), "counit-left"));
    CHECK_THROWS_AS(bad->antipode(), PreconditionError);

    const auto trivial = trivial_instance();
    CHECK(trivial->valid());
    CHECK(trivial->cocommutative());
    CHECK(trivial->antipode() == AlgebraMorphism::identity(trivial->carrier()));

    const auto skew = skew_instance(false);
    CHECK(skew->valid());
    CHECK_FALSE(skew->cocommutative());
    const auto lying = skew_instance(true);
    CHECK_FALSE(lying->valid());
    CHECK_FALSE(check_passed(lying->validation(), "cocommutativity-flag"));
    CHECK(check_passed(lying->validation(), "coassociativity"));

    // a symmetric diagonal declared non-cocommutative is also a mismatch
    const auto carrier = make_hopf_carrier(rationals(), {{"p", 1}});
    const auto under = HopfDescriptor::create(carrier, {parse_polynomial(carrier->tensor_square(), "p.L + p.R")},
                                              false, "understated");
    CHECK_FALSE(check_passed(under->validation(), "cocommutativity-flag"));
}

TEST_CASE("non-graded and non-coassociative descriptors are rejected")
{
    const auto carrier = make_hopf_carrier(rationals(), {{"p", 1}, {"q", 2}});
    const auto &sq = carrier->tensor_square();
    const auto ungraded = HopfDescriptor::create(
        carrier, {parse_polynomial(sq, "p.L + p.R"), parse_polynomial(sq, "q.L + q.R + p.L")}, false, "ungraded");
    CHECK_FALSE(check_passed(ungraded->validation(), "graded"));

    const auto carrier2 = make_hopf_carrier(rationals(), {{"p", 1}, {"q", 2}});
    const auto &sq2 = carrier2->tensor_square();
    const auto nonassoc = HopfDescriptor::create(
        carrier2, {parse_polynomial(sq2, "p.L + p.R"), parse_polynomial(sq2, "q.L + q.R + p.L^2")}, false, "nonassoc");
    CHECK_FALSE(check_passed(nonassoc->validation(), "coassociativity"));
    CHECK_FALSE(nonassoc->valid());

    CHECK_THROWS_AS(HopfDescriptor::create(carrier, {parse_polynomial(sq, "p.L + p.R")}, true), PreconditionError);
}

TEST_CASE("antipode examples")
{
    const auto h = beta_instance(4);
    const auto &c = h->carrier();
    const auto &s = h->antipode();
    CHECK(*s.image(0) == parse_polynomial(c, "-b1"));
    CHECK(*s.image(1) == parse_polynomial(c, "b1^2 - b2"));
    CHECK(*s.image(2) == parse_polynomial(c, "-b1^3 + 2*b1*b2 - b3"));
    CHECK(*s.image(3) == parse_polynomial(c, "b1^4 - 3*b1^2*b2 + b2^2 + 2*b1*b3 - b4"));
    CHECK(&antipode(*h) == &h->antipode());

    const auto skew = skew_instance(false);
    CHECK(*skew->antipode().image(2) == parse_polynomial(skew->carrier(), "-x3 + x1*x2"));
}

TEST_CASE("antipode laws")
{
    for (const auto &h : {beta_instance(6), skew_instance(false), trivial_instance()}) {
        const auto id = AlgebraMorphism::identity(h->carrier());
        CHECK(convolution(*h, h->antipode(), id) == h->unit_counit());
        CHECK(convolution(*h, id, h->antipode()) == h->unit_counit());
    }
}

TEST_CASE("convolution examples")
{
    const auto h = beta_instance(4);
    const auto &c = h->carrier();
    const auto id = AlgebraMorphism::identity(c);
    CHECK(convolution(*h, h->antipode(), h->unit_counit()) == h->antipode());
    CHECK(convolution(*h, h->unit_counit(), id) == id);
    CHECK(apply_map(PolyElement::generator(c, "b2"), convolution(*h, id, h->antipode())).is_zero());
    CHECK(*convolution(*h, id, id).image(0) == parse_polynomial(c, "2*b1"));

    const auto other = beta_instance(4);
    CHECK_THROWS_AS(convolution(*h, AlgebraMorphism::identity(other->carrier()), id), RingMismatch);
}

TEST_CASE("conv_power examples")
{
    const auto h = beta_instance(4);
    const auto &c = h->carrier();
    CHECK(apply_map(PolyElement::generator(c, "b2"), conv_power(*h, 0)).is_zero());
    for (int n = -3; n <= 3; ++n) {
        CHECK(*conv_power(*h, n).image(0) == Rational(n) * PolyElement::generator(c, "b1"));
    }
    CHECK(*conv_power(*h, 2).image(1) == parse_polynomial(c, "2*b2 + b1^2"));
    CHECK(conv_power(*h, 1) == AlgebraMorphism::identity(c));
    CHECK(conv_power(*h, -1) == h->antipode());
}

TEST_CASE("conv_power matches the B(t)^n oracle")
{
    const auto h = beta_instance(5);
    for (int n = -4; n <= 4; ++n) {
        const auto p = conv_power(*h, n);
        for (unsigned k = 1; k <= 5; ++k) {
            CHECK(*p.image(k - 1) == oracle::beta_power_image(*h, n, k));
        }
    }
}

TEST_CASE("group law of convolution powers")
{
    const auto h = beta_instance(5);
    for (int m = -3; m <= 3; ++m) {
        for (int n = -3; n <= 3; ++n) {
            CHECK(convolution(*h, conv_power(*h, m), conv_power(*h, n)) == conv_power(*h, m + n));
        }
    }
    const auto skew = skew_instance(false);
    for (int m = -2; m <= 2; ++m) {
        for (int n = -2; n <= 2; ++n) {
            CHECK(convolution(*skew, conv_power(*skew, m), conv_power(*skew, n)) == conv_power(*skew, m + n));
        }
    }
}

TEST_CASE("convolution is associative with unit on random morphisms")
{
    std::mt19937 rng(2718);
    const auto base = make_base_ring({{"m1", 1}});
    for (const auto &h : {beta_instance(6), beta_instance(4, base), skew_instance(false)}) {
        for (int trial = 0; trial < 5; ++trial) {
            const auto f = random_graded(*h, rng);
            const auto g = random_graded(*h, rng);
            const auto k = random_graded(*h, rng);
            CHECK(convolution(*h, convolution(*h, f, g), k) == convolution(*h, f, convolution(*h, g, k)));
            CHECK(convolution(*h, f, h->unit_counit()) == f);
            CHECK(convolution(*h, h->unit_counit(), f) == f);
        }
    }
}

TEST_CASE("convolution powers are coalgebra maps when cocommutative")
{
    const auto h = beta_instance(5);
    for (int n = -3; n <= 3; ++n) {
        const auto p = conv_power(*h, n);
        CHECK(compose(p, h->diagonal()) == compose(h->diagonal(), tensor_square_map(*h, p, p)));
    }
    // fails for the skew instance at n = 2
    const auto skew = skew_instance(false);
    const auto p = conv_power(*skew, 2);
    CHECK_FALSE(compose(p, skew->diagonal()) == compose(skew->diagonal(), tensor_square_map(*skew, p, p)));
}

TEST_CASE("convolution powers are multiplicative")
{
    std::mt19937 rng(161);
    const auto h = beta_instance(4);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = oracle::random_poly(h->carrier(), rng, 3, 4);
        const auto b = oracle::random_poly(h->carrier(), rng, 3, 4);
        for (int n = -2; n <= 3; ++n) {
            const auto p = conv_power(*h, n);
            CHECK(apply_map(a * b, p) == apply_map(a, p) * apply_map(b, p));
            CHECK(apply_map(a, p).max_weight() <= a.max_weight());
        }
    }
}

TEST_CASE("beta instance over a base ring keeps base generators as scalars")
{
    const auto base = make_base_ring({{"m1", 1}, {"m2", 2}});
    const auto h = beta_instance(3, base);
    CHECK(h->valid());
    const auto &c = h->carrier();
    const auto m1 = PolyElement::generator(c, "m1");
    CHECK(apply_map(m1, h->antipode()) == m1);
    CHECK(apply_map(m1, conv_power(*h, 3)) == m1);
    CHECK(apply_map(m1, h->unit_counit()) == m1);
    CHECK(apply_map(m1, h->diagonal()) == PolyElement::generator(h->tensor_square(), "m1"));
}
