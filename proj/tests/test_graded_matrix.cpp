#include <doctest.h>

#include "mfw/graded_matrix.hpp"

using namespace mfw;

namespace {

struct Fixture {
    Field q = Field::rationals();
    Ring r{q, {"x"}, {1}};
    Poly x = Poly::variable(r, 0);
};

} // namespace

TEST_CASE("degree bookkeeping on construction") {
    Fixture fx;
    // target (0), source (-1): entry degree 0 - (-1) = 1
    GradedMatrix ok(fx.r, {0}, {-1}, 0, {fx.x});
    CHECK(ok.at(0, 0) == fx.x);

    CHECK_THROWS_WITH_AS(GradedMatrix(fx.r, {0}, {-1}, 0, {fx.x.pow(2)}),
                         doctest::Contains("expected degree 1, got 2"), ValidationError);
    // inhomogeneous entries are rejected with their own message
    CHECK_THROWS_WITH_AS(GradedMatrix(fx.r, {0}, {-1}, 0, {fx.x + fx.x.pow(2)}),
                         doctest::Contains("inhomogeneous"), ValidationError);
    // zero entries fit any degree
    GradedMatrix z(fx.r, {5}, {-7}, 0, {Poly::zero(fx.r)});
    CHECK(z.is_zero());
}

TEST_CASE("the same matrix retypes across twists like psi in a factorization") {
    Fixture fx;
    // phi = [x]: (d)=(0) <- (e)=(-1), offset 0; psi = [x] retyped (e) <- (d) with offset h=2
    GradedMatrix psi(fx.r, {-1}, {0}, 2, {fx.x});
    CHECK(psi.offset() == 2);
    GradedMatrix retyped = psi.retyped({0}, {1}, 2);
    CHECK(retyped.at(0, 0) == fx.x);
    CHECK_THROWS_AS(psi.retyped({0}, {0}, 0), ValidationError);
}

TEST_CASE("compose respects tuples and adds offsets") {
    Fixture fx;
    GradedMatrix phi(fx.r, {0}, {-1}, 0, {fx.x});
    GradedMatrix psi(fx.r, {-1}, {0}, 2, {fx.x});
    GradedMatrix prod = compose(phi, psi); // phi psi = x^2 on (0) with offset 2
    CHECK(prod.target() == TwistTuple{0});
    CHECK(prod.source() == TwistTuple{0});
    CHECK(prod.offset() == 2);
    CHECK(prod.at(0, 0) == fx.x.pow(2));

    GradedMatrix id0 = GradedMatrix::identity_on(fx.r, {0});
    CHECK(compose(id0, phi) == phi);
    CHECK(compose(phi, GradedMatrix::identity_on(fx.r, {-1})) == phi);

    GradedMatrix wrong(fx.r, {3}, {0}, 0, {fx.x.pow(3)});
    CHECK_THROWS_AS(compose(phi, wrong), ValidationError);
}

TEST_CASE("compose is associative") {
    Fixture fx;
    GradedMatrix a(fx.r, {2}, {0, 1}, 0, {fx.x.pow(2), fx.x});
    GradedMatrix b(fx.r, {0, 1}, {-1}, 0, {fx.x, fx.x.pow(2)});
    GradedMatrix c(fx.r, {-1}, {-3}, 0, {fx.x.pow(2)});
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
}

TEST_CASE("block assembly and arithmetic") {
    Fixture fx;
    GradedMatrix a = GradedMatrix::identity_on(fx.r, {0});
    GradedMatrix b = GradedMatrix::zero(fx.r, {0}, {1}, 0);
    GradedMatrix c = GradedMatrix::zero(fx.r, {1}, {0}, 0);
    GradedMatrix d = GradedMatrix::identity_on(fx.r, {1});
    GradedMatrix blk = block2x2(a, b, c, d);
    CHECK(blk == GradedMatrix::identity_on(fx.r, {0, 1}));

    CHECK((blk - blk).is_zero());
    CHECK(blk.scaled(fx.x.pow(2)).offset() == 2);
    CHECK(blk.twist(3).target() == TwistTuple{3, 4});
}
