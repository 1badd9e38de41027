#include <doctest.h>

#include "mfw/hom.hpp"
#include "mfw/mf.hpp"

using namespace mfw;

namespace {

struct A1 {
    Field q = Field::rationals();
    Ring r{q, {"x"}, {1}};
    Poly x = Poly::variable(r, 0);
    MatrixFactorization E = MatrixFactorization::koszul(x, x); // f = x^2
};

} // namespace

TEST_CASE("mf_new validates the factorization identities") {
    A1 fx;
    CHECK(fx.E.rank() == 1);
    CHECK(fx.E.h() == 2);
    CHECK(fx.E.d() == TwistTuple{0});
    CHECK(fx.E.e() == TwistTuple{-1});

    // psi = x^2 against f = x^2: the degree bookkeeping rejects the entry
    GradedMatrix phi(fx.r, {0}, {-1}, 0, {fx.x});
    CHECK_THROWS_AS(MatrixFactorization(fx.r, fx.x.pow(2), {0}, {-1}, phi,
                                        GradedMatrix(fx.r, {-1}, {0}, 2, {fx.x.pow(2)})),
                    ValidationError);
    // well-typed matrices whose product is x^2, not f = 2 x^2
    GradedMatrix psi(fx.r, {-1}, {0}, 2, {fx.x});
    CHECK_THROWS_WITH_AS(
        MatrixFactorization(fx.r, fx.x.pow(2).scaled(Scalar::from_long(fx.q, 2)), {0}, {-1},
                            phi, psi),
        doctest::Contains("differs from f*id"), ValidationError);

    MatrixFactorization z = MatrixFactorization::zero_object(fx.r, fx.x.pow(2));
    CHECK(z.rank() == 0);
}

TEST_CASE("koszul rank-1 factorizations") {
    A1 fx;
    auto k13 = MatrixFactorization::koszul(fx.x, fx.x.pow(3));
    CHECK(k13.f() == fx.x.pow(4));
    CHECK(k13.e() == TwistTuple{-1});
    auto k21 = MatrixFactorization::koszul(fx.x.pow(2), fx.x);
    CHECK(k21.f() == fx.x.pow(3));
    CHECK(k21.e() == TwistTuple{-2});
    CHECK(k21.rank() == 1);
    CHECK_THROWS_AS(MatrixFactorization::koszul(Poly::zero(fx.r), fx.x), ValidationError);
}

TEST_CASE("translate: twists, the suspension and its inverse") {
    A1 fx;
    auto E1 = translate(fx.E, 0, 1);
    CHECK(E1.d() == TwistTuple{1});
    CHECK(E1.e() == TwistTuple{0});

    // [2] = (h) on the nose
    CHECK(translate(fx.E, 2, 0) == translate(fx.E, 0, 2));
    CHECK(translate(translate(fx.E, 1, 0), 1, 0) == translate(fx.E, 0, 2));

    auto S = translate(fx.E, 1, 0);
    CHECK(S.d() == TwistTuple{1});
    CHECK(S.e() == TwistTuple{0});
    CHECK(S.phi().at(0, 0) == -fx.x);
    CHECK(S.psi().at(0, 0) == -fx.x);

    CHECK(translate(S, -1, 0) == fx.E);
    CHECK(translate(translate(fx.E, -1, 0), 1, 0) == fx.E);

    // translations compose additively and commute
    CHECK(translate(translate(fx.E, 1, 2), -1, 1) == translate(fx.E, 0, 3));
    CHECK(translate(translate(fx.E, 1, 0), 0, 5) == translate(translate(fx.E, 0, 5), 1, 0));
}

TEST_CASE("E[1] is isomorphic to E(1) for the A1 factorization") {
    A1 fx;
    auto S = translate(fx.E, 1, 0);
    auto T = translate(fx.E, 0, 1);
    HomResult hom = hom_space(S, T, 0);
    CHECK(hom.dim() == 1);
    // the generating morphism is invertible: constant nonzero alpha and beta
    auto reps = hom.quotient_representatives();
    REQUIRE(reps.size() == 1);
    CHECK_FALSE(reps[0].alpha().at(0, 0).is_zero());
    CHECK_FALSE(reps[0].beta().at(0, 0).is_zero());
}

TEST_CASE("direct sums") {
    A1 fx;
    auto Z = MatrixFactorization::zero_object(fx.r, fx.x.pow(2));
    CHECK(direct_sum(fx.E, Z) == fx.E);
    auto EE = direct_sum(fx.E, fx.E);
    CHECK(EE.rank() == 2);
    CHECK(hom_space(EE, fx.E, 0).dim() == 2); // additivity, expected 2

    auto other = MatrixFactorization::koszul(fx.x, fx.x.pow(2));
    CHECK_THROWS_AS(direct_sum(fx.E, other), ValidationError); // different f
}

TEST_CASE("identity morphism pair validates for every translate") {
    A1 fx;
    for (int i : {-2, -1, 0, 1, 2})
        for (int n : {-1, 0, 3}) {
            auto T = translate(fx.E, i, n);
            CHECK(MorphismPair::identity(T).alpha() ==
                  GradedMatrix::identity_on(fx.r, T.d()));
        }
    // a non-cocycle is rejected
    auto E2 = MatrixFactorization::koszul(fx.x.pow(2), fx.x.pow(2));
    CHECK_THROWS_AS(MorphismPair(fx.E, fx.E, 0,
                                 GradedMatrix(fx.r, {0}, {0}, 0, {Poly::from_long(fx.r, 1)}),
                                 GradedMatrix::zero(fx.r, {-1}, {-1}, 0)),
                    ValidationError);
    (void)E2;
}
