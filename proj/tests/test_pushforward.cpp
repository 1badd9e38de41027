#include <doctest.h>

#include <random>

#include "mfw/hom.hpp"
#include "mfw/section.hpp"

using namespace mfw;

namespace {

struct Cal {
    Field q = Field::rationals();
    Ring r{q, {"x"}, {1}};
    Poly x = Poly::variable(r, 0);
    Ring s = r.extend("w", 1);
    Poly w = Poly::variable(s, 1);
};

} // namespace

TEST_CASE("make_section accepts the running examples and rejects g outside wS") {
    Cal fx;
    SectionData cy(fx.r, "w", 1, fx.x.pow(2), fx.w); // F = x^2 + w^2
    CHECK(cy.h() == 2);
    CHECK(cy.F() == fx.x.pow(2).into(cy.ext_ring()) + fx.w.pow(2));
    CHECK(cy.base_ring().a_invariant() + cy.h() == cy.a()); // r + h = a: the CY case

    Ring s2 = fx.r.extend("w", 2);
    SectionData four(fx.r, "w", 2, fx.x.pow(4), Poly::variable(s2, 1)); // F = x^4 + w^2
    CHECK(four.h() == 4);

    CHECK_THROWS_WITH_AS(SectionData(fx.r, "w", 1, fx.x.pow(2), Poly::from_long(fx.s, 1)),
                         doctest::Contains("not in w*S"), ValidationError);
    // degree constraint: w*g must match deg f when g != 0
    CHECK_THROWS_AS(SectionData(fx.r, "w", 1, fx.x.pow(3), fx.w), ValidationError);
    // f must not mention w
    CHECK_THROWS_AS(SectionData(fx.r, "w", 1, fx.w.pow(2), fx.w), ValidationError);
    // g = 0 is allowed (F = f)
    SectionData plain(fx.r, "w", 1, fx.x.pow(2), Poly::zero(fx.s));
    CHECK(plain.F() == fx.x.pow(2).into(plain.ext_ring()));
}

TEST_CASE("push of the A1 block matches the displayed matrices") {
    Cal fx;
    SectionData sec(fx.r, "w", 1, fx.x.pow(2), fx.w);
    auto E = MatrixFactorization::koszul(fx.x, fx.x);
    auto P = push(E, sec);
    CHECK(P.rank() == 2);
    CHECK(P.d() == TwistTuple{0, 0});
    CHECK(P.e() == TwistTuple{-1, -1});
    const Ring& S = sec.ext_ring();
    Poly xs = fx.x.into(S);
    CHECK(P.phi().at(0, 0) == xs);
    CHECK(P.phi().at(0, 1) == fx.w);
    CHECK(P.phi().at(1, 0) == -fx.w);
    CHECK(P.phi().at(1, 1) == xs);
    CHECK(P.psi().at(0, 0) == xs);
    CHECK(P.psi().at(0, 1) == -fx.w);
    CHECK(P.psi().at(1, 0) == fx.w);
    CHECK(P.psi().at(1, 1) == xs);
}

TEST_CASE("push twist tuples follow e+h-a and d-a") {
    Cal fx;
    Ring s2 = fx.r.extend("w", 2);
    SectionData sec(fx.r, "w", 2, fx.x.pow(4), Poly::variable(s2, 1)); // F = x^4 + w^2
    auto E = MatrixFactorization::koszul(fx.x, fx.x.pow(3));
    auto P = push(E, sec);
    CHECK(P.d() == TwistTuple{0, 1});   // (d, e+h-a) = (0, -1+4-2)
    CHECK(P.e() == TwistTuple{-1, -2}); // (e, d-a)
    CHECK(P.phi().at(0, 0) == fx.x.into(sec.ext_ring()));
    CHECK(P.phi().at(1, 1) == fx.x.pow(3).into(sec.ext_ring()));

    auto Z = MatrixFactorization::zero_object(fx.r, fx.x.pow(4));
    CHECK(push(Z, sec).rank() == 0);
}

TEST_CASE("push is twist-equivariant as literal data and doubles the rank") {
    Cal fx;
    SectionData sec(fx.r, "w", 1, fx.x.pow(4), fx.w.pow(3)); // F = x^4 + w^4
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        auto blk = [&](int s) {
            return MatrixFactorization::koszul(fx.x.pow(s), fx.x.pow(4 - s));
        };
        auto E = blk(1 + static_cast<int>(rng() % 3));
        for (int extra = 0; extra < 2; ++extra)
            E = direct_sum(E, translate(blk(1 + static_cast<int>(rng() % 3)), 0,
                                        static_cast<int>(rng() % 5) - 2));
        auto P = push(E, sec); // construction re-validates the identities
        CHECK(P.rank() == 2 * E.rank());
        int n = static_cast<int>(rng() % 7) - 3;
        CHECK(push(translate(E, 0, n), sec) == translate(P, 0, n));
    }
}

TEST_CASE("induce_morphism: identity and the J-block generator") {
    Cal fx;
    SectionData sec(fx.r, "w", 1, fx.x.pow(2), fx.w);
    auto E = MatrixFactorization::koszul(fx.x, fx.x);
    auto P = push(E, sec);

    auto id = MorphismPair::identity(E);
    auto zero2 = MorphismPair::zero(translate(E, 1, -1), E, 0);
    auto c1 = induce_morphism(id, zero2, sec);
    CHECK(c1.alpha() == GradedMatrix::identity_on(sec.ext_ring(), P.d()));
    CHECK(c1.beta() == GradedMatrix::identity_on(sec.ext_ring(), P.e()));

    // generator of Hom(E[1](-1), E): alpha = [1], beta = [-1]
    auto shifted = translate(E, 1, -1);
    MorphismPair gen(shifted, E, 0,
                     GradedMatrix(fx.r, {0}, {0}, 0, {Poly::from_long(fx.r, 1)}),
                     GradedMatrix(fx.r, {-1}, {-1}, 0, {Poly::from_long(fx.r, -1)}));
    auto cJ = induce_morphism(MorphismPair::zero(E, E, 0), gen, sec);
    // the rotation block [[0, 1], [-1, 0]]
    Poly one = Poly::from_long(sec.ext_ring(), 1);
    CHECK(cJ.alpha().at(0, 0).is_zero());
    CHECK(cJ.alpha().at(0, 1) == one);
    CHECK(cJ.alpha().at(1, 0) == -one);
    CHECK(cJ.alpha().at(1, 1).is_zero());
    CHECK(cJ.beta() == cJ.alpha().retyped(cJ.beta().target(), cJ.beta().source(), 0));

    // a cycle, not a boundary; together with the identity it spans End
    HomResult endo = hom_space(P, P, 0);
    CHECK(endo.dim() == 2);
    CHECK_FALSE(endo.is_boundary(cJ));
    CHECK_FALSE(endo.is_boundary(c1));
    CHECK_FALSE(endo.same_class(c1, cJ));

    // the induced class is zero exactly when both inputs are zero
    auto c0 = induce_morphism(MorphismPair::zero(E, E, 0), zero2, sec);
    CHECK(endo.is_boundary(c0));

    // mismatched inputs are rejected
    CHECK_THROWS_AS(induce_morphism(id, MorphismPair::zero(E, E, 0), sec), ValidationError);
}
