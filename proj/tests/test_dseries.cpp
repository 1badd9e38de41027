#include <doctest.h>

#include "mfw/module_oracle.hpp"
#include "mfw/verify.hpp"

// D-type hypersurface f = x^3 + x y^2 = x (x^2 + y^2) over weights (1, 1):
// a second Calabi-Yau section (r + h = -2 + 3 = 1 = a) away from the
// A-series, with orthogonal rank-1 objects.

using namespace mfw;

namespace {

struct D4 {
    Field q = Field::rationals();
    Ring r{q, {"x", "y"}, {1, 1}};
    Poly x = Poly::variable(r, 0);
    Poly y = Poly::variable(r, 1);
    Poly quad = x.pow(2) + y.pow(2);
    MatrixFactorization D = MatrixFactorization::koszul(x, quad);
    MatrixFactorization Dq = MatrixFactorization::koszul(quad, x);
    SectionData section() const {
        Ring s = r.extend("w", 1);
        return SectionData(r, "w", 1, x.pow(3) + x * y.pow(2),
                           Poly::variable(s, 2).pow(2)); // F = f + w^3
    }
};

} // namespace

TEST_CASE("D-type objects: engine, oracle and orthogonality") {
    D4 fx;
    CHECK(hom_space(fx.D, fx.D, 0).dim() == 1);
    CHECK(stable_hom_dim(coker_presentation(fx.D), coker_presentation(fx.D), 0) == 1);
    CHECK(hom_space(fx.D, fx.Dq, 0).dim() == 0);
    CHECK(hom_space(fx.Dq, fx.D, 0).dim() == 0);
    for (int n = -3; n <= 3; ++n)
        CHECK(hom_space(fx.D, fx.Dq, n).dim() ==
              stable_hom_dim(coker_presentation(fx.D), coker_presentation(fx.Dq), n));
}

TEST_CASE("D-type Calabi-Yau section passes the theorem and Serre checks") {
    D4 fx;
    SectionData sec = fx.section();
    CHECK(sec.base_ring().a_invariant() + sec.h() == sec.a()); // CY case

    for (const auto* a : {&fx.D, &fx.Dq})
        for (const auto* b : {&fx.D, &fx.Dq}) {
            VerifyReport rep = verify_theorem(*a, *b, sec, -2, 2, -5, 5);
            CHECK(rep.pass);
            CHECK(rep.convention.delta == 1);
            CHECK(rep.cy_case);
            CHECK(rep.second_twist == 0);
        }
    VerifyReport sums = verify_theorem(direct_sum(fx.D, fx.Dq), fx.D, sec, -1, 1, -4, 4);
    CHECK(sums.pass);
    CHECK(verify_serre(fx.D, fx.Dq, -5, 5).pass);
}

TEST_CASE("splitting works on direct-sum push-forwards") {
    D4 fx;
    SectionData sec = fx.section();
    auto E = direct_sum(fx.D, fx.Dq);
    auto P = push(E, sec);
    CHECK(P.rank() == 4);
    HomResult endo = hom_space(P, P, 0);
    // End(D) + End(Dq) from the base, plus the dual of the one class in
    // Hom^1(E, E) (coming from Hom^1(D, Dq) = 1)
    CHECK(endo.dim() == 3);
    CHECK(hom_shifted(fx.D, fx.Dq, 0, 1).dim() == 1);
    CHECK(hom_shifted(E, E, 0, 1).dim() == 1);
    for (std::size_t c = 0; c < endo.cycle_basis().cols(); ++c) {
        auto pair = endo.pair_from_vector(endo.cycle_basis().column(c));
        auto [m1, m2] = split_morphism(pair, sec);
        CHECK(endo.same_class(induce_morphism(m1, m2, sec), pair));
    }
}
