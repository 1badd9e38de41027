#include <doctest.h>

#include "mfw/module_oracle.hpp"
#include "mfw/verify.hpp"

// A rank-2 factorization over two variables: phi = psi = [[y, x^2], [x, -y]]
// squares to (x^3 + y^2) id. Everything the A-series exercises in Krull
// dimension 1 is re-checked here in dimension 2, where the duality exponent
// is 1 rather than 0.

using namespace mfw;

namespace {

struct Cusp {
    Field q = Field::rationals();
    Ring r{q, {"x", "y"}, {2, 3}};
    Poly x = Poly::variable(r, 0);
    Poly y = Poly::variable(r, 1);
    Poly f = x.pow(3) + y.pow(2);
    MatrixFactorization C = make();
    MatrixFactorization make() {
        TwistTuple d{0, -1}, e{-3, -4};
        std::vector<Poly> entries{y, x.pow(2), x, -y};
        GradedMatrix phi(r, d, e, 0, entries);
        GradedMatrix psi(r, e, d, 6, entries);
        return MatrixFactorization(r, f, d, e, std::move(phi), std::move(psi));
    }
    SectionData section() const {
        Ring s = r.extend("w", 3);
        return SectionData(r, "w", 3, f, Poly::variable(s, 2)); // F = x^3 + y^2 + w^2
    }
};

} // namespace

TEST_CASE("cusp factorization: engine and oracle agree") {
    Cusp fx;
    CHECK(fx.C.rank() == 2);
    CHECK(hom_space(fx.C, fx.C, 0).dim() == 1);
    auto M = coker_presentation(fx.C);
    CHECK(stable_hom_dim(M, M, 0) == 1);
    for (int n = -4; n <= 4; ++n)
        CHECK(hom_space(fx.C, fx.C, n).dim() == stable_hom_dim(M, M, n));
    for (int i = 1; i <= 2; ++i)
        CHECK(hom_shifted(fx.C, fx.C, 0, i).dim() == ext_dim_periodic(fx.C, fx.C, i, 0));
}

TEST_CASE("cusp push-forward End and the theorem in Krull dimension 2") {
    Cusp fx;
    SectionData sec = fx.section();
    auto P = push(fx.C, sec);
    CHECK(P.rank() == 4);
    CHECK(hom_space(P, P, 0).dim() == 2);
    CHECK(stable_hom_dim(coker_presentation(P), coker_presentation(P), 0) == 2);

    VerifyReport rep = verify_theorem(fx.C, fx.C, sec, -1, 1, -6, 6);
    CHECK(rep.pass);
    CHECK(rep.convention.delta == 1); // dim Rbar = dim R - 1 = 1 here
    CHECK(rep.convention.sigma == 1);
    CHECK(rep.second_twist == -2);    // r + h - a = -5 + 6 - 3
    CHECK_FALSE(rep.cy_case);

    SerreReport ser = verify_serre(fx.C, fx.C, -6, 6);
    CHECK(ser.pass);
    CHECK(ser.convention.delta == 1);
}

TEST_CASE("cusp morphisms split and reassemble") {
    Cusp fx;
    SectionData sec = fx.section();
    auto P = push(fx.C, sec);
    HomResult endo = hom_space(P, P, 0);
    for (std::size_t c = 0; c < endo.cycle_basis().cols(); ++c) {
        auto pair = endo.pair_from_vector(endo.cycle_basis().column(c));
        auto [m1, m2] = split_morphism(pair, sec);
        CHECK(endo.same_class(induce_morphism(m1, m2, sec), pair));
    }
}
