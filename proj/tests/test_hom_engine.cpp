#include <doctest.h>

#include "mfw/corpus.hpp"
#include "mfw/hom.hpp"

using namespace mfw;

namespace {

struct Fam {
    Field q = Field::rationals();
    Ring r{q, {"x"}, {1}};
    Poly x = Poly::variable(r, 0);
    MatrixFactorization E = MatrixFactorization::koszul(x, x); // A1
};

} // namespace

TEST_CASE("hom_space on the calibration objects") {
    Fam fx;
    CHECK(hom_space(fx.E, fx.E, 0).dim() == 1); // identity class

    // f = x^3: Hom0(E_2, E_1) = 1, Hom0(E_1, E_2) = 0
    auto E1 = MatrixFactorization::koszul(fx.x, fx.x.pow(2));
    auto E2 = MatrixFactorization::koszul(fx.x.pow(2), fx.x);
    CHECK(hom_space(E2, E1, 0).dim() == 1);
    CHECK(hom_space(E1, E2, 0).dim() == 0);

    // every entry-degree window negative: the cycle space itself is empty
    HomResult deep = hom_space(fx.E, fx.E, -5);
    CHECK(deep.cycle_dim() == 0);
    CHECK(deep.dim() == 0);

    auto bad = MatrixFactorization::koszul(fx.x, fx.x.pow(2));
    CHECK_THROWS_AS(hom_space(fx.E, bad, 0), ValidationError); // different f
}

TEST_CASE("End of the pushed A1 block is 2-dimensional") {
    Fam fx;
    CorpusInstance a1 = generate(FamilySpec{1, 2, 1}, fx.q);
    auto P = push(a1.objects[0], a1.section);
    HomResult endo = hom_space(P, P, 0);
    CHECK(endo.cycle_dim() == 2);    // {A = B, AJ = JA}
    CHECK(endo.boundary_dim() == 0); // homotopy windows are empty by degree
    CHECK(endo.dim() == 2);
}

TEST_CASE("hom_shifted matches the resolution computations") {
    Fam fx;
    CHECK(hom_shifted(fx.E, fx.E, -1, 1).dim() == 1); // Ext^1(k, k(-1))
    CHECK(hom_shifted(fx.E, fx.E, 0, 1).dim() == 0);  // Ext^1(k, k) in degree 0
    // shift 0 agrees with hom_space
    for (int n : {-2, -1, 0, 1, 2})
        CHECK(hom_shifted(fx.E, fx.E, n, 0).dim() == hom_space(fx.E, fx.E, n).dim());
}

TEST_CASE("hom_table") {
    Fam fx;
    HomTable t = hom_table(fx.E, fx.E, 0, 1, -1, 1);
    for (int i = 0; i <= 1; ++i)
        for (int n = -1; n <= 1; ++n) {
            long expected = ((i == 0 && n == 0) || (i == 1 && n == -1)) ? 1 : 0;
            CHECK(t.at(i, n) == expected);
        }

    auto Z = MatrixFactorization::zero_object(fx.r, fx.x.pow(2));
    HomTable tz = hom_table(Z, Z, -1, 1, -1, 1);
    for (long d : tz.dims) CHECK(d == 0);

    // relabeling: table of E vs E(1) equals table of E vs E with the twist axis shifted
    HomTable t1 = hom_table(fx.E, translate(fx.E, 0, 1), 0, 1, -2, 0);
    for (int i = 0; i <= 1; ++i)
        for (int n = -2; n <= 0; ++n) CHECK(t1.at(i, n) == t.at(i, n + 1));

    // cells are schedule-independent
    HomOptions par;
    par.jobs = 4;
    HomTable tp = hom_table(fx.E, fx.E, 0, 1, -1, 1, par);
    CHECK(tp.dims == t.dims);
}

TEST_CASE("twist equivariance, periodicity, additivity") {
    Fam fx;
    CorpusInstance a2 = generate(FamilySpec{2, 3, 1}, fx.q);
    const auto& E1 = a2.objects[0];
    const auto& E2 = a2.objects[1];
    for (int n = -2; n <= 2; ++n) {
        long base = hom_space(E1, translate(E2, 0, n), 0).dim();
        for (int c : {-2, 1, 3})
            CHECK(hom_space(translate(E1, 0, c), translate(E2, 0, c + n), 0).dim() == base);
        // dim Hom^{i+2}(E, E'(n)) = dim Hom^i(E, E'(n+h))
        for (int i : {0, 1})
            CHECK(hom_shifted(E1, E2, n, i + 2).dim() ==
                  hom_shifted(E1, E2, n + E1.h(), i).dim());
    }
    // additivity in both arguments
    auto S = direct_sum(E1, E2);
    CHECK(hom_space(S, E1, 0).dim() ==
          hom_space(E1, E1, 0).dim() + hom_space(E2, E1, 0).dim());
    CHECK(hom_space(E1, S, 0).dim() ==
          hom_space(E1, E1, 0).dim() + hom_space(E1, E2, 0).dim());
}

TEST_CASE("witness round trip and class arithmetic") {
    Fam fx;
    HomResult endo = hom_space(fx.E, fx.E, 0);
    auto reps = endo.quotient_representatives();
    REQUIRE(reps.size() == 1);
    auto v = endo.vector_from_pair(reps[0]);
    CHECK(endo.pair_from_vector(v) == reps[0]);
    CHECK_FALSE(endo.is_boundary(reps[0]));
    CHECK(endo.is_boundary(reps[0] - reps[0]));
    CHECK(endo.same_class(reps[0], reps[0]));
}

TEST_CASE("the unknown cap guards big computations") {
    Fam fx;
    HomOptions tiny;
    tiny.unknown_cap = 1;
    CHECK_THROWS_AS(hom_space(fx.E, fx.E, 0, tiny), EngineError);
}
