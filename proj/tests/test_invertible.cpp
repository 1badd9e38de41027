#include <doctest.h>

#include "mfw/dsl.hpp"
#include "mfw/invertible.hpp"

using namespace mfw;

TEST_CASE("exponent matrices") {
    Field q = Field::rationals();
    Ring r(q, {"x", "y"}, {1, 1});
    ExponentMatrix A = exponent_matrix(parse_polynomial(r, "x^2*y + y^3"));
    CHECK(A.a == std::vector<std::vector<long>>{{2, 1}, {0, 3}});

    Ring r2(q, {"x", "w"}, {1, 1});
    ExponentMatrix D = exponent_matrix(parse_polynomial(r2, "x^2 + w^2"));
    CHECK(D.a == std::vector<std::vector<long>>{{2, 0}, {0, 2}});

    // term/variable count mismatch
    CHECK_THROWS_AS(exponent_matrix(parse_polynomial(r, "x^2 + x*y + y^2")), ValidationError);
    // non-unit coefficient
    CHECK_THROWS_AS(exponent_matrix(parse_polynomial(r, "2*x^2 + y^3")), ValidationError);
    // zero determinant
    CHECK_THROWS_AS(exponent_matrix(parse_polynomial(r, "x*y + x^2*y^2")), ValidationError);
    CHECK_THROWS_AS(make_exponent_matrix({"x", "y"}, {{1, 1}, {1, 1}}), ValidationError);
}

TEST_CASE("Berglund-Hubsch transpose") {
    Field q = Field::rationals();
    Ring chain(q, {"x", "y"}, {1, 1});
    ExponentMatrix A = exponent_matrix(parse_polynomial(chain, "x^2*y + y^3"));
    Poly t = bh_transpose(A, q);
    CHECK(t.str() == "x^2 + x*y^3");
    // the result ring carries the weights of the transposed matrix
    CHECK(t.ring().weights() == std::vector<int>{3, 1});
    CHECK(t.degree() == 6);

    // diagonal (Brieskorn) polynomials are fixed points
    Ring r2(q, {"x", "w"}, {1, 1});
    ExponentMatrix D = exponent_matrix(parse_polynomial(r2, "x^2 + w^2"));
    CHECK(bh_transpose(D, q).str() == "x^2 + w^2");

    // involution: exponent_matrix(bh_transpose(A)) = A^T, twice = A
    ExponentMatrix At = exponent_matrix(t);
    CHECK(At.a == A.transposed().a);
    CHECK(exponent_matrix(bh_transpose(At, q)).a == A.a);

    // At the matrix level the involution is exact for every shape: the
    // polynomial of A^T transposed back is the polynomial of A. (Canonical
    // term reordering may permute rows of exponent_matrix(bh_transpose(A))
    // for loops, where all transpose terms share the degree c.)
    Ring loop(q, {"x", "y"}, {1, 1});
    Poly lp = parse_polynomial(loop, "x^3*y + x*y^4");
    ExponentMatrix L = exponent_matrix(lp);
    auto sorted = [](std::vector<std::vector<long>> rows) {
        std::sort(rows.begin(), rows.end());
        return rows;
    };
    Poly back = bh_transpose(L.transposed(), q);
    CHECK(sorted(exponent_matrix(back).a) == sorted(L.a)); // same term set as lp
    ExponentMatrix Lt = exponent_matrix(bh_transpose(L, q));
    CHECK(sorted(Lt.a) == sorted(L.transposed().a));
}

TEST_CASE("weight systems from exponent matrices") {
    auto ws = weights_from_matrix(make_exponent_matrix({"x", "w"}, {{2, 0}, {0, 2}}));
    CHECK(ws.weights == std::vector<long>{1, 1});
    CHECK(ws.degree == 2);

    auto chain = weights_from_matrix(make_exponent_matrix({"x", "y"}, {{2, 1}, {0, 3}}));
    CHECK(chain.weights == std::vector<long>{1, 1});
    CHECK(chain.degree == 3);

    ExponentMatrix singular{{"x", "y"}, {{1, 1}, {1, 1}}};
    CHECK_THROWS_AS(weights_from_matrix(singular), ValidationError);

    // the polynomial rebuilt from the weights is homogeneous of degree c
    Field q = Field::rationals();
    ExponentMatrix A = make_exponent_matrix({"x", "y", "z"}, {{3, 1, 0}, {0, 2, 1}, {1, 0, 4}});
    auto w = weights_from_matrix(A);
    std::vector<int> wi(w.weights.begin(), w.weights.end());
    Ring r(q, A.vars, wi);
    std::vector<Poly::Term> terms;
    for (const auto& row : A.a)
        terms.push_back(Poly::Term{std::vector<int>(row.begin(), row.end()), Scalar::one(q)});
    Poly rebuilt = Poly::from_terms(r, std::move(terms));
    CHECK(rebuilt.degree() == static_cast<int>(w.degree));
}
