#include <doctest.h>

#include "mfw/dsl.hpp"
#include "mfw/poly.hpp"

using namespace mfw;

TEST_CASE("ring construction and a-invariant") {
    Field q = Field::rationals();
    Ring r(q, {"x"}, {1});
    CHECK(r.a_invariant() == -1);

    Ring s = r.extend("w", 1);
    CHECK(s.nvars() == 2);
    CHECK(s.weights() == std::vector<int>{1, 1});
    CHECK(s.a_invariant() == -2);

    CHECK_THROWS_AS(r.extend("x", 1), ValidationError); // wname not fresh
    CHECK_THROWS_AS(Ring(q, {"x", "x"}, {1, 1}), ValidationError);
    CHECK_THROWS_AS(Ring(q, {"x"}, {0}), ValidationError);
}

TEST_CASE("degrees and the g in wS membership test") {
    Field q = Field::rationals();
    Ring r(q, {"x"}, {1});
    Poly x = Poly::variable(r, 0);
    CHECK(x.pow(2).degree() == 2);

    Ring s = r.extend("w", 1);
    Poly w = Poly::variable(s, 1);
    CHECK(w.substitute_zero(1).is_zero()); // g = w lies in wS
    Poly one = Poly::from_long(s, 1);
    CHECK_FALSE((w + one).substitute_zero(1).is_zero());

    CHECK_FALSE((x + x.pow(2)).degree().has_value()); // inhomogeneous
    CHECK((x + x.pow(2)).is_homogeneous() == false);
}

TEST_CASE("monomial enumeration") {
    Field q = Field::rationals();
    Ring r(q, {"x", "y"}, {1, 2});
    auto mons = monomials_of_degree(r, 4);
    REQUIRE(mons.size() == 3); // x^4, x^2 y, y^2 in this order
    CHECK(mons[0] == std::vector<int>{4, 0});
    CHECK(mons[1] == std::vector<int>{2, 1});
    CHECK(mons[2] == std::vector<int>{0, 2});

    CHECK(monomials_of_degree(r, -1).empty());
    Ring r1(q, {"x"}, {1});
    auto m3 = monomials_of_degree(r1, 3);
    REQUIRE(m3.size() == 1);
    CHECK(m3[0] == std::vector<int>{3});

    // weight-2 variable: odd degrees have no monomials
    Ring r2(q, {"u"}, {2});
    CHECK(monomials_of_degree(r2, 3).empty());
    CHECK(monomials_of_degree(r2, 4).size() == 1);
}

TEST_CASE("multiplication is graded") {
    Field q = Field::rationals();
    Ring r(q, {"x", "y"}, {1, 2});
    Poly x = Poly::variable(r, 0), y = Poly::variable(r, 1);
    Poly p = x.pow(2) + y;       // degree 2
    Poly s = x.pow(3) + x * y;   // degree 3
    CHECK(p.degree() == 2);
    CHECK(s.degree() == 3);
    CHECK((p * s).degree() == 5);
    CHECK((p * Poly::zero(r)).is_zero());
}

TEST_CASE("parse and print round-trip") {
    Field q = Field::rationals();
    Ring r(q, {"x", "y"}, {1, 2});
    for (const char* text : {"x^2*y - 3*y^3 + 1/2", "x", "0", "-x", "(x + y)*(x - y)",
                             "2*x^2 + x^2", "y - y"}) {
        Poly p = parse_polynomial(r, text);
        CHECK(parse_polynomial(r, p.str()) == p);
    }
    CHECK(parse_polynomial(r, "(x + y)*(x - y)") == parse_polynomial(r, "x^2 - y^2"));
    CHECK(parse_polynomial(r, "3*x - x - x - x").is_zero());

    Field p5 = Field::prime(5);
    Ring rp(p5, {"x"}, {1});
    Poly p = parse_polynomial(rp, "7*x"); // = 2x
    CHECK(p.str() == "2*x");
    CHECK(parse_polynomial(rp, "1/2").str() == "3"); // inverse of 2 mod 5

    CHECK_THROWS_AS(parse_polynomial(r, "x +"), ParseError);
    CHECK_THROWS_AS(parse_polynomial(r, "z"), ParseError);
    CHECK_THROWS_AS(parse_polynomial(r, "x ^ y"), ParseError);
}

TEST_CASE("ring embeddings") {
    Field q = Field::rationals();
    Ring r(q, {"x"}, {1});
    Ring s = r.extend("w", 2);
    Poly x = Poly::variable(r, 0);
    Poly xs = x.into(s);
    CHECK(xs.ring() == s);
    CHECK(xs.restrict_to(r) == x);
    Poly w = Poly::variable(s, 1);
    CHECK_THROWS_AS(w.restrict_to(r), ValidationError);

    Ring other(q, {"x"}, {2}); // same name, different weight
    CHECK_THROWS_AS(x.into(other), ValidationError);
}
