#include <doctest.h>

#include <random>

#include "mfw/linalg.hpp"

using namespace mfw;

TEST_CASE("field construction") {
    CHECK(Field::rationals().characteristic() == 0);
    CHECK(Field::rationals().kind() == FieldKind::Rationals);

    Field f5 = Field::prime(5);
    CHECK(f5.characteristic() == 5);
    Scalar two = Scalar::from_long(f5, 2);
    CHECK(two.inverse() == Scalar::from_long(f5, 3)); // 2*3 = 6 = 1 mod 5

    CHECK_THROWS_AS(Field::prime(4), ValidationError);
    CHECK_THROWS_AS(Field::prime(1), ValidationError);
    CHECK_THROWS_AS(Field::prime(1u << 31), ValidationError);
    CHECK(Field::prime(32003).characteristic() == 32003);
}

TEST_CASE("scalar arithmetic stays exact") {
    Field q = Field::rationals();
    Scalar third = Scalar::fraction(q, "1", "3");
    Scalar sum = Scalar::zero(q);
    for (int i = 0; i < 3; ++i) sum += third;
    CHECK(sum.is_one());
    CHECK(Scalar::from_decimal(q, "123456789123456789123456789").str() ==
          "123456789123456789123456789");

    Field p = Field::prime(7);
    CHECK((Scalar::from_long(p, 5) * Scalar::from_long(p, 3)).str() == "1");
    CHECK_THROWS_AS(Scalar::zero(p).inverse(), ValidationError);
    CHECK_THROWS_AS(Scalar::one(p) + Scalar::one(q), ValidationError);
}

namespace {

ScalarMatrix from_rows(const Field& f, std::vector<std::vector<long>> rows) {
    std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    ScalarMatrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar::from_long(f, rows[i][j]);
    return m;
}

} // namespace

TEST_CASE("nullspace basics") {
    Field q = Field::rationals();
    CHECK(nullspace(ScalarMatrix(q, 3, 3)).cols() == 3); // zero matrix
    CHECK(nullspace(from_rows(q, {{1, 2}, {2, 4}})).cols() == 1);
    CHECK(nullspace(ScalarMatrix::identity(q, 4)).cols() == 0);

    // kernel basis convention: free variable gets 1, pivots get -R entries
    ScalarMatrix k = nullspace(from_rows(q, {{1, 2}}));
    CHECK(k.at(0, 0) == Scalar::from_long(q, -2));
    CHECK(k.at(1, 0) == Scalar::from_long(q, 1));
}

TEST_CASE("rank-nullity and determinism over both fields") {
    std::mt19937 rng(7);
    for (const Field& f : {Field::rationals(), Field::prime(32003)}) {
        for (int trial = 0; trial < 25; ++trial) {
            std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
            ScalarMatrix m(f, r, c);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j)
                    m.at(i, j) = Scalar::from_long(f, static_cast<long>(rng() % 7) - 3);
            CHECK(rank(m) + nullspace(m).cols() == c);
            CHECK(nullspace(m) == nullspace(m)); // identical inputs, identical bases
            // every kernel column really is in the kernel
            ScalarMatrix prod = m * nullspace(m);
            CHECK(prod.is_zero());
        }
    }
}

TEST_CASE("solve and span membership") {
    Field q = Field::rationals();
    ScalarMatrix a = from_rows(q, {{1, 1}, {0, 1}});
    auto x = solve(a, {Scalar::from_long(q, 3), Scalar::from_long(q, 1)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Scalar::from_long(q, 2));
    CHECK((*x)[1] == Scalar::from_long(q, 1));

    ScalarMatrix inconsistent = from_rows(q, {{1, 2}, {2, 4}});
    CHECK_FALSE(solve(inconsistent, {Scalar::from_long(q, 1), Scalar::from_long(q, 3)}));

    ScalarMatrix basis = from_rows(q, {{1}, {2}});
    CHECK(in_column_span(basis, {Scalar::from_long(q, 2), Scalar::from_long(q, 4)}));
    CHECK_FALSE(in_column_span(basis, {Scalar::from_long(q, 1), Scalar::from_long(q, 1)}));
}

TEST_CASE("determinant") {
    Field q = Field::rationals();
    CHECK(determinant(from_rows(q, {{2, 1}, {0, 3}})) == Scalar::from_long(q, 6));
    CHECK(determinant(from_rows(q, {{1, 1}, {1, 1}})).is_zero());
    CHECK(determinant(from_rows(q, {{0, 1}, {1, 0}})) == Scalar::from_long(q, -1));
}
