#pragma once

#include "mfw/linalg.hpp"
#include "mfw/poly.hpp"

namespace mfw {

/// Square exponent matrix of a polynomial with as many terms as variables and
/// unit coefficients; rows are terms in canonical order. Non-zero determinant
/// is enforced; whether the critical point is isolated is not checked.
struct ExponentMatrix {
    std::vector<std::string> vars;
    std::vector<std::vector<long>> a; // row i = exponents of term i

    std::size_t size() const { return a.size(); }
    ExponentMatrix transposed() const;
};

ExponentMatrix make_exponent_matrix(std::vector<std::string> vars,
                                    std::vector<std::vector<long>> rows);

ExponentMatrix exponent_matrix(const Poly& p);

struct WeightSystem {
    std::vector<long> weights; // positive, primitive
    long degree;               // the common degree c
};

/// Smallest positive integer solution of A q = c (1, ..., 1); errors when the
/// matrix is singular or some weight comes out non-positive.
WeightSystem weights_from_matrix(const ExponentMatrix& A);

/// Polynomial of the transposed matrix, over a ring with the same variable
/// names graded by weights_from_matrix of the transpose (all weights 1 when no
/// positive grading exists).
Poly bh_transpose(const ExponentMatrix& A, const Field& field);

} // namespace mfw
