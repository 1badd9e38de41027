#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mfw/scalar.hpp"

namespace mfw {

/// Dense matrix over an exact field, row-major.
class ScalarMatrix {
public:
    ScalarMatrix(const Field& f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

    static ScalarMatrix identity(const Field& f, std::size_t n);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool is_zero() const;
    bool operator==(const ScalarMatrix& o) const;

    ScalarMatrix transpose() const;
    ScalarMatrix operator*(const ScalarMatrix& o) const;

    void set_column(std::size_t c, const std::vector<Scalar>& v);
    std::vector<Scalar> column(std::size_t c) const;

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

struct RrefResult {
    ScalarMatrix mat;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank;
};

/// Reduced row echelon form. Pivot rule: scan columns left to right, take the
/// first nonzero row below the current one, normalize to 1, eliminate above
/// and below. No magnitude pivoting; arithmetic is exact, output is unique.
RrefResult rref(const ScalarMatrix& m);

std::size_t rank(const ScalarMatrix& m);

/// Basis of the right kernel as matrix columns. For each free column (in
/// increasing order) the basis vector carries 1 there and minus the pivot-row
/// entries at the pivot positions. Deterministic: RREF is unique.
ScalarMatrix nullspace(const ScalarMatrix& m);

/// Canonical basis of the column space: the reduced row-space basis of the
/// transpose, returned as columns.
ScalarMatrix column_space_basis(const ScalarMatrix& m);

/// [a | b] side by side; row counts must agree.
ScalarMatrix hstack(const ScalarMatrix& a, const ScalarMatrix& b);

/// True iff v lies in the span of the columns of basis.
bool in_column_span(const ScalarMatrix& basis, const std::vector<Scalar>& v);

/// One solution of A x = b, or nullopt if inconsistent.
std::optional<std::vector<Scalar>> solve(const ScalarMatrix& a, const std::vector<Scalar>& b);

Scalar determinant(const ScalarMatrix& m);

} // namespace mfw
