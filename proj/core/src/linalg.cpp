#include "mfw/linalg.hpp"

namespace mfw {

ScalarMatrix ScalarMatrix::identity(const Field& f, std::size_t n) {
    ScalarMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

bool ScalarMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool ScalarMatrix::operator==(const ScalarMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && a_ == o.a_;
}

ScalarMatrix ScalarMatrix::transpose() const {
    ScalarMatrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
    if (cols_ != o.rows_) throw ValidationError("matrix product shape mismatch");
    ScalarMatrix p(field_, rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& x = at(r, k);
            if (x.is_zero()) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) {
                const Scalar& y = o.at(k, c);
                if (!y.is_zero()) p.at(r, c) += x * y;
            }
        }
    return p;
}

void ScalarMatrix::set_column(std::size_t c, const std::vector<Scalar>& v) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

std::vector<Scalar> ScalarMatrix::column(std::size_t c) const {
    std::vector<Scalar> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
}

RrefResult rref(const ScalarMatrix& m) {
    RrefResult res{m, {}, 0};
    ScalarMatrix& a = res.mat;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row)
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(piv, c), a.at(row, c));
        Scalar inv = a.at(row, col).inverse();
        for (std::size_t c = col; c < a.cols(); ++c) a.at(row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row) continue;
            const Scalar factor = a.at(r, col);
            if (factor.is_zero()) continue;
            for (std::size_t c = col; c < a.cols(); ++c)
                a.at(r, c) -= factor * a.at(row, c);
        }
        res.pivot_cols.push_back(col);
        ++row;
    }
    res.rank = res.pivot_cols.size();
    return res;
}

std::size_t rank(const ScalarMatrix& m) { return rref(m).rank; }

ScalarMatrix nullspace(const ScalarMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    std::size_t k = m.cols() - r.rank;
    ScalarMatrix basis(m.field(), m.cols(), k);
    std::size_t out = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        basis.at(free, out) = Scalar::one(m.field());
        for (std::size_t pr = 0; pr < r.pivot_cols.size(); ++pr)
            basis.at(r.pivot_cols[pr], out) = -r.mat.at(pr, free);
        ++out;
    }
    return basis;
}

ScalarMatrix column_space_basis(const ScalarMatrix& m) {
    RrefResult r = rref(m.transpose());
    ScalarMatrix basis(m.field(), m.rows(), r.rank);
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t c = 0; c < m.rows(); ++c) basis.at(c, i) = r.mat.at(i, c);
    return basis;
}

ScalarMatrix hstack(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.rows() != b.rows()) throw ValidationError("hstack row mismatch");
    ScalarMatrix m(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) m.at(r, a.cols() + c) = b.at(r, c);
    }
    return m;
}

bool in_column_span(const ScalarMatrix& basis, const std::vector<Scalar>& v) {
    ScalarMatrix ext(basis.field(), basis.rows(), basis.cols() + 1);
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        for (std::size_t c = 0; c < basis.cols(); ++c) ext.at(r, c) = basis.at(r, c);
        ext.at(r, basis.cols()) = v[r];
    }
    return rank(ext) == rank(basis);
}

std::optional<std::vector<Scalar>> solve(const ScalarMatrix& a, const std::vector<Scalar>& b) {
    ScalarMatrix aug(a.field(), a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    RrefResult r = rref(aug);
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
        if (r.pivot_cols[i] == a.cols()) return std::nullopt; // pivot in the RHS column
    std::vector<Scalar> x(a.cols(), Scalar::zero(a.field()));
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
        x[r.pivot_cols[i]] = r.mat.at(i, a.cols());
    return x;
}

Scalar determinant(const ScalarMatrix& m) {
    if (m.rows() != m.cols()) throw ValidationError("determinant of non-square matrix");
    ScalarMatrix a = m;
    Scalar det = Scalar::one(m.field());
    for (std::size_t col = 0; col < a.cols(); ++col) {
        std::size_t piv = col;
        while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
        if (piv == a.rows()) return Scalar::zero(m.field());
        if (piv != col) {
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(piv, c), a.at(col, c));
            det = -det;
        }
        det *= a.at(col, col);
        Scalar inv = a.at(col, col).inverse();
        for (std::size_t r = col + 1; r < a.rows(); ++r) {
            Scalar factor = a.at(r, col) * inv;
            if (factor.is_zero()) continue;
            for (std::size_t c = col; c < a.cols(); ++c)
                a.at(r, c) -= factor * a.at(col, c);
        }
    }
    return det;
}

} // namespace mfw
