#pragma once

#include <vector>

#include "mfw/poly.hpp"

namespace mfw {

/// Twists (t_1, ..., t_m) of a graded free module ⊕_i R(t_i).
using TwistTuple = std::vector<int>;

TwistTuple tuple_shift(const TwistTuple& t, int n);
TwistTuple tuple_concat(const TwistTuple& a, const TwistTuple& b);

/// Matrix of polynomials between twisted free modules, with rows typed by the
/// target tuple and columns by the source tuple. Convention: M(n)_m = M_{n+m},
/// so entry (j, i) is zero or homogeneous of degree target_j - source_i + offset.
class GradedMatrix {
public:
    GradedMatrix(Ring ring, TwistTuple target, TwistTuple source, int offset,
                 std::vector<Poly> entries); // validates degrees

    static GradedMatrix zero(const Ring& r, TwistTuple target, TwistTuple source, int offset);
    static GradedMatrix identity_on(const Ring& r, const TwistTuple& t);
    /// f times the identity on ⊕R(t); offset must equal deg f (or f = 0).
    static GradedMatrix scalar_diag(const Ring& r, const Poly& f, const TwistTuple& t, int offset);

    const Ring& ring() const { return ring_; }
    const TwistTuple& target() const { return target_; }
    const TwistTuple& source() const { return source_; }
    int offset() const { return offset_; }
    std::size_t rows() const { return target_.size(); }
    std::size_t cols() const { return source_.size(); }

    const Poly& at(std::size_t j, std::size_t i) const { return entries_[j * cols() + i]; }

    GradedMatrix operator+(const GradedMatrix& o) const;
    GradedMatrix operator-(const GradedMatrix& o) const;
    GradedMatrix operator-() const;
    GradedMatrix scaled(const Poly& p) const; // offset grows by deg p

    /// Same entries, both tuples shifted by n (an internal twist of both ends).
    GradedMatrix twist(int n) const;
    /// Same entries under new typing; degree constraints are re-checked.
    GradedMatrix retyped(TwistTuple target, TwistTuple source, int offset) const;
    /// Entries mapped along a ring inclusion (by variable name).
    GradedMatrix into(const Ring& bigger, TwistTuple target, TwistTuple source, int offset) const;

    GradedMatrix submatrix(std::size_t row0, std::size_t row1, std::size_t col0,
                           std::size_t col1) const;

    bool is_zero() const;
    bool operator==(const GradedMatrix& o) const;
    bool operator!=(const GradedMatrix& o) const { return !(*this == o); }

    std::string str() const;

private:
    Ring ring_;
    TwistTuple target_, source_;
    int offset_;
    std::vector<Poly> entries_; // row-major
};

/// Matrix product A(B(x)); requires A.source = B.target, offsets add.
GradedMatrix compose(const GradedMatrix& a, const GradedMatrix& b);

/// 2x2 block assembly; all blocks share the ring and offset, tuples must be
/// consistent along rows and columns.
GradedMatrix block2x2(const GradedMatrix& a11, const GradedMatrix& a12, const GradedMatrix& a21,
                      const GradedMatrix& a22);

} // namespace mfw
