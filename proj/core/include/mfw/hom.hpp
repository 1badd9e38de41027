#pragma once

#include <map>

#include "mfw/linalg.hpp"
#include "mfw/mf.hpp"

namespace mfw {

struct HomOptions {
    std::size_t unknown_cap = 20000;
    int jobs = 1; // used by hom_table and the verify harnesses
};

/// Coordinates for the finite-dimensional spaces the hom engine works in: one
/// slot per matrix entry, one coordinate per monomial of the entry's degree.
/// Slot order is block-major, entries row-major, monomials graded-lex; this
/// fixes witness determinism.
class UnknownLayout {
public:
    struct Slot {
        int block; // 0 = alpha (or xi, or first residual), 1 = beta (or eta, or second)
        std::size_t row, col;
        int degree;
        std::vector<std::vector<int>> monomials;
        std::size_t offset;
        std::map<std::vector<int>, std::size_t> index; // exponent -> local position
    };

    UnknownLayout() = default;

    /// One block of slots: target tuple gives rows, source gives columns,
    /// entry (j, i) has degree target_j - source_i + offset.
    void add_block(const Ring& r, const TwistTuple& target, const TwistTuple& source, int offset);

    std::size_t total() const { return total_; }
    const std::vector<Slot>& slots() const { return slots_; }
    const Slot& slot(int block, std::size_t row, std::size_t col) const;

    /// Coordinate index of a monomial inside an entry.
    std::size_t coord(int block, std::size_t row, std::size_t col,
                      const std::vector<int>& exp) const;

private:
    struct BlockDims {
        std::size_t first_slot, rows, cols;
    };
    std::vector<Slot> slots_;
    std::vector<BlockDims> blocks_;
    std::size_t total_ = 0;
};

/// Morphism space in the homotopy category: cocycles (alpha, beta) of
/// internal twist n modulo boundaries of homotopies (xi, eta). Holds witness
/// bases in layout coordinates.
class HomResult {
public:
    HomResult(MatrixFactorization src, MatrixFactorization dst, int twist, int shift,
              UnknownLayout layout, ScalarMatrix cycle_basis, ScalarMatrix boundary_basis);

    const MatrixFactorization& src() const { return src_; }
    /// Target after the shift was folded in: witnesses live on (src, dst).
    const MatrixFactorization& dst() const { return dst_; }
    int twist() const { return twist_; }
    int shift() const { return shift_; }

    long cycle_dim() const { return static_cast<long>(cycle_basis_.cols()); }
    long boundary_dim() const { return static_cast<long>(boundary_basis_.cols()); }
    long dim() const { return cycle_dim() - boundary_dim(); }

    const UnknownLayout& layout() const { return layout_; }
    const ScalarMatrix& cycle_basis() const { return cycle_basis_; }
    const ScalarMatrix& boundary_basis() const { return boundary_basis_; }

    MorphismPair pair_from_vector(const std::vector<Scalar>& v) const;
    std::vector<Scalar> vector_from_pair(const MorphismPair& p) const;

    bool is_boundary(const MorphismPair& p) const;
    bool same_class(const MorphismPair& p, const MorphismPair& q) const;

    /// Cycle-basis columns independent modulo boundaries; a basis of the
    /// morphism space itself (greedy, deterministic).
    std::vector<MorphismPair> quotient_representatives() const;

private:
    MatrixFactorization src_, dst_;
    int twist_, shift_;
    UnknownLayout layout_;
    ScalarMatrix cycle_basis_, boundary_basis_;
};

/// dim Hom(E, E'(n)) with witnesses; shift i = 0.
HomResult hom_space(const MatrixFactorization& E, const MatrixFactorization& Ep, int twist,
                    const HomOptions& opts = {});

/// dim Hom(E, E'[i](n)).
HomResult hom_shifted(const MatrixFactorization& E, const MatrixFactorization& Ep, int twist,
                      int shift, const HomOptions& opts = {});

struct HomTable {
    int shift_lo, shift_hi, twist_lo, twist_hi;
    std::vector<long> dims; // shift-major, then twist
    long at(int shift, int twist) const;
};

HomTable hom_table(const MatrixFactorization& E, const MatrixFactorization& Ep, int shift_lo,
                   int shift_hi, int twist_lo, int twist_hi, const HomOptions& opts = {});

/// The boundary (phi' xi + eta psi, psi' eta + xi phi) as a validated pair.
/// xi: M0 -> M1'(n) (offset 0), eta: M1 -> M0'(n) typed with offset -h.
MorphismPair boundary_pair(const MatrixFactorization& E, const MatrixFactorization& Ep, int twist,
                           const GradedMatrix& xi, const GradedMatrix& eta);

} // namespace mfw
