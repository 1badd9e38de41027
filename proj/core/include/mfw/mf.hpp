#pragma once

#include "mfw/graded_matrix.hpp"

namespace mfw {

/// Graded matrix factorization (phi, psi) of a homogeneous f of degree h:
/// phi: M1 -> M0 and psi: M0(-h) -> M1 with phi psi = psi phi = f id. Stored
/// typing: phi has target d, source e, offset 0; psi has target e, source d,
/// offset h (one canonical typing per matrix; retype when a twisted variant
/// is needed).
class MatrixFactorization {
public:
    MatrixFactorization(Ring ring, Poly f, TwistTuple d, TwistTuple e, GradedMatrix phi,
                        GradedMatrix psi); // verifies both factorization identities

    /// Rank-1 factorization ([u], [v]) of f = u v with d = (0), e = (-deg u).
    static MatrixFactorization koszul(const Poly& u, const Poly& v);
    /// The rank-0 zero object for f.
    static MatrixFactorization zero_object(const Ring& r, const Poly& f);

    const Ring& ring() const { return ring_; }
    const Poly& f() const { return f_; }
    int h() const { return h_; }
    const TwistTuple& d() const { return d_; }
    const TwistTuple& e() const { return e_; }
    std::size_t rank() const { return d_.size(); }
    const GradedMatrix& phi() const { return phi_; }
    const GradedMatrix& psi() const { return psi_; }

    bool operator==(const MatrixFactorization& o) const;
    bool operator!=(const MatrixFactorization& o) const { return !(*this == o); }

private:
    Ring ring_;
    Poly f_;
    int h_;
    TwistTuple d_, e_;
    GradedMatrix phi_, psi_;
};

/// E[i](n). The suspension is E[1] = (M1(h) <-> M0) with maps (-psi, -phi);
/// applied twice it gives E(h) on the nose, and E[-1] is its inverse.
MatrixFactorization translate(const MatrixFactorization& E, int i, int n);
inline MatrixFactorization twist(const MatrixFactorization& E, int n) { return translate(E, 0, n); }

MatrixFactorization direct_sum(const MatrixFactorization& a, const MatrixFactorization& b);

/// Morphism pair (alpha, beta): E -> E'(n), validated on construction:
/// alpha phi = phi' beta and beta psi = psi' alpha.
class MorphismPair {
public:
    MorphismPair(MatrixFactorization src, MatrixFactorization dst, int twist, GradedMatrix alpha,
                 GradedMatrix beta);

    static MorphismPair identity(const MatrixFactorization& E);
    static MorphismPair zero(const MatrixFactorization& src, const MatrixFactorization& dst,
                             int twist);

    const MatrixFactorization& src() const { return src_; }
    const MatrixFactorization& dst() const { return dst_; }
    int twist() const { return twist_; }
    const GradedMatrix& alpha() const { return alpha_; }
    const GradedMatrix& beta() const { return beta_; }

    MorphismPair operator+(const MorphismPair& o) const;
    MorphismPair operator-(const MorphismPair& o) const;
    MorphismPair operator-() const;

    bool operator==(const MorphismPair& o) const;

private:
    MatrixFactorization src_, dst_;
    int twist_;
    GradedMatrix alpha_, beta_;
};

} // namespace mfw
