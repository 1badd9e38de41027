#pragma once

#include "mfw/mf.hpp"

namespace mfw {

/// Hyperplane-section data: S = R[w] with deg w = a, F = f + w g homogeneous
/// of the same degree h as f, and g required to lie in w S.
class SectionData {
public:
    /// f over R (homogeneous of degree h); g over S with g in wS and, when
    /// nonzero, deg(w g) = h.
    SectionData(Ring base, const std::string& wname, int a, Poly f, Poly g);

    const Ring& base_ring() const { return base_; }
    const Ring& ext_ring() const { return ext_; }
    std::size_t w_index() const { return w_index_; }
    const std::string& w_name() const { return ext_.vars()[w_index_]; }
    int a() const { return a_; }
    int h() const { return h_; }
    const Poly& f() const { return f_; }       // over R
    const Poly& g() const { return g_; }       // over S
    const Poly& F() const { return F_; }       // over S
    const Poly& g_over_w() const { return g_over_w_; }

    bool operator==(const SectionData& o) const;

private:
    Ring base_, ext_;
    std::size_t w_index_;
    int a_, h_;
    Poly f_, g_, F_, g_over_w_;
};

/// Push-forward on objects: the rank-2m factorization of F over S with
///   phi~ = [[phi, w id], [-g id, psi]],  psi~ = [[psi, -w id], [g id, phi]],
/// target tuple (d, e+h-a) and source tuple (e, d-a).
MatrixFactorization push(const MatrixFactorization& E, const SectionData& sec);

/// Induced morphism on push-forwards from a pair m1: E -> E'(n) and
/// m2: E[1](-a) -> E'(n). The four determined blocks are
///   alpha = [[a1, a2], [-(g/w) b2, b1]],  beta = [[b1, b2], [-(g/w) a2, a1]]
/// where (a1, b1) = m1 and (a2, b2) = (m2.alpha, -m2.beta); the sign on b2
/// converts between the signed suspension and the unsigned component
/// relations a2 psi = phi' b2, b2 phi = psi' a2 that the blocks satisfy.
MorphismPair induce_morphism(const MorphismPair& m1, const MorphismPair& m2,
                             const SectionData& sec);

} // namespace mfw
