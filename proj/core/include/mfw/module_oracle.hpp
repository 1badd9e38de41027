#pragma once

#include "mfw/linalg.hpp"
#include "mfw/mf.hpp"

namespace mfw {

/// Hypersurface quotient R/(f): every graded piece is handled as the ambient
/// polynomial piece modulo the subspace of f-multiples (no Groebner machinery;
/// the ideal is principal).
struct QuotientRing {
    QuotientRing(Ring ambient_, Poly modulus_);

    Ring ambient;
    Poly modulus;
    int h; // degree of the modulus

    bool operator==(const QuotientRing& o) const {
        return ambient == o.ambient && modulus == o.modulus;
    }
};

/// Graded module given by generators (at twists d_i) and a relation matrix
/// whose columns generate the kernel of the free cover.
class PresentedModule {
public:
    PresentedModule(QuotientRing q, TwistTuple gens, GradedMatrix relations);

    const QuotientRing& quotient() const { return q_; }
    const TwistTuple& gens() const { return gens_; }
    const GradedMatrix& relations() const { return relations_; }

private:
    QuotientRing q_;
    TwistTuple gens_;
    GradedMatrix relations_;
};

/// Mbar = coker(phi) over R/(f), generators at the d-tuple.
PresentedModule coker_presentation(const MatrixFactorization& E);

/// Degree-wise k-dimensions over the inclusive window [lo, hi].
std::vector<long> hilbert_function(const PresentedModule& M, int lo, int hi);

/// dim of degree-0 homs M -> N(n) (generator images constrained by relations,
/// modulo representatives of zero), not yet stabilized.
long hom_dim_modules(const PresentedModule& M, const PresentedModule& N, int twist);

/// Stable hom dimension: module homs minus those factoring through a
/// projective, computed as the image of Hom(M, P(n)) -> Hom(M, N(n)) along
/// the free cover P of N.
long stable_hom_dim(const PresentedModule& M, const PresentedModule& N, int twist);

/// Ext^i over R/(f) of the cokernels, internal degree 0 against N(n), from
/// the 2-periodic resolution ... -> R(e-h) -> R(d-h) -> R(e) -> R(d) -> Mbar
/// with alternating phi / psi differentials. Requires i >= 1.
long ext_dim_periodic(const MatrixFactorization& E, const MatrixFactorization& Ep, int i,
                      int twist);

} // namespace mfw
