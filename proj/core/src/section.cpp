#include "mfw/section.hpp"

namespace mfw {

SectionData::SectionData(Ring base, const std::string& wname, int a, Poly f, Poly g)
    : base_(std::move(base)), ext_(base_.extend(wname, a)), a_(a) {
    w_index_ = *ext_.index_of(wname);
    if (f.ring() == ext_) f = f.restrict_to(base_); // reject an f that mentions w
    if (f.ring() != base_) throw ValidationError("section: f must live over the base ring");
    if (f.is_zero()) throw ValidationError("section: f must be nonzero");
    auto hf = f.degree();
    if (!hf) throw ValidationError("section: f = " + f.str() + " is inhomogeneous");
    h_ = *hf;
    f_ = std::move(f);
    if (g.ring() == base_) g = g.into(ext_);
    if (g.ring() != ext_) throw ValidationError("section: g must live over the extended ring");
    if (!g.substitute_zero(w_index_).is_zero())
        throw ValidationError("section: g = " + g.str() + " is not in w*S");
    if (!g.is_zero()) {
        auto dg = g.degree();
        if (!dg) throw ValidationError("section: g = " + g.str() + " is inhomogeneous");
        if (*dg + a_ != h_)
            throw ValidationError("section: deg(w*g) = " + std::to_string(*dg + a_) +
                                  " differs from deg f = " + std::to_string(h_));
    }
    g_ = std::move(g);
    F_ = f_.into(ext_) + Poly::variable(ext_, w_index_) * g_;
    g_over_w_ = g_.is_zero() ? Poly::zero(ext_) : g_.divide_by_var(w_index_);
}

bool SectionData::operator==(const SectionData& o) const {
    return base_ == o.base_ && ext_ == o.ext_ && w_index_ == o.w_index_ && a_ == o.a_ &&
           f_ == o.f_ && g_ == o.g_;
}

MatrixFactorization push(const MatrixFactorization& E, const SectionData& sec) {
    if (E.ring() != sec.base_ring())
        throw ValidationError("push: factorization does not live over the section's base ring");
    if (E.f() != sec.f())
        throw ValidationError("push: factorization of " + E.f().str() +
                              ", but the section has f = " + sec.f().str());
    const Ring& S = sec.ext_ring();
    const int h = sec.h(), a = sec.a();
    const Poly w = Poly::variable(S, sec.w_index());
    const Poly& g = sec.g();

    TwistTuple d2 = tuple_concat(E.d(), tuple_shift(E.e(), h - a));
    TwistTuple e2 = tuple_concat(E.e(), tuple_shift(E.d(), -a));

    GradedMatrix phiS = E.phi().into(S, E.d(), E.e(), 0);
    GradedMatrix psiS0 = E.psi().into(S, tuple_shift(E.e(), h - a), tuple_shift(E.d(), -a), 0);
    GradedMatrix wId = GradedMatrix::scalar_diag(S, w, E.d(), a)
                           .retyped(E.d(), tuple_shift(E.d(), -a), 0);
    GradedMatrix gId = GradedMatrix::scalar_diag(S, g, E.e(), h - a)
                           .retyped(tuple_shift(E.e(), h - a), E.e(), 0);
    GradedMatrix phi2 = block2x2(phiS, wId, -gId, psiS0);

    GradedMatrix psiS = E.psi().into(S, E.e(), E.d(), h);
    GradedMatrix wId2 = GradedMatrix::scalar_diag(S, w, E.e(), a)
                            .retyped(E.e(), tuple_shift(E.e(), h - a), h);
    GradedMatrix gId2 = GradedMatrix::scalar_diag(S, g, E.d(), h - a)
                            .retyped(tuple_shift(E.d(), -a), E.d(), h);
    GradedMatrix phiS2 = E.phi().into(S, tuple_shift(E.d(), -a), tuple_shift(E.e(), h - a), h);
    GradedMatrix psi2 = block2x2(psiS, -wId2, gId2, phiS2);

    return MatrixFactorization(S, sec.F(), std::move(d2), std::move(e2), std::move(phi2),
                               std::move(psi2));
}

MorphismPair induce_morphism(const MorphismPair& m1, const MorphismPair& m2,
                             const SectionData& sec) {
    const MatrixFactorization& E = m1.src();
    const MatrixFactorization& Ep = m1.dst();
    const int n = m1.twist();
    if (m2.twist() != n) throw ValidationError("induce_morphism: the two pairs have different twists");
    if (m2.dst() != Ep) throw ValidationError("induce_morphism: m2 must target the same factorization");
    if (m2.src() != translate(E, 1, -sec.a()))
        throw ValidationError("induce_morphism: m2 must start at E[1](-a)");

    const Ring& S = sec.ext_ring();
    const int h = sec.h(), a = sec.a();
    MatrixFactorization P = push(E, sec), Pp = push(Ep, sec);

    // Blocks in the proof's slots; (a2, b2) = (m2.alpha, -m2.beta).
    GradedMatrix a1 = m1.alpha().into(S, tuple_shift(Ep.d(), n), E.d(), 0);
    GradedMatrix b1 = m1.beta().into(S, tuple_shift(Ep.e(), n), E.e(), 0);
    GradedMatrix a2 = m2.alpha().into(S, tuple_shift(Ep.d(), n), tuple_shift(E.e(), h - a), 0);
    GradedMatrix b2 = (-m2.beta()).into(S, tuple_shift(Ep.e(), n), tuple_shift(E.d(), -a), 0);

    const Poly& gw = sec.g_over_w();
    GradedMatrix a21 = (-b2.scaled(gw)).retyped(tuple_shift(Ep.e(), n + h - a), E.d(), 0);
    GradedMatrix a22 = b1.retyped(tuple_shift(Ep.e(), n + h - a), tuple_shift(E.e(), h - a), 0);
    GradedMatrix alpha = block2x2(a1, a2, a21, a22);

    GradedMatrix b21 = (-a2.scaled(gw)).retyped(tuple_shift(Ep.d(), n - a), E.e(), 0);
    GradedMatrix b22 = a1.retyped(tuple_shift(Ep.d(), n - a), tuple_shift(E.d(), -a), 0);
    GradedMatrix beta = block2x2(b1, b2, b21, b22);

    return MorphismPair(std::move(P), std::move(Pp), n, std::move(alpha), std::move(beta));
}

} // namespace mfw
