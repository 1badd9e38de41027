#include "mfw/mf.hpp"

namespace mfw {

namespace {

void check_identity(const GradedMatrix& prod, const Poly& f, const TwistTuple& t,
                    const char* which) {
    GradedMatrix expected = GradedMatrix::scalar_diag(prod.ring(), f, t, prod.offset());
    if (prod == expected) return;
    for (std::size_t j = 0; j < prod.rows(); ++j)
        for (std::size_t i = 0; i < prod.cols(); ++i)
            if (prod.at(j, i) != expected.at(j, i))
                throw ValidationError(std::string(which) + " differs from f*id at entry (" +
                                      std::to_string(j) + "," + std::to_string(i) + "): got " +
                                      prod.at(j, i).str() + ", expected " +
                                      expected.at(j, i).str());
    throw ValidationError(std::string(which) + " differs from f*id");
}

} // namespace

MatrixFactorization::MatrixFactorization(Ring ring, Poly f, TwistTuple d, TwistTuple e,
                                         GradedMatrix phi, GradedMatrix psi)
    : ring_(std::move(ring)), f_(std::move(f)), d_(std::move(d)), e_(std::move(e)),
      phi_(std::move(phi)), psi_(std::move(psi)) {
    if (f_.ring() != ring_) throw ValidationError("matrix factorization: f lives in the wrong ring");
    if (f_.is_zero()) throw ValidationError("matrix factorization: f must be nonzero");
    auto deg = f_.degree();
    if (!deg) throw ValidationError("matrix factorization: f = " + f_.str() + " is inhomogeneous");
    h_ = *deg;
    if (d_.size() != e_.size())
        throw ValidationError("matrix factorization: twist tuples d and e differ in length");
    if (phi_.ring() != ring_ || psi_.ring() != ring_)
        throw ValidationError("matrix factorization: matrices live in the wrong ring");
    if (phi_.target() != d_ || phi_.source() != e_ || phi_.offset() != 0)
        throw ValidationError("matrix factorization: phi must map (e) to (d) with offset 0");
    if (psi_.target() != e_ || psi_.source() != d_ || psi_.offset() != h_)
        throw ValidationError("matrix factorization: psi must map (d) to (e) with offset h");
    check_identity(compose(phi_, psi_), f_, d_, "phi*psi");
    check_identity(compose(psi_, phi_), f_, e_, "psi*phi");
}

MatrixFactorization MatrixFactorization::koszul(const Poly& u, const Poly& v) {
    if (u.is_zero() || v.is_zero()) throw ValidationError("koszul factor must be nonzero");
    const Ring& r = u.ring();
    if (v.ring() != r) throw ValidationError("koszul factors live in different rings");
    auto du = u.degree();
    auto dv = v.degree();
    if (!du || !dv) throw ValidationError("koszul factors must be homogeneous");
    Poly f = u * v;
    TwistTuple d{0}, e{-*du};
    GradedMatrix phi(r, d, e, 0, {u});
    GradedMatrix psi(r, e, d, *du + *dv, {v});
    return MatrixFactorization(r, f, d, e, std::move(phi), std::move(psi));
}

MatrixFactorization MatrixFactorization::zero_object(const Ring& r, const Poly& f) {
    TwistTuple empty;
    return MatrixFactorization(r, f, empty, empty, GradedMatrix::zero(r, empty, empty, 0),
                               GradedMatrix::zero(r, empty, empty, f.degree().value_or(0)));
}

bool MatrixFactorization::operator==(const MatrixFactorization& o) const {
    return ring_ == o.ring_ && f_ == o.f_ && d_ == o.d_ && e_ == o.e_ && phi_ == o.phi_ &&
           psi_ == o.psi_;
}

namespace {

MatrixFactorization shift_up(const MatrixFactorization& E) {
    // E[1] = (M1(h) <-> M0): phi' = -psi retyped onto target e+h, psi' = -phi.
    const int h = E.h();
    TwistTuple d1 = tuple_shift(E.e(), h);
    TwistTuple e1 = E.d();
    GradedMatrix phi1 = (-E.psi()).retyped(d1, e1, 0);
    GradedMatrix psi1 = (-E.phi()).retyped(e1, d1, h);
    return MatrixFactorization(E.ring(), E.f(), d1, e1, std::move(phi1), std::move(psi1));
}

MatrixFactorization shift_down(const MatrixFactorization& E) {
    // E[-1] = (M1 <-> M0(-h)); inverse of shift_up on the nose.
    const int h = E.h();
    TwistTuple d1 = E.e();
    TwistTuple e1 = tuple_shift(E.d(), -h);
    GradedMatrix phi1 = (-E.psi()).retyped(d1, e1, 0);
    GradedMatrix psi1 = (-E.phi()).retyped(e1, d1, h);
    return MatrixFactorization(E.ring(), E.f(), d1, e1, std::move(phi1), std::move(psi1));
}

} // namespace

MatrixFactorization translate(const MatrixFactorization& E, int i, int n) {
    MatrixFactorization r = E;
    for (; i > 0; --i) r = shift_up(r);
    for (; i < 0; ++i) r = shift_down(r);
    if (n != 0) {
        TwistTuple d = tuple_shift(r.d(), n);
        TwistTuple e = tuple_shift(r.e(), n);
        GradedMatrix phi = r.phi().retyped(d, e, 0);
        GradedMatrix psi = r.psi().retyped(e, d, r.h());
        r = MatrixFactorization(r.ring(), r.f(), d, e, std::move(phi), std::move(psi));
    }
    return r;
}

MatrixFactorization direct_sum(const MatrixFactorization& a, const MatrixFactorization& b) {
    if (a.ring() != b.ring()) throw ValidationError("direct_sum: ring mismatch");
    if (a.f() != b.f())
        throw ValidationError("direct_sum: factorizations of different polynomials (" +
                              a.f().str() + " vs " + b.f().str() + ")");
    const Ring& r = a.ring();
    TwistTuple d = tuple_concat(a.d(), b.d());
    TwistTuple e = tuple_concat(a.e(), b.e());
    GradedMatrix phi = block2x2(a.phi(), GradedMatrix::zero(r, a.d(), b.e(), 0),
                                GradedMatrix::zero(r, b.d(), a.e(), 0), b.phi());
    GradedMatrix psi = block2x2(a.psi(), GradedMatrix::zero(r, a.e(), b.d(), a.h()),
                                GradedMatrix::zero(r, b.e(), a.d(), a.h()), b.psi());
    return MatrixFactorization(r, a.f(), std::move(d), std::move(e), std::move(phi),
                               std::move(psi));
}

MorphismPair::MorphismPair(MatrixFactorization src, MatrixFactorization dst, int twist,
                           GradedMatrix alpha, GradedMatrix beta)
    : src_(std::move(src)), dst_(std::move(dst)), twist_(twist), alpha_(std::move(alpha)),
      beta_(std::move(beta)) {
    if (src_.ring() != dst_.ring() || src_.f() != dst_.f())
        throw ValidationError("morphism: source and target factor different polynomials");
    if (alpha_.target() != tuple_shift(dst_.d(), twist_) || alpha_.source() != src_.d() ||
        alpha_.offset() != 0)
        throw ValidationError("morphism: alpha must map M0 to M0'(n) with offset 0");
    if (beta_.target() != tuple_shift(dst_.e(), twist_) || beta_.source() != src_.e() ||
        beta_.offset() != 0)
        throw ValidationError("morphism: beta must map M1 to M1'(n) with offset 0");
    if (compose(alpha_, src_.phi()) != compose(dst_.phi().twist(twist_), beta_))
        throw ValidationError("morphism: alpha*phi != phi'*beta (not a cocycle)");
    if (compose(beta_, src_.psi()) != compose(dst_.psi().twist(twist_), alpha_))
        throw ValidationError("morphism: beta*psi != psi'*alpha (not a cocycle)");
}

MorphismPair MorphismPair::identity(const MatrixFactorization& E) {
    return MorphismPair(E, E, 0, GradedMatrix::identity_on(E.ring(), E.d()),
                        GradedMatrix::identity_on(E.ring(), E.e()));
}

MorphismPair MorphismPair::zero(const MatrixFactorization& src, const MatrixFactorization& dst,
                                int twist) {
    return MorphismPair(src, dst, twist,
                        GradedMatrix::zero(src.ring(), tuple_shift(dst.d(), twist), src.d(), 0),
                        GradedMatrix::zero(src.ring(), tuple_shift(dst.e(), twist), src.e(), 0));
}

MorphismPair MorphismPair::operator+(const MorphismPair& o) const {
    if (src_ != o.src_ || dst_ != o.dst_ || twist_ != o.twist_)
        throw ValidationError("morphism addition: typing mismatch");
    return MorphismPair(src_, dst_, twist_, alpha_ + o.alpha_, beta_ + o.beta_);
}

MorphismPair MorphismPair::operator-(const MorphismPair& o) const { return *this + (-o); }

MorphismPair MorphismPair::operator-() const {
    return MorphismPair(src_, dst_, twist_, -alpha_, -beta_);
}

bool MorphismPair::operator==(const MorphismPair& o) const {
    return src_ == o.src_ && dst_ == o.dst_ && twist_ == o.twist_ && alpha_ == o.alpha_ &&
           beta_ == o.beta_;
}

} // namespace mfw
