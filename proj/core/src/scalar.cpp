#include "mfw/scalar.hpp"

namespace mfw {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint32_t p) {
    if (p >= (1u << 31))
        throw ValidationError("prime-field modulus " + std::to_string(p) + " is >= 2^31");
    if (!is_prime_u32(p))
        throw ValidationError("modulus " + std::to_string(p) + " is not prime");
    return Field(FieldKind::PrimeField, p);
}

std::string Field::name() const {
    return kind_ == FieldKind::Rationals ? "Q" : "GF(" + std::to_string(p_) + ")";
}

namespace {

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // extended Euclid; a in [1, p)
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt; newt = tmp;
        tmp = r - q * newr;
        r = newr; newr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint32_t p) {
    mpz_class r = z % p;
    if (r < 0) r += p;
    return r.get_ui();
}

} // namespace

Scalar Scalar::zero(const Field& f) {
    if (f.kind() == FieldKind::Rationals) return Scalar(mpq_class(0));
    return Scalar(PrimeElt{0, f.characteristic()});
}

Scalar Scalar::one(const Field& f) {
    if (f.kind() == FieldKind::Rationals) return Scalar(mpq_class(1));
    return Scalar(PrimeElt{1 % f.characteristic(), f.characteristic()});
}

Scalar Scalar::from_long(const Field& f, long n) {
    if (f.kind() == FieldKind::Rationals) return Scalar(mpq_class(n));
    std::uint32_t p = f.characteristic();
    std::int64_t r = n % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return Scalar(PrimeElt{static_cast<std::uint64_t>(r), p});
}

Scalar Scalar::from_decimal(const Field& f, const std::string& digits) {
    mpz_class z;
    if (z.set_str(digits, 10) != 0)
        throw ValidationError("bad integer literal '" + digits + "'");
    if (f.kind() == FieldKind::Rationals) return Scalar(mpq_class(z));
    return Scalar(PrimeElt{reduce_mpz(z, f.characteristic()), f.characteristic()});
}

Scalar Scalar::fraction(const Field& f, const std::string& num, const std::string& den) {
    Scalar n = from_decimal(f, num);
    Scalar d = from_decimal(f, den);
    if (d.is_zero()) throw ValidationError("fraction with zero denominator");
    return n * d.inverse();
}

const Field Scalar::field() const {
    if (std::holds_alternative<mpq_class>(v_)) return Field::rationals();
    return Field::prime(std::get<PrimeElt>(v_).p);
}

bool Scalar::is_zero() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) return sgn(*q) == 0;
    return std::get<PrimeElt>(v_).v == 0;
}

bool Scalar::is_one() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) return *q == 1;
    const auto& e = std::get<PrimeElt>(v_);
    return e.v == 1 % e.p;
}

void Scalar::check_same(const Scalar& a, const Scalar& b) {
    if (a.v_.index() != b.v_.index())
        throw ValidationError("mixed coefficient fields in scalar arithmetic");
    if (const auto* e = std::get_if<PrimeElt>(&a.v_)) {
        if (e->p != std::get<PrimeElt>(b.v_).p)
            throw ValidationError("mixed prime fields GF(" + std::to_string(e->p) + ") and GF(" +
                                  std::to_string(std::get<PrimeElt>(b.v_).p) + ")");
    }
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(*this, o);
    if (const auto* q = std::get_if<mpq_class>(&v_))
        return Scalar(mpq_class(*q + std::get<mpq_class>(o.v_)));
    const auto& a = std::get<PrimeElt>(v_);
    const auto& b = std::get<PrimeElt>(o.v_);
    std::uint64_t s = a.v + b.v;
    if (s >= a.p) s -= a.p;
    return Scalar(PrimeElt{s, a.p});
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(*this, o);
    if (const auto* q = std::get_if<mpq_class>(&v_))
        return Scalar(mpq_class(*q - std::get<mpq_class>(o.v_)));
    const auto& a = std::get<PrimeElt>(v_);
    const auto& b = std::get<PrimeElt>(o.v_);
    std::uint64_t s = a.v + a.p - b.v;
    if (s >= a.p) s -= a.p;
    return Scalar(PrimeElt{s, a.p});
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(*this, o);
    if (const auto* q = std::get_if<mpq_class>(&v_))
        return Scalar(mpq_class(*q * std::get<mpq_class>(o.v_)));
    const auto& a = std::get<PrimeElt>(v_);
    const auto& b = std::get<PrimeElt>(o.v_);
    return Scalar(PrimeElt{(a.v * b.v) % a.p, a.p});
}

Scalar Scalar::operator-() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(-*q));
    const auto& a = std::get<PrimeElt>(v_);
    return Scalar(PrimeElt{a.v == 0 ? 0 : a.p - a.v, a.p});
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw ValidationError("inverse of zero");
    if (const auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(1 / *q));
    const auto& a = std::get<PrimeElt>(v_);
    return Scalar(PrimeElt{mod_inverse(a.v, a.p), a.p});
}

bool Scalar::operator==(const Scalar& o) const {
    if (v_.index() != o.v_.index()) return false;
    if (const auto* q = std::get_if<mpq_class>(&v_)) return *q == std::get<mpq_class>(o.v_);
    return std::get<PrimeElt>(v_) == std::get<PrimeElt>(o.v_);
}

std::string Scalar::str() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) return q->get_str();
    return std::to_string(std::get<PrimeElt>(v_).v);
}

const mpq_class& Scalar::rational_value() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) return *q;
    throw ValidationError("rational_value on a prime-field scalar");
}

} // namespace mfw
