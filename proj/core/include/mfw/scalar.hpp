#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "mfw/errors.hpp"

namespace mfw {

enum class FieldKind { Rationals, PrimeField };

/// Exact coefficient field: the rationals, or GF(p) for a prime p < 2^31.
class Field {
public:
    static Field rationals() { return Field(FieldKind::Rationals, 0); }
    static Field prime(std::uint32_t p);

    FieldKind kind() const { return kind_; }
    std::uint32_t characteristic() const { return p_; }

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string name() const;

private:
    Field(FieldKind k, std::uint32_t p) : kind_(k), p_(p) {}
    FieldKind kind_;
    std::uint32_t p_;
};

/// Element of an exact field. Self-describing: carries its field, and binary
/// operations reject mixed fields.
class Scalar {
public:
    Scalar() : v_(mpq_class(0)) {}

    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar from_long(const Field& f, long n);
    /// Integer literal of arbitrary size (decimal digits, optional sign).
    static Scalar from_decimal(const Field& f, const std::string& digits);
    /// num/den literal; den must be invertible.
    static Scalar fraction(const Field& f, const std::string& num, const std::string& den);

    const Field field() const;

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const; // throws ValidationError on zero
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Canonical text form: "-3/2", "7"; prime-field values as the residue in [0, p).
    std::string str() const;

    /// Underlying rational; throws for prime-field elements.
    const mpq_class& rational_value() const;

private:
    struct PrimeElt {
        std::uint64_t v; // in [0, p)
        std::uint32_t p;
        bool operator==(const PrimeElt&) const = default;
    };

    explicit Scalar(mpq_class q) : v_(std::move(q)) {}
    explicit Scalar(PrimeElt e) : v_(e) {}

    static void check_same(const Scalar& a, const Scalar& b);

    std::variant<mpq_class, PrimeElt> v_;
};

bool is_prime_u32(std::uint32_t n);

} // namespace mfw
