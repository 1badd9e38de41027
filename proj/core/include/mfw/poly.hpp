#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mfw/ring.hpp"

namespace mfw {

/// Homogeneous-or-not multivariate polynomial over a graded ring. Terms are
/// kept in canonical graded-lex descending order with nonzero coefficients.
class Poly {
public:
    struct Term {
        std::vector<int> exp;
        Scalar coeff;
        bool operator==(const Term& o) const { return exp == o.exp && coeff == o.coeff; }
    };

    Poly() = default; // null polynomial; only assignment is valid

    static Poly zero(const Ring& r);
    static Poly constant(const Ring& r, const Scalar& c);
    static Poly from_long(const Ring& r, long n);
    static Poly variable(const Ring& r, std::size_t index);
    static Poly monomial(const Ring& r, std::vector<int> exp, const Scalar& c);
    /// Builds from an arbitrary term list (normalizes).
    static Poly from_terms(const Ring& r, std::vector<Term> terms);

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    /// Weighted degree when all terms agree; nullopt for the zero polynomial
    /// or an inhomogeneous one (use is_zero to tell them apart).
    std::optional<int> degree() const;
    bool is_homogeneous() const { return is_zero() || degree().has_value(); }
    bool is_homogeneous_of_degree(int d) const { return is_zero() || degree() == d; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const Scalar& c) const;
    Poly pow(int e) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Sets one variable to zero (drops every term that contains it).
    Poly substitute_zero(std::size_t var) const;
    /// Exact division by one variable; every term must contain it.
    Poly divide_by_var(std::size_t var) const;
    /// True if the variable appears in some term.
    bool mentions(std::size_t var) const;

    /// Coefficient of a monomial (zero scalar when absent).
    Scalar coefficient_of(const std::vector<int>& exp) const;

    /// Re-express in a ring that contains this ring's variables by name
    /// (weights must agree). Throws if a variable is missing.
    Poly into(const Ring& bigger) const;
    /// Inverse direction: all exponents on variables absent from the smaller
    /// ring must vanish.
    Poly restrict_to(const Ring& smaller) const;

    /// Canonical text form, e.g. "x^2*y - 3*y^3 + 1/2".
    std::string str() const;

private:
    Poly(Ring r, std::vector<Term> t) : ring_(std::move(r)), terms_(std::move(t)) {}
    void normalize();

    Ring ring_;
    std::vector<Term> terms_;
};

} // namespace mfw
