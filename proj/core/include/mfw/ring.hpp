#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mfw/scalar.hpp"

namespace mfw {

/// Weighted Z-graded polynomial ring k[x_1, ..., x_k] with positive weights.
/// Cheap to copy (shared immutable data); equality is structural.
class Ring {
public:
    Ring() = default; // null handle; usable only as a placeholder before assignment
    Ring(const Field& field, std::vector<std::string> vars, std::vector<int> weights);

    /// Append one fresh variable of the given weight.
    Ring extend(const std::string& var, int weight) const;

    const Field& field() const { return data_->field; }
    const std::vector<std::string>& vars() const { return data_->vars; }
    const std::vector<int>& weights() const { return data_->weights; }
    std::size_t nvars() const { return data_->vars.size(); }

    std::optional<std::size_t> index_of(const std::string& var) const;

    /// Gorenstein parameter of the polynomial ring: minus the sum of weights.
    int a_invariant() const;
    /// Krull dimension (= number of variables).
    int dim() const { return static_cast<int>(nvars()); }

    int weighted_degree(const std::vector<int>& exponents) const;

    /// True if this ring's variables are a subset (by name, with equal weight)
    /// of the other ring's variables.
    bool embeds_in(const Ring& bigger) const;

    bool operator==(const Ring& o) const;
    bool operator!=(const Ring& o) const { return !(*this == o); }

    std::string str() const;

private:
    struct Data {
        Field field;
        std::vector<std::string> vars;
        std::vector<int> weights;
    };
    std::shared_ptr<const Data> data_;
};

/// All exponent tuples of weighted degree m, in descending lexicographic
/// order (so x^4 before x^2*y before y^2). Empty for m < 0. Finite because
/// weights are positive.
std::vector<std::vector<int>> monomials_of_degree(const Ring& r, int m);

/// Graded-lex comparison used everywhere a term order is needed: lower
/// weighted degree first, ties broken by ascending lexicographic exponents.
/// (Polynomials store terms in the reverse, descending, order.)
bool grlex_less(const Ring& r, const std::vector<int>& a, const std::vector<int>& b);

} // namespace mfw
