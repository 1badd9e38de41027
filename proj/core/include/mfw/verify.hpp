#pragma once

#include "mfw/hom.hpp"
#include "mfw/section.hpp"

namespace mfw {

/// Duality exponent convention. The exponent enters Hom^{delta - i} on the
/// right-hand side; candidates are the Krull dimension of R and of Rbar
/// (= dim R - 1). The sign applies to the internal twist r + h - a (and to
/// r + h in the Serre check).
struct DualityConvention {
    int delta;
    int sigma; // +1 or -1

    bool operator==(const DualityConvention&) const = default;
};

/// How a harness should pick the convention: a fixed one, or auto mode, which
/// tries delta = dim Rbar then delta = dim R with sigma = +1, then the same
/// two with sigma = -1, and reports the first that passes everywhere.
struct ConventionSpec {
    enum class Delta { DimRbar, DimR };
    bool auto_mode = true;
    Delta delta = Delta::DimRbar;
    int sigma = +1;

    static ConventionSpec automatic() { return ConventionSpec{}; }
    static ConventionSpec fixed(Delta d, int sigma = +1) {
        return ConventionSpec{false, d, sigma};
    }
};

struct VerifyRow {
    int shift, twist;
    long lhs, summand1, summand2;
    bool ok;
};

struct VerifyReport {
    bool convention_found = false;
    DualityConvention convention{0, +1};
    std::string convention_name; // "dimRbar" or "dimR"
    int r, h, a;
    int second_twist; // sigma * (r + h - a); 0 exactly in the CY case
    bool cy_case;     // r + h == a
    std::vector<VerifyRow> rows;
    std::vector<std::string> tried; // one summary line per attempted convention
    bool pass = false;
};

/// Checks dim Hom^i(push E, push E'(n)) = dim Hom^i(E, E'(n))
///                                       + dim Hom^{delta-i}(E'(n), E(sigma(r+h-a)))
/// over the inclusive shift and twist ranges.
VerifyReport verify_theorem(const MatrixFactorization& E, const MatrixFactorization& Ep,
                            const SectionData& sec, int shift_lo, int shift_hi, int twist_lo,
                            int twist_hi, const ConventionSpec& conv = {},
                            const HomOptions& opts = {});

struct SerreRow {
    int twist;
    long lhs, rhs;
    bool ok;
};

struct SerreReport {
    bool convention_found = false;
    DualityConvention convention{0, +1};
    std::string convention_name;
    int r, h;
    std::vector<SerreRow> rows;
    std::vector<std::string> tried;
    bool pass = false;
};

/// Checks dim Hom(E, E'(n)) = dim Hom(E'(n), E(sigma(r+h))[delta-1]) over the
/// twist range.
SerreReport verify_serre(const MatrixFactorization& E, const MatrixFactorization& Ep,
                         int twist_lo, int twist_hi, const ConventionSpec& conv = {},
                         const HomOptions& opts = {});

/// Splits a cocycle on (push E, push E') into its two components: a homotopy
/// normalization puts the four distinguished blocks into Mat(R), then m1 and
/// m2 are read off. E and E' are recovered from the block shape of the
/// source and target. Returns (m1: E -> E'(n), m2: E[1](-a) -> E'(n)).
std::pair<MorphismPair, MorphismPair> split_morphism(const MorphismPair& c,
                                                     const SectionData& sec);

struct DirectednessCell {
    std::size_t from, to;
    long hom_base;   // dim Hom0(E_i, E_j)
    long hom_push;   // dim Hom0(push E_i, push E_j)
    long serre_dual; // dim Hom^{delta}(E_j, E_i(sigma(r+h-a)))
    bool completed;  // hom_push == hom_base + serre_dual
};

struct DirectednessReport {
    std::size_t count;
    DualityConvention convention;
    int second_twist;
    std::vector<DirectednessCell> cells; // row-major over ordered pairs
};

/// Table of forward Homs, push-forward Homs and Serre-dual backward summands
/// for each ordered pair; informational, no pass/fail semantics.
DirectednessReport directedness_report(const std::vector<MatrixFactorization>& objects,
                                       const SectionData& sec,
                                       const ConventionSpec& conv = ConventionSpec::fixed(
                                           ConventionSpec::Delta::DimRbar),
                                       const HomOptions& opts = {});

} // namespace mfw
