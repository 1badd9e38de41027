#pragma once

#include "mfw/section.hpp"

namespace mfw {

/// A-series family: f = x^{n+1} over k[x] with weight 1, F = f + w^c with
/// deg w = a and c a = n + 1 (so F is homogeneous), g = w^{c-1} which lies in
/// wS exactly when c >= 2.
struct FamilySpec {
    int n;
    int c;
    int a;
};

struct CorpusInstance {
    SectionData section;
    std::vector<MatrixFactorization> objects; // E_s = koszul(x^s, x^{n+1-s}), s = 1..n
};

CorpusInstance generate(const FamilySpec& spec, const Field& field);

/// All valid (c, a) with c >= 2 and c a = n + 1, in decreasing c.
std::vector<FamilySpec> valid_family_specs(int n);

/// The corresponding .mfw program over Q, with one verify-theorem query per
/// ordered pair of objects.
std::string corpus_program(const FamilySpec& spec);

} // namespace mfw
