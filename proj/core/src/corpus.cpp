#include "mfw/corpus.hpp"

namespace mfw {

namespace {

void check_spec(const FamilySpec& spec) {
    if (spec.n < 1) throw ValidationError("corpus: n must be at least 1");
    if (spec.c < 2) throw ValidationError("corpus: c must be at least 2 (g must lie in wS)");
    if (spec.a < 1) throw ValidationError("corpus: a must be positive");
    if (spec.c * spec.a != spec.n + 1)
        throw ValidationError("corpus: c*a = " + std::to_string(spec.c * spec.a) +
                              " differs from n+1 = " + std::to_string(spec.n + 1));
}

} // namespace

CorpusInstance generate(const FamilySpec& spec, const Field& field) {
    check_spec(spec);
    Ring R(field, {"x"}, {1});
    Poly x = Poly::variable(R, 0);
    Poly f = x.pow(spec.n + 1);
    Ring S = R.extend("w", spec.a);
    Poly g = Poly::variable(S, 1).pow(spec.c - 1);
    SectionData sec(R, "w", spec.a, f, g);
    std::vector<MatrixFactorization> objects;
    objects.reserve(spec.n);
    for (int s = 1; s <= spec.n; ++s)
        objects.push_back(MatrixFactorization::koszul(x.pow(s), x.pow(spec.n + 1 - s)));
    return CorpusInstance{std::move(sec), std::move(objects)};
}

std::vector<FamilySpec> valid_family_specs(int n) {
    std::vector<FamilySpec> out;
    for (int c = n + 1; c >= 2; --c)
        if ((n + 1) % c == 0) out.push_back(FamilySpec{n, c, (n + 1) / c});
    return out;
}

std::string corpus_program(const FamilySpec& spec) {
    check_spec(spec);
    const int h = spec.n + 1;
    auto power = [](const std::string& v, int e) {
        return e == 1 ? v : v + "^" + std::to_string(e);
    };
    std::string p;
    p += "field Q;\n";
    p += "ring R { x:1 };\n";
    p += "section S = R + w:" + std::to_string(spec.a) + " with f = " + power("x", h) +
         ", g = " + power("w", spec.c - 1) + ";\n";
    for (int s = 1; s <= spec.n; ++s) {
        p += "mf E" + std::to_string(s) + " over (R, " + power("x", h) + ") { d=[0]; e=[" +
             std::to_string(-s) + "]; phi=[[" + power("x", s) + "]]; psi=[[" +
             power("x", h - s) + "]]; };\n";
    }
    for (int s = 1; s <= spec.n; ++s)
        for (int t = 1; t <= spec.n; ++t)
            p += "query verify-theorem E" + std::to_string(s) + " E" + std::to_string(t) +
                 " section S shifts -3..3 twists " + std::to_string(-(h + 2)) + ".." +
                 std::to_string(h + 2) + " convention auto;\n";
    return p;
}

} // namespace mfw
