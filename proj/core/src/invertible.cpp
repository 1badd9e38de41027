#include "mfw/invertible.hpp"

#include <numeric>

namespace mfw {

namespace {

ScalarMatrix to_rational_matrix(const ExponentMatrix& A) {
    Field q = Field::rationals();
    ScalarMatrix m(q, A.size(), A.size());
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < A.size(); ++j)
            m.at(i, j) = Scalar::from_long(q, A.a[i][j]);
    return m;
}

} // namespace

ExponentMatrix ExponentMatrix::transposed() const {
    ExponentMatrix t;
    t.vars = vars;
    t.a.assign(size(), std::vector<long>(size(), 0));
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j) t.a[j][i] = a[i][j];
    return t;
}

ExponentMatrix make_exponent_matrix(std::vector<std::string> vars,
                                    std::vector<std::vector<long>> rows) {
    ExponentMatrix A{std::move(vars), std::move(rows)};
    if (A.a.size() != A.vars.size())
        throw ValidationError("exponent matrix: row count differs from variable count");
    for (const auto& row : A.a)
        if (row.size() != A.vars.size())
            throw ValidationError("exponent matrix: ragged rows");
    if (determinant(to_rational_matrix(A)).is_zero())
        throw ValidationError("exponent matrix: zero determinant");
    return A;
}

ExponentMatrix exponent_matrix(const Poly& p) {
    const Ring& r = p.ring();
    if (p.terms().size() != r.nvars())
        throw ValidationError("exponent_matrix: polynomial has " +
                              std::to_string(p.terms().size()) + " terms but the ring has " +
                              std::to_string(r.nvars()) + " variables");
    std::vector<std::vector<long>> rows;
    for (const auto& t : p.terms()) {
        if (!t.coeff.is_one())
            throw ValidationError("exponent_matrix: non-unit coefficient " + t.coeff.str());
        rows.emplace_back(t.exp.begin(), t.exp.end());
    }
    return make_exponent_matrix(r.vars(), std::move(rows));
}

WeightSystem weights_from_matrix(const ExponentMatrix& A) {
    Field q = Field::rationals();
    ScalarMatrix m = to_rational_matrix(A);
    std::vector<Scalar> ones(A.size(), Scalar::one(q));
    if (determinant(m).is_zero()) throw ValidationError("weights_from_matrix: singular matrix");
    auto sol = solve(m, ones);
    if (!sol) throw ValidationError("weights_from_matrix: inconsistent system");

    // Clear denominators, then divide by the gcd to get the primitive vector.
    mpz_class lcm = 1;
    std::vector<mpq_class> qs;
    for (const auto& s : *sol) {
        const mpq_class& v = s.rational_value();
        qs.push_back(v);
        mpz_class den = v.get_den();
        lcm = lcm / gcd(lcm, den) * den;
    }
    std::vector<mpz_class> ws;
    mpz_class g = 0;
    for (const auto& v : qs) {
        mpz_class w = v.get_num() * (lcm / v.get_den());
        g = gcd(g, w);
        ws.push_back(w);
    }
    if (g == 0) throw ValidationError("weights_from_matrix: zero weight vector");
    WeightSystem out;
    for (auto& w : ws) {
        mpz_class red = w / g;
        if (red <= 0)
            throw ValidationError("weights_from_matrix: no positive grading (weight " +
                                  red.get_str() + ")");
        out.weights.push_back(red.get_si());
    }
    mpz_class c = 0;
    for (std::size_t j = 0; j < A.size(); ++j) c += A.a[0][j] * out.weights[j];
    out.degree = c.get_si();
    return out;
}

Poly bh_transpose(const ExponentMatrix& A, const Field& field) {
    ExponentMatrix T = A.transposed();
    std::vector<int> weights(A.size(), 1);
    try {
        WeightSystem ws = weights_from_matrix(T);
        for (std::size_t i = 0; i < ws.weights.size(); ++i)
            weights[i] = static_cast<int>(ws.weights[i]);
    } catch (const ValidationError&) {
        // no positive grading for the transpose; fall back to weights 1
    }
    Ring r(field, T.vars, weights);
    std::vector<Poly::Term> terms;
    for (const auto& row : T.a) {
        std::vector<int> exp(row.begin(), row.end());
        terms.push_back(Poly::Term{std::move(exp), Scalar::one(field)});
    }
    return Poly::from_terms(r, std::move(terms));
}

} // namespace mfw
