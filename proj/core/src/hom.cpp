#include "mfw/hom.hpp"

#include "mfw/parallel.hpp"

namespace mfw {

void UnknownLayout::add_block(const Ring& r, const TwistTuple& target, const TwistTuple& source,
                              int offset) {
    int block = static_cast<int>(blocks_.size());
    blocks_.push_back(BlockDims{slots_.size(), target.size(), source.size()});
    for (std::size_t j = 0; j < target.size(); ++j)
        for (std::size_t i = 0; i < source.size(); ++i) {
            Slot s;
            s.block = block;
            s.row = j;
            s.col = i;
            s.degree = target[j] - source[i] + offset;
            s.monomials = monomials_of_degree(r, s.degree);
            s.offset = total_;
            for (std::size_t k = 0; k < s.monomials.size(); ++k) s.index[s.monomials[k]] = k;
            total_ += s.monomials.size();
            slots_.push_back(std::move(s));
        }
}

const UnknownLayout::Slot& UnknownLayout::slot(int block, std::size_t row, std::size_t col) const {
    const BlockDims& b = blocks_[block];
    return slots_[b.first_slot + row * b.cols + col];
}

std::size_t UnknownLayout::coord(int block, std::size_t row, std::size_t col,
                                 const std::vector<int>& exp) const {
    const Slot& s = slot(block, row, col);
    auto it = s.index.find(exp);
    if (it == s.index.end())
        throw EngineError("monomial outside the degree window of its entry");
    return s.offset + it->second;
}

namespace {

void check_compatible(const MatrixFactorization& E, const MatrixFactorization& Ep) {
    if (E.ring() != Ep.ring()) throw ValidationError("hom: factorizations over different rings");
    if (E.f() != Ep.f())
        throw ValidationError("hom: factorizations of different polynomials (" + E.f().str() +
                              " vs " + Ep.f().str() + ")");
}

// Adds coefficients of q into column `col` of m, at the rows of the given
// entry of the row layout.
void accumulate(ScalarMatrix& m, const UnknownLayout& rows, int block, std::size_t row,
                std::size_t col_of_entry, const Poly& q, std::size_t col) {
    for (const auto& t : q.terms()) {
        std::size_t r = rows.coord(block, row, col_of_entry, t.exp);
        m.at(r, col) += t.coeff;
    }
}

} // namespace

HomResult::HomResult(MatrixFactorization src, MatrixFactorization dst, int twist, int shift,
                     UnknownLayout layout, ScalarMatrix cycle_basis, ScalarMatrix boundary_basis)
    : src_(std::move(src)), dst_(std::move(dst)), twist_(twist), shift_(shift),
      layout_(std::move(layout)), cycle_basis_(std::move(cycle_basis)),
      boundary_basis_(std::move(boundary_basis)) {}

MorphismPair HomResult::pair_from_vector(const std::vector<Scalar>& v) const {
    if (v.size() != layout_.total()) throw EngineError("witness vector has the wrong length");
    const Ring& r = src_.ring();
    auto build = [&](int block, const TwistTuple& target, const TwistTuple& source) {
        std::vector<Poly> entries;
        entries.reserve(target.size() * source.size());
        for (std::size_t j = 0; j < target.size(); ++j)
            for (std::size_t i = 0; i < source.size(); ++i) {
                const auto& s = layout_.slot(block, j, i);
                std::vector<Poly::Term> terms;
                for (std::size_t k = 0; k < s.monomials.size(); ++k) {
                    const Scalar& c = v[s.offset + k];
                    if (!c.is_zero()) terms.push_back(Poly::Term{s.monomials[k], c});
                }
                entries.push_back(Poly::from_terms(r, std::move(terms)));
            }
        return GradedMatrix(r, target, source, 0, std::move(entries));
    };
    GradedMatrix alpha = build(0, tuple_shift(dst_.d(), twist_), src_.d());
    GradedMatrix beta = build(1, tuple_shift(dst_.e(), twist_), src_.e());
    return MorphismPair(src_, dst_, twist_, std::move(alpha), std::move(beta));
}

std::vector<Scalar> HomResult::vector_from_pair(const MorphismPair& p) const {
    if (p.src() != src_ || p.dst() != dst_ || p.twist() != twist_)
        throw ValidationError("morphism does not live in this hom space");
    std::vector<Scalar> v(layout_.total(), Scalar::zero(src_.ring().field()));
    auto scatter = [&](int block, const GradedMatrix& m) {
        for (std::size_t j = 0; j < m.rows(); ++j)
            for (std::size_t i = 0; i < m.cols(); ++i)
                for (const auto& t : m.at(j, i).terms())
                    v[layout_.coord(block, j, i, t.exp)] = t.coeff;
    };
    scatter(0, p.alpha());
    scatter(1, p.beta());
    return v;
}

bool HomResult::is_boundary(const MorphismPair& p) const {
    return in_column_span(boundary_basis_, vector_from_pair(p));
}

bool HomResult::same_class(const MorphismPair& p, const MorphismPair& q) const {
    return is_boundary(p - q);
}

std::vector<MorphismPair> HomResult::quotient_representatives() const {
    std::vector<MorphismPair> reps;
    ScalarMatrix span = boundary_basis_;
    for (std::size_t c = 0; c < cycle_basis_.cols(); ++c) {
        std::vector<Scalar> v = cycle_basis_.column(c);
        if (in_column_span(span, v)) continue;
        ScalarMatrix one(span.field(), span.rows(), 1);
        one.set_column(0, v);
        span = hstack(span, one);
        reps.push_back(pair_from_vector(v));
    }
    return reps;
}

HomResult hom_space(const MatrixFactorization& E, const MatrixFactorization& Ep, int twist,
                    const HomOptions& opts) {
    check_compatible(E, Ep);
    const Ring& r = E.ring();
    const int h = E.h();
    const TwistTuple dp = tuple_shift(Ep.d(), twist);
    const TwistTuple ep = tuple_shift(Ep.e(), twist);

    UnknownLayout unknowns; // block 0: alpha, block 1: beta
    unknowns.add_block(r, dp, E.d(), 0);
    unknowns.add_block(r, ep, E.e(), 0);

    UnknownLayout homotopy; // block 0: xi, block 1: eta (typed with -h)
    homotopy.add_block(r, ep, E.d(), 0);
    homotopy.add_block(r, dp, E.e(), -h);

    if (unknowns.total() + homotopy.total() > opts.unknown_cap)
        throw EngineError("hom computation needs " +
                          std::to_string(unknowns.total() + homotopy.total()) +
                          " unknowns, above the cap of " + std::to_string(opts.unknown_cap));

    UnknownLayout equations; // block 0: alpha phi - phi' beta, block 1: beta psi - psi' alpha
    equations.add_block(r, dp, E.e(), 0);
    equations.add_block(r, ep, E.d(), h);

    const GradedMatrix& phi = E.phi();
    const GradedMatrix& psi = E.psi();
    const GradedMatrix& phip = Ep.phi();
    const GradedMatrix& psip = Ep.psi();
    const std::size_t m = E.rank(), mp = Ep.rank();

    // Cycle constraints, one column per unknown monomial.
    ScalarMatrix C(r.field(), equations.total(), unknowns.total());
    for (const auto& s : unknowns.slots()) {
        for (std::size_t k = 0; k < s.monomials.size(); ++k) {
            const std::size_t col = s.offset + k;
            const Poly mu = Poly::monomial(r, s.monomials[k], Scalar::one(r.field()));
            if (s.block == 0) { // alpha_{j,i}
                for (std::size_t I = 0; I < m; ++I)
                    if (!phi.at(s.col, I).is_zero())
                        accumulate(C, equations, 0, s.row, I, mu * phi.at(s.col, I), col);
                for (std::size_t J = 0; J < mp; ++J)
                    if (!psip.at(J, s.row).is_zero())
                        accumulate(C, equations, 1, J, s.col, -(psip.at(J, s.row) * mu), col);
            } else { // beta_{j,i}
                for (std::size_t J = 0; J < mp; ++J)
                    if (!phip.at(J, s.row).is_zero())
                        accumulate(C, equations, 0, J, s.col, -(phip.at(J, s.row) * mu), col);
                for (std::size_t I = 0; I < m; ++I)
                    if (!psi.at(s.col, I).is_zero())
                        accumulate(C, equations, 1, s.row, I, mu * psi.at(s.col, I), col);
            }
        }
    }

    // Boundary map into unknown coordinates, one column per homotopy monomial.
    ScalarMatrix H(r.field(), unknowns.total(), homotopy.total());
    for (const auto& s : homotopy.slots()) {
        for (std::size_t k = 0; k < s.monomials.size(); ++k) {
            const std::size_t col = s.offset + k;
            const Poly mu = Poly::monomial(r, s.monomials[k], Scalar::one(r.field()));
            if (s.block == 0) { // xi_{j,i}: alpha += phi' xi, beta += xi phi
                for (std::size_t J = 0; J < mp; ++J)
                    if (!phip.at(J, s.row).is_zero())
                        accumulate(H, unknowns, 0, J, s.col, phip.at(J, s.row) * mu, col);
                for (std::size_t I = 0; I < m; ++I)
                    if (!phi.at(s.col, I).is_zero())
                        accumulate(H, unknowns, 1, s.row, I, mu * phi.at(s.col, I), col);
            } else { // eta_{j,i}: alpha += eta psi, beta += psi' eta
                for (std::size_t I = 0; I < m; ++I)
                    if (!psi.at(s.col, I).is_zero())
                        accumulate(H, unknowns, 0, s.row, I, mu * psi.at(s.col, I), col);
                for (std::size_t J = 0; J < mp; ++J)
                    if (!psip.at(J, s.row).is_zero())
                        accumulate(H, unknowns, 1, J, s.col, psip.at(J, s.row) * mu, col);
            }
        }
    }

    if (!(C * H).is_zero())
        throw EngineError("internal invariant violated: boundaries are not cycles");

    ScalarMatrix cycles = nullspace(C);
    ScalarMatrix boundaries = column_space_basis(H);
    return HomResult(E, Ep, twist, 0, std::move(unknowns), std::move(cycles),
                     std::move(boundaries));
}

HomResult hom_shifted(const MatrixFactorization& E, const MatrixFactorization& Ep, int twist,
                      int shift, const HomOptions& opts) {
    HomResult res = hom_space(E, translate(Ep, shift, 0), twist, opts);
    return HomResult(res.src(), res.dst(), res.twist(), shift, res.layout(), res.cycle_basis(),
                     res.boundary_basis());
}

long HomTable::at(int shift, int twist) const {
    std::size_t row = static_cast<std::size_t>(shift - shift_lo);
    std::size_t col = static_cast<std::size_t>(twist - twist_lo);
    return dims[row * static_cast<std::size_t>(twist_hi - twist_lo + 1) + col];
}

HomTable hom_table(const MatrixFactorization& E, const MatrixFactorization& Ep, int shift_lo,
                   int shift_hi, int twist_lo, int twist_hi, const HomOptions& opts) {
    if (shift_lo > shift_hi || twist_lo > twist_hi)
        throw ValidationError("hom_table: empty range");
    std::size_t nshift = static_cast<std::size_t>(shift_hi - shift_lo + 1);
    std::size_t ntwist = static_cast<std::size_t>(twist_hi - twist_lo + 1);
    HomTable table{shift_lo, shift_hi, twist_lo, twist_hi,
                   std::vector<long>(nshift * ntwist, 0)};
    parallel_for(nshift * ntwist, opts.jobs, [&](std::size_t idx) {
        int i = shift_lo + static_cast<int>(idx / ntwist);
        int n = twist_lo + static_cast<int>(idx % ntwist);
        table.dims[idx] = hom_shifted(E, Ep, n, i, opts).dim();
    });
    return table;
}

MorphismPair boundary_pair(const MatrixFactorization& E, const MatrixFactorization& Ep, int twist,
                           const GradedMatrix& xi, const GradedMatrix& eta) {
    GradedMatrix alpha = compose(Ep.phi().twist(twist), xi) + compose(eta, E.psi());
    GradedMatrix beta = compose(Ep.psi().twist(twist), eta) + compose(xi, E.phi());
    return MorphismPair(E, Ep, twist, std::move(alpha), std::move(beta));
}

} // namespace mfw
