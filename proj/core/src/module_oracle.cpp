#include "mfw/module_oracle.hpp"

#include <map>

namespace mfw {

QuotientRing::QuotientRing(Ring ambient_, Poly modulus_)
    : ambient(std::move(ambient_)), modulus(std::move(modulus_)) {
    if (modulus.ring() != ambient)
        throw ValidationError("quotient ring: modulus lives in the wrong ring");
    if (modulus.is_zero()) throw ValidationError("quotient ring: zero modulus");
    auto d = modulus.degree();
    if (!d) throw ValidationError("quotient ring: inhomogeneous modulus " + modulus.str());
    h = *d;
}

PresentedModule::PresentedModule(QuotientRing q, TwistTuple gens, GradedMatrix relations)
    : q_(std::move(q)), gens_(std::move(gens)), relations_(std::move(relations)) {
    if (relations_.ring() != q_.ambient)
        throw ValidationError("presented module: relations live in the wrong ring");
    if (relations_.target() != gens_ || relations_.offset() != 0)
        throw ValidationError("presented module: relation matrix must target the generators "
                              "with offset 0");
}

PresentedModule coker_presentation(const MatrixFactorization& E) {
    return PresentedModule(QuotientRing(E.ring(), E.f()), E.d(), E.phi());
}

namespace {

// Monomial coordinates of the graded piece ⊕_k R(t_k) in internal degree m,
// i.e. the direct sum of the R_{t_k + m}.
class Piece {
public:
    Piece(const Ring& r, const TwistTuple& t, int m) : ring_(r) {
        for (int tk : t) {
            auto mons = monomials_of_degree(r, tk + m);
            offsets_.push_back(total_);
            total_ += mons.size();
            std::map<std::vector<int>, std::size_t> idx;
            for (std::size_t k = 0; k < mons.size(); ++k) idx[mons[k]] = k;
            index_.push_back(std::move(idx));
        }
    }

    std::size_t total() const { return total_; }
    std::size_t ncomp() const { return index_.size(); }

    void accumulate(std::vector<Scalar>& out, std::size_t comp, const Poly& q,
                    std::size_t base = 0) const {
        for (const auto& term : q.terms()) {
            auto it = index_[comp].find(term.exp);
            if (it == index_[comp].end())
                throw EngineError("polynomial term outside its graded piece");
            out[base + offsets_[comp] + it->second] += term.coeff;
        }
    }

private:
    const Ring& ring_;
    std::vector<std::map<std::vector<int>, std::size_t>> index_;
    std::vector<std::size_t> offsets_;
    std::size_t total_ = 0;
};

ScalarMatrix from_columns(const Field& f, std::size_t rows,
                          const std::vector<std::vector<Scalar>>& cols) {
    ScalarMatrix m(f, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
    return m;
}

// Columns spanning the "zero representatives" of the module piece of degree m
// inside the free cover: f-multiples componentwise plus the relation image.
std::vector<std::vector<Scalar>> zero_columns(const PresentedModule& M, const Piece& piece,
                                              int m, bool relations_too) {
    const Ring& r = M.quotient().ambient;
    const Poly& f = M.quotient().modulus;
    const int h = M.quotient().h;
    std::vector<std::vector<Scalar>> cols;
    for (std::size_t k = 0; k < M.gens().size(); ++k)
        for (const auto& mu : monomials_of_degree(r, M.gens()[k] + m - h)) {
            std::vector<Scalar> v(piece.total(), Scalar::zero(r.field()));
            piece.accumulate(v, k, f * Poly::monomial(r, mu, Scalar::one(r.field())));
            cols.push_back(std::move(v));
        }
    if (relations_too) {
        const GradedMatrix& rel = M.relations();
        for (std::size_t j = 0; j < rel.cols(); ++j)
            for (const auto& mu : monomials_of_degree(r, rel.source()[j] + m)) {
                Poly mup = Poly::monomial(r, mu, Scalar::one(r.field()));
                std::vector<Scalar> v(piece.total(), Scalar::zero(r.field()));
                for (std::size_t k = 0; k < M.gens().size(); ++k)
                    if (!rel.at(k, j).is_zero()) piece.accumulate(v, k, rel.at(k, j) * mup);
                cols.push_back(std::move(v));
            }
    }
    return cols;
}

ScalarMatrix submatrix_rows(const ScalarMatrix& m, std::size_t nrows) {
    ScalarMatrix out(m.field(), nrows, m.cols());
    for (std::size_t r = 0; r < nrows; ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = m.at(r, c);
    return out;
}

} // namespace

std::vector<long> hilbert_function(const PresentedModule& M, int lo, int hi) {
    if (lo > hi) throw ValidationError("hilbert_function: empty window");
    const Ring& r = M.quotient().ambient;
    std::vector<long> dims;
    for (int m = lo; m <= hi; ++m) {
        Piece piece(r, M.gens(), m);
        auto cols = zero_columns(M, piece, m, true);
        ScalarMatrix sub = from_columns(r.field(), piece.total(), cols);
        dims.push_back(static_cast<long>(piece.total()) - static_cast<long>(rank(sub)));
    }
    return dims;
}

namespace {

// Shared core of hom_dim_modules / stable_hom_dim. The space of valid
// generator-image tuples is cut out by the relation conditions; "valid up to
// zero" means the condition lands in the zero subspace of N at its degree.
struct HomSpaces {
    long dim_hom;    // dim of Hom(M, N(n)) in degree 0
    long dim_stable; // minus maps factoring through the free cover of N
};

HomSpaces hom_spaces(const PresentedModule& M, const PresentedModule& N, int twist) {
    if (!(M.quotient() == N.quotient()))
        throw ValidationError("stable hom: modules over different quotient rings");
    const Ring& r = M.quotient().ambient;
    const Field& field = r.field();

    // Ambient coordinates for the images y_i of the generators of M.
    std::vector<Piece> ypieces;
    std::vector<std::size_t> ybase;
    std::size_t ytotal = 0;
    for (int di : M.gens()) {
        ypieces.emplace_back(r, N.gens(), twist - di);
        ybase.push_back(ytotal);
        ytotal += ypieces.back().total();
    }

    // Condition blocks, one per relation of M.
    const GradedMatrix& rel = M.relations();
    std::vector<Piece> cpieces;
    std::vector<std::size_t> cbase;
    std::size_t ctotal = 0;
    for (std::size_t j = 0; j < rel.cols(); ++j) {
        cpieces.emplace_back(r, N.gens(), twist - rel.source()[j]);
        cbase.push_back(ctotal);
        ctotal += cpieces.back().total();
    }

    // A: y-coordinates -> condition coordinates, block (j, i) = mult by rel(i, j).
    ScalarMatrix A(field, ctotal, ytotal);
    for (std::size_t i = 0; i < M.gens().size(); ++i) {
        std::size_t col = ybase[i];
        for (std::size_t comp = 0; comp < N.gens().size(); ++comp)
            for (const auto& mu : monomials_of_degree(r, N.gens()[comp] + twist - M.gens()[i])) {
                Poly mup = Poly::monomial(r, mu, Scalar::one(field));
                for (std::size_t j = 0; j < rel.cols(); ++j) {
                    if (rel.at(i, j).is_zero()) continue;
                    std::vector<Scalar> v(ctotal, Scalar::zero(field));
                    cpieces[j].accumulate(v, comp, rel.at(i, j) * mup, cbase[j]);
                    for (std::size_t row = 0; row < ctotal; ++row)
                        if (!v[row].is_zero()) A.at(row, col) += v[row];
                }
                ++col;
            }
    }

    // Zero subspaces of the condition blocks: full (f + relations of N) and
    // the free-cover variant (f only).
    std::vector<std::vector<Scalar>> wfull, wfree;
    auto pad = [&](std::vector<std::vector<Scalar>>& out,
                   std::vector<std::vector<Scalar>> cols, std::size_t base) {
        for (auto& c : cols) {
            std::vector<Scalar> v(ctotal, Scalar::zero(field));
            for (std::size_t k = 0; k < c.size(); ++k) v[base + k] = c[k];
            out.push_back(std::move(v));
        }
    };
    for (std::size_t j = 0; j < rel.cols(); ++j) {
        pad(wfull, zero_columns(N, cpieces[j], twist - rel.source()[j], true), cbase[j]);
        pad(wfree, zero_columns(N, cpieces[j], twist - rel.source()[j], false), cbase[j]);
    }
    ScalarMatrix BW = from_columns(field, ctotal, wfull);
    ScalarMatrix Bf = from_columns(field, ctotal, wfree);

    // Zero subspace of the y-space itself (tuples representing the zero map).
    std::vector<std::vector<Scalar>> y0;
    for (std::size_t i = 0; i < M.gens().size(); ++i) {
        std::vector<std::vector<Scalar>> cols =
            zero_columns(N, ypieces[i], twist - M.gens()[i], true);
        for (auto& c : cols) {
            std::vector<Scalar> v(ytotal, Scalar::zero(field));
            for (std::size_t k = 0; k < c.size(); ++k) v[ybase[i] + k] = c[k];
            y0.push_back(std::move(v));
        }
    }
    ScalarMatrix BY0 = from_columns(field, ytotal, y0);

    // V = { y : A y in span BW }, spanned by the y-projection of ker [A | BW].
    ScalarMatrix PV = submatrix_rows(nullspace(hstack(A, BW)), ytotal);
    ScalarMatrix PVP = submatrix_rows(nullspace(hstack(A, Bf)), ytotal);

    long dimV = static_cast<long>(rank(PV));
    long dimY0 = static_cast<long>(rank(BY0));
    long dim_hom = dimV - dimY0;
    long dim_stable = dimV - static_cast<long>(rank(hstack(PVP, BY0)));
    return HomSpaces{dim_hom, dim_stable};
}

} // namespace

long hom_dim_modules(const PresentedModule& M, const PresentedModule& N, int twist) {
    return hom_spaces(M, N, twist).dim_hom;
}

long stable_hom_dim(const PresentedModule& M, const PresentedModule& N, int twist) {
    return hom_spaces(M, N, twist).dim_stable;
}

long ext_dim_periodic(const MatrixFactorization& E, const MatrixFactorization& Ep, int i,
                      int twist) {
    if (i < 1) throw ValidationError("ext_dim_periodic needs homological degree i >= 1");
    if (E.ring() != Ep.ring() || E.f() != Ep.f())
        throw ValidationError("ext: factorizations of different hypersurfaces");
    const Ring& r = E.ring();
    const Field& field = r.field();
    const int h = E.h();
    PresentedModule N = coker_presentation(Ep);

    // Twists of position k in the 2-periodic resolution of coker(phi).
    auto twists_at = [&](int k) -> TwistTuple {
        if (k % 2 == 0) return tuple_shift(E.d(), -h * (k / 2));
        return tuple_shift(E.e(), -h * ((k - 1) / 2));
    };
    // Differential P_k -> P_{k-1}: phi for odd k, psi for even k (entry grids;
    // the twists are carried by the positions).
    auto diff_entry = [&](int k, std::size_t row, std::size_t col) -> const Poly& {
        return (k % 2 == 1) ? E.phi().at(row, col) : E.psi().at(row, col);
    };

    // Cochain ambient spaces C^k = Hom(P_k, N(n))_0 before quotienting.
    auto build_piece = [&](int k) {
        std::vector<Piece> pieces;
        std::vector<std::size_t> base;
        std::size_t total = 0;
        for (int t : twists_at(k)) {
            pieces.emplace_back(r, N.gens(), twist - t);
            base.push_back(total);
            total += pieces.back().total();
        }
        return std::tuple<std::vector<Piece>, std::vector<std::size_t>, std::size_t>(
            std::move(pieces), std::move(base), total);
    };

    auto [pi, bi, ti] = build_piece(i);
    auto [pi1, bi1, ti1] = build_piece(i + 1);
    auto [pim1, bim1, tim1] = build_piece(i - 1);

    const std::size_t m = E.rank();

    // delta^k: C^k -> C^{k+1}, (delta y)_l = sum_g D_{k+1}(g, l) y_g.
    auto delta = [&](int k, const std::vector<std::size_t>& sbase, std::size_t stotal,
                     const std::vector<Piece>& dst, const std::vector<std::size_t>& dbase,
                     std::size_t dtotal) {
        ScalarMatrix D(field, dtotal, stotal);
        TwistTuple src_tw = twists_at(k);
        for (std::size_t g = 0; g < m; ++g) {
            std::size_t col = sbase[g];
            for (std::size_t comp = 0; comp < N.gens().size(); ++comp)
                for (const auto& mu :
                     monomials_of_degree(r, N.gens()[comp] + twist - src_tw[g])) {
                    Poly mup = Poly::monomial(r, mu, Scalar::one(field));
                    for (std::size_t l = 0; l < m; ++l) {
                        const Poly& q = diff_entry(k + 1, g, l);
                        if (q.is_zero()) continue;
                        std::vector<Scalar> v(dtotal, Scalar::zero(field));
                        dst[l].accumulate(v, comp, q * mup, dbase[l]);
                        for (std::size_t row = 0; row < dtotal; ++row)
                            if (!v[row].is_zero()) D.at(row, col) += v[row];
                    }
                    ++col;
                }
        }
        return D;
    };

    ScalarMatrix Di = delta(i, bi, ti, pi1, bi1, ti1);
    ScalarMatrix Dim1 = delta(i - 1, bim1, tim1, pi, bi, ti);

    auto zero_block = [&](int k, const std::vector<Piece>& pieces,
                          const std::vector<std::size_t>& base, std::size_t total) {
        std::vector<std::vector<Scalar>> cols;
        TwistTuple tw = twists_at(k);
        for (std::size_t g = 0; g < pieces.size(); ++g) {
            auto local = zero_columns(N, pieces[g], twist - tw[g], true);
            for (auto& c : local) {
                std::vector<Scalar> v(total, Scalar::zero(field));
                for (std::size_t x = 0; x < c.size(); ++x) v[base[g] + x] = c[x];
                cols.push_back(std::move(v));
            }
        }
        return from_columns(field, total, cols);
    };

    ScalarMatrix Zi = zero_block(i, pi, bi, ti);
    ScalarMatrix Zi1 = zero_block(i + 1, pi1, bi1, ti1);

    ScalarMatrix K = submatrix_rows(nullspace(hstack(Di, Zi1)), ti);
    long dimK = static_cast<long>(rank(K));
    long dimIm = static_cast<long>(rank(hstack(Dim1, Zi)));
    return dimK - dimIm;
}

} // namespace mfw
