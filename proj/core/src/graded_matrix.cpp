#include "mfw/graded_matrix.hpp"

namespace mfw {

TwistTuple tuple_shift(const TwistTuple& t, int n) {
    TwistTuple r = t;
    for (int& x : r) x += n;
    return r;
}

TwistTuple tuple_concat(const TwistTuple& a, const TwistTuple& b) {
    TwistTuple r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

GradedMatrix::GradedMatrix(Ring ring, TwistTuple target, TwistTuple source, int offset,
                           std::vector<Poly> entries)
    : ring_(std::move(ring)), target_(std::move(target)), source_(std::move(source)),
      offset_(offset), entries_(std::move(entries)) {
    if (entries_.size() != target_.size() * source_.size())
        throw ValidationError("graded matrix: entry count " + std::to_string(entries_.size()) +
                              " does not match shape " + std::to_string(target_.size()) + "x" +
                              std::to_string(source_.size()));
    for (std::size_t j = 0; j < rows(); ++j)
        for (std::size_t i = 0; i < cols(); ++i) {
            const Poly& p = at(j, i);
            if (p.is_zero()) continue;
            if (p.ring() != ring_)
                throw ValidationError("graded matrix entry (" + std::to_string(j) + "," +
                                      std::to_string(i) + ") lives in the wrong ring");
            int expected = target_[j] - source_[i] + offset_;
            auto d = p.degree();
            if (!d)
                throw ValidationError("graded matrix entry (" + std::to_string(j) + "," +
                                      std::to_string(i) + ") = " + p.str() +
                                      " is inhomogeneous (expected degree " +
                                      std::to_string(expected) + ")");
            if (*d != expected)
                throw ValidationError("graded matrix entry (" + std::to_string(j) + "," +
                                      std::to_string(i) + ") = " + p.str() + ": expected degree " +
                                      std::to_string(expected) + ", got " + std::to_string(*d));
        }
}

GradedMatrix GradedMatrix::zero(const Ring& r, TwistTuple target, TwistTuple source, int offset) {
    std::vector<Poly> e(target.size() * source.size(), Poly::zero(r));
    return GradedMatrix(r, std::move(target), std::move(source), offset, std::move(e));
}

GradedMatrix GradedMatrix::identity_on(const Ring& r, const TwistTuple& t) {
    std::vector<Poly> e(t.size() * t.size(), Poly::zero(r));
    for (std::size_t i = 0; i < t.size(); ++i) e[i * t.size() + i] = Poly::from_long(r, 1);
    return GradedMatrix(r, t, t, 0, std::move(e));
}

GradedMatrix GradedMatrix::scalar_diag(const Ring& r, const Poly& f, const TwistTuple& t,
                                       int offset) {
    std::vector<Poly> e(t.size() * t.size(), Poly::zero(r));
    for (std::size_t i = 0; i < t.size(); ++i) e[i * t.size() + i] = f;
    return GradedMatrix(r, t, t, offset, std::move(e));
}

GradedMatrix GradedMatrix::operator+(const GradedMatrix& o) const {
    if (target_ != o.target_ || source_ != o.source_ || offset_ != o.offset_ || ring_ != o.ring_)
        throw ValidationError("graded matrix addition: typing mismatch");
    std::vector<Poly> e;
    e.reserve(entries_.size());
    for (std::size_t k = 0; k < entries_.size(); ++k) e.push_back(entries_[k] + o.entries_[k]);
    return GradedMatrix(ring_, target_, source_, offset_, std::move(e));
}

GradedMatrix GradedMatrix::operator-(const GradedMatrix& o) const { return *this + (-o); }

GradedMatrix GradedMatrix::operator-() const {
    std::vector<Poly> e;
    e.reserve(entries_.size());
    for (const auto& p : entries_) e.push_back(-p);
    return GradedMatrix(ring_, target_, source_, offset_, std::move(e));
}

GradedMatrix GradedMatrix::scaled(const Poly& p) const {
    if (p.is_zero()) return zero(ring_, target_, source_, offset_);
    auto d = p.degree();
    if (!d) throw ValidationError("scaling a graded matrix by an inhomogeneous polynomial");
    std::vector<Poly> e;
    e.reserve(entries_.size());
    for (const auto& q : entries_) e.push_back(q * p);
    return GradedMatrix(ring_, target_, source_, offset_ + *d, std::move(e));
}

GradedMatrix GradedMatrix::twist(int n) const {
    return GradedMatrix(ring_, tuple_shift(target_, n), tuple_shift(source_, n), offset_,
                        entries_);
}

GradedMatrix GradedMatrix::retyped(TwistTuple target, TwistTuple source, int offset) const {
    return GradedMatrix(ring_, std::move(target), std::move(source), offset, entries_);
}

GradedMatrix GradedMatrix::into(const Ring& bigger, TwistTuple target, TwistTuple source,
                                int offset) const {
    std::vector<Poly> e;
    e.reserve(entries_.size());
    for (const auto& p : entries_) e.push_back(p.into(bigger));
    return GradedMatrix(bigger, std::move(target), std::move(source), offset, std::move(e));
}

GradedMatrix GradedMatrix::submatrix(std::size_t row0, std::size_t row1, std::size_t col0,
                                     std::size_t col1) const {
    TwistTuple t(target_.begin() + row0, target_.begin() + row1);
    TwistTuple s(source_.begin() + col0, source_.begin() + col1);
    std::vector<Poly> e;
    e.reserve((row1 - row0) * (col1 - col0));
    for (std::size_t j = row0; j < row1; ++j)
        for (std::size_t i = col0; i < col1; ++i) e.push_back(at(j, i));
    return GradedMatrix(ring_, std::move(t), std::move(s), offset_, std::move(e));
}

bool GradedMatrix::is_zero() const {
    for (const auto& p : entries_)
        if (!p.is_zero()) return false;
    return true;
}

bool GradedMatrix::operator==(const GradedMatrix& o) const {
    return ring_ == o.ring_ && target_ == o.target_ && source_ == o.source_ &&
           offset_ == o.offset_ && entries_ == o.entries_;
}

std::string GradedMatrix::str() const {
    std::string s = "[";
    for (std::size_t j = 0; j < rows(); ++j) {
        if (j) s += ", ";
        s += "[";
        for (std::size_t i = 0; i < cols(); ++i) {
            if (i) s += ", ";
            s += at(j, i).str();
        }
        s += "]";
    }
    return s + "]";
}

GradedMatrix compose(const GradedMatrix& a, const GradedMatrix& b) {
    if (a.ring() != b.ring()) throw ValidationError("compose: ring mismatch");
    if (a.source() != b.target())
        throw ValidationError("compose: source tuple of the left factor differs from target "
                              "tuple of the right factor");
    std::vector<Poly> e(a.rows() * b.cols(), Poly::zero(a.ring()));
    for (std::size_t j = 0; j < a.rows(); ++j)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Poly& x = a.at(j, k);
            if (x.is_zero()) continue;
            for (std::size_t i = 0; i < b.cols(); ++i) {
                const Poly& y = b.at(k, i);
                if (!y.is_zero()) e[j * b.cols() + i] = e[j * b.cols() + i] + x * y;
            }
        }
    return GradedMatrix(a.ring(), a.target(), b.source(), a.offset() + b.offset(), std::move(e));
}

GradedMatrix block2x2(const GradedMatrix& a11, const GradedMatrix& a12, const GradedMatrix& a21,
                      const GradedMatrix& a22) {
    const Ring& r = a11.ring();
    if (a12.ring() != r || a21.ring() != r || a22.ring() != r)
        throw ValidationError("block2x2: ring mismatch");
    int off = a11.offset();
    if (a12.offset() != off || a21.offset() != off || a22.offset() != off)
        throw ValidationError("block2x2: offset mismatch");
    if (a11.target() != a12.target() || a21.target() != a22.target() ||
        a11.source() != a21.source() || a12.source() != a22.source())
        throw ValidationError("block2x2: tuple mismatch between blocks");
    TwistTuple target = tuple_concat(a11.target(), a21.target());
    TwistTuple source = tuple_concat(a11.source(), a12.source());
    std::size_t rows = target.size(), cols = source.size();
    std::vector<Poly> e(rows * cols, Poly::zero(r));
    auto put = [&](const GradedMatrix& m, std::size_t r0, std::size_t c0) {
        for (std::size_t j = 0; j < m.rows(); ++j)
            for (std::size_t i = 0; i < m.cols(); ++i) e[(r0 + j) * cols + (c0 + i)] = m.at(j, i);
    };
    put(a11, 0, 0);
    put(a12, 0, a11.cols());
    put(a21, a11.rows(), 0);
    put(a22, a11.rows(), a11.cols());
    return GradedMatrix(r, std::move(target), std::move(source), off, std::move(e));
}

} // namespace mfw
