#include "mfw/poly.hpp"

#include <algorithm>
#include <map>

namespace mfw {

namespace {

void check_same_ring(const Poly& a, const Poly& b) {
    if (a.ring() != b.ring()) throw ValidationError("polynomial ring mismatch");
}

} // namespace

Poly Poly::zero(const Ring& r) { return Poly(r, {}); }

Poly Poly::constant(const Ring& r, const Scalar& c) {
    if (c.is_zero()) return zero(r);
    return Poly(r, {Term{std::vector<int>(r.nvars(), 0), c}});
}

Poly Poly::from_long(const Ring& r, long n) {
    return constant(r, Scalar::from_long(r.field(), n));
}

Poly Poly::variable(const Ring& r, std::size_t index) {
    std::vector<int> e(r.nvars(), 0);
    e[index] = 1;
    return Poly(r, {Term{std::move(e), Scalar::one(r.field())}});
}

Poly Poly::monomial(const Ring& r, std::vector<int> exp, const Scalar& c) {
    if (exp.size() != r.nvars()) throw ValidationError("monomial exponent arity mismatch");
    for (int e : exp)
        if (e < 0) throw ValidationError("negative exponent");
    if (c.is_zero()) return zero(r);
    return Poly(r, {Term{std::move(exp), c}});
}

Poly Poly::from_terms(const Ring& r, std::vector<Term> terms) {
    Poly p(r, std::move(terms));
    p.normalize();
    return p;
}

void Poly::normalize() {
    std::map<std::vector<int>, Scalar> acc;
    for (auto& t : terms_) {
        if (t.exp.size() != ring_.nvars())
            throw ValidationError("term exponent arity mismatch");
        auto it = acc.find(t.exp);
        if (it == acc.end())
            acc.emplace(std::move(t.exp), std::move(t.coeff));
        else
            it->second += t.coeff;
    }
    terms_.clear();
    for (auto& [e, c] : acc)
        if (!c.is_zero()) terms_.push_back(Term{e, c});
    std::sort(terms_.begin(), terms_.end(), [this](const Term& a, const Term& b) {
        return grlex_less(ring_, b.exp, a.exp); // descending
    });
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    for (int e : terms_[0].exp)
        if (e != 0) return false;
    return true;
}

std::optional<int> Poly::degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = ring_.weighted_degree(terms_[0].exp);
    for (const auto& t : terms_)
        if (ring_.weighted_degree(t.exp) != d) return std::nullopt;
    return d;
}

Poly Poly::operator+(const Poly& o) const {
    check_same_ring(*this, o);
    std::vector<Term> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return from_terms(ring_, std::move(all));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<Term> t = terms_;
    for (auto& x : t) x.coeff = -x.coeff;
    return Poly(ring_, std::move(t));
}

Poly Poly::scaled(const Scalar& c) const {
    if (c.is_zero()) return zero(ring_);
    std::vector<Term> t = terms_;
    for (auto& x : t) x.coeff *= c;
    return from_terms(ring_, std::move(t));
}

Poly Poly::operator*(const Poly& o) const {
    check_same_ring(*this, o);
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            std::vector<int> e(a.exp.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exp[i] + b.exp[i];
            prod.push_back(Term{std::move(e), a.coeff * b.coeff});
        }
    return from_terms(ring_, std::move(prod));
}

Poly Poly::pow(int e) const {
    if (e < 0) throw ValidationError("negative power");
    Poly r = from_long(ring_, 1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

bool Poly::operator==(const Poly& o) const {
    return ring_ == o.ring_ && terms_ == o.terms_;
}

Poly Poly::substitute_zero(std::size_t var) const {
    std::vector<Term> t;
    for (const auto& x : terms_)
        if (x.exp[var] == 0) t.push_back(x);
    return Poly(ring_, std::move(t));
}

Poly Poly::divide_by_var(std::size_t var) const {
    std::vector<Term> t = terms_;
    for (auto& x : t) {
        if (x.exp[var] < 1)
            throw ValidationError("term " + str() + " not divisible by " + ring_.vars()[var]);
        x.exp[var] -= 1;
    }
    return Poly(ring_, std::move(t));
}

bool Poly::mentions(std::size_t var) const {
    for (const auto& x : terms_)
        if (x.exp[var] > 0) return true;
    return false;
}

Scalar Poly::coefficient_of(const std::vector<int>& exp) const {
    for (const auto& t : terms_)
        if (t.exp == exp) return t.coeff;
    return Scalar::zero(ring_.field());
}

Poly Poly::into(const Ring& bigger) const {
    if (ring_ == bigger) return *this;
    if (!ring_.embeds_in(bigger))
        throw ValidationError("ring " + ring_.str() + " does not embed in " + bigger.str());
    std::vector<std::size_t> pos(ring_.nvars());
    for (std::size_t i = 0; i < ring_.nvars(); ++i) pos[i] = *bigger.index_of(ring_.vars()[i]);
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (const auto& x : terms_) {
        std::vector<int> e(bigger.nvars(), 0);
        for (std::size_t i = 0; i < ring_.nvars(); ++i) e[pos[i]] = x.exp[i];
        t.push_back(Term{std::move(e), x.coeff});
    }
    return from_terms(bigger, std::move(t));
}

Poly Poly::restrict_to(const Ring& smaller) const {
    if (ring_ == smaller) return *this;
    if (!smaller.embeds_in(ring_))
        throw ValidationError("ring " + smaller.str() + " does not embed in " + ring_.str());
    std::vector<std::optional<std::size_t>> back(ring_.nvars());
    for (std::size_t i = 0; i < ring_.nvars(); ++i) back[i] = smaller.index_of(ring_.vars()[i]);
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (const auto& x : terms_) {
        std::vector<int> e(smaller.nvars(), 0);
        for (std::size_t i = 0; i < ring_.nvars(); ++i) {
            if (x.exp[i] == 0) continue;
            if (!back[i])
                throw ValidationError("polynomial " + str() + " mentions " + ring_.vars()[i] +
                                      " outside " + smaller.str());
            e[*back[i]] = x.exp[i];
        }
        t.push_back(Term{std::move(e), x.coeff});
    }
    return from_terms(smaller, std::move(t));
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    const bool rational = ring_.field().kind() == FieldKind::Rationals;
    std::string out;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const Term& t = terms_[k];
        std::string cs = t.coeff.str();
        bool neg = rational && !cs.empty() && cs[0] == '-';
        if (k == 0) {
            if (neg) { out += "-"; cs = cs.substr(1); }
        } else {
            out += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
        }
        std::string mono;
        for (std::size_t i = 0; i < t.exp.size(); ++i) {
            if (t.exp[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_.vars()[i];
            if (t.exp[i] != 1) mono += "^" + std::to_string(t.exp[i]);
        }
        if (mono.empty()) {
            out += cs;
        } else if (cs == "1") {
            out += mono;
        } else {
            out += cs + "*" + mono;
        }
    }
    return out;
}

} // namespace mfw
