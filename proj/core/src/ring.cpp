#include "mfw/ring.hpp"

#include <algorithm>
#include <set>

namespace mfw {

Ring::Ring(const Field& field, std::vector<std::string> vars, std::vector<int> weights) {
    if (vars.size() != weights.size())
        throw ValidationError("ring: variable and weight counts differ");
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty()) throw ValidationError("ring: empty variable name");
        if (!seen.insert(v).second)
            throw ValidationError("ring: duplicate variable name '" + v + "'");
    }
    for (std::size_t i = 0; i < weights.size(); ++i)
        if (weights[i] <= 0)
            throw ValidationError("ring: non-positive weight for variable '" + vars[i] + "'");
    data_ = std::make_shared<Data>(Data{field, std::move(vars), std::move(weights)});
}

Ring Ring::extend(const std::string& var, int weight) const {
    std::vector<std::string> vars = data_->vars;
    std::vector<int> weights = data_->weights;
    vars.push_back(var);
    weights.push_back(weight);
    return Ring(data_->field, std::move(vars), std::move(weights));
}

std::optional<std::size_t> Ring::index_of(const std::string& var) const {
    for (std::size_t i = 0; i < data_->vars.size(); ++i)
        if (data_->vars[i] == var) return i;
    return std::nullopt;
}

int Ring::a_invariant() const {
    int s = 0;
    for (int w : data_->weights) s += w;
    return -s;
}

int Ring::weighted_degree(const std::vector<int>& exponents) const {
    int d = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i) d += exponents[i] * data_->weights[i];
    return d;
}

bool Ring::embeds_in(const Ring& bigger) const {
    if (field() != bigger.field()) return false;
    for (std::size_t i = 0; i < nvars(); ++i) {
        auto j = bigger.index_of(data_->vars[i]);
        if (!j || bigger.weights()[*j] != data_->weights[i]) return false;
    }
    return true;
}

bool Ring::operator==(const Ring& o) const {
    if (data_ == o.data_) return true;
    if (!data_ || !o.data_) return false;
    return data_->field == o.data_->field && data_->vars == o.data_->vars &&
           data_->weights == o.data_->weights;
}

std::string Ring::str() const {
    std::string s = data_->field.name() + "[";
    for (std::size_t i = 0; i < nvars(); ++i) {
        if (i) s += ",";
        s += data_->vars[i] + ":" + std::to_string(data_->weights[i]);
    }
    return s + "]";
}

namespace {

void enumerate(const Ring& r, std::size_t var, int remaining, std::vector<int>& cur,
               std::vector<std::vector<int>>& out) {
    if (var + 1 == r.nvars()) {
        int w = r.weights()[var];
        if (remaining >= 0 && remaining % w == 0) {
            cur[var] = remaining / w;
            out.push_back(cur);
        }
        return;
    }
    int w = r.weights()[var];
    for (int e = remaining / w; e >= 0; --e) { // descending: lex-larger first
        cur[var] = e;
        enumerate(r, var + 1, remaining - e * w, cur, out);
    }
    cur[var] = 0;
}

} // namespace

std::vector<std::vector<int>> monomials_of_degree(const Ring& r, int m) {
    std::vector<std::vector<int>> out;
    if (m < 0) return out;
    if (r.nvars() == 0) {
        if (m == 0) out.push_back({});
        return out;
    }
    std::vector<int> cur(r.nvars(), 0);
    enumerate(r, 0, m, cur, out);
    return out;
}

bool grlex_less(const Ring& r, const std::vector<int>& a, const std::vector<int>& b) {
    int da = r.weighted_degree(a), db = r.weighted_degree(b);
    if (da != db) return da < db;
    return a < b; // ascending lex inside a degree
}

} // namespace mfw
