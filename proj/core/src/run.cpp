#include "mfw/run.hpp"

#include <json.hpp>

#include "mfw/hom.hpp"
#include "mfw/invertible.hpp"
#include "mfw/module_oracle.hpp"
#include "mfw/verify.hpp"
#include "mfw/version.hpp"

namespace mfw {

using nlohmann::json;

MatrixFactorization eval_mfexpr(const MfExpr& e, const Bindings& b) {
    switch (e.kind) {
        case MfExpr::Kind::Name: {
            auto it = b.mfs.find(e.name);
            if (it == b.mfs.end()) throw ValidationError("unbound factorization '" + e.name + "'");
            return it->second;
        }
        case MfExpr::Kind::Push: {
            auto it = b.sections.find(e.name);
            if (it == b.sections.end()) throw ValidationError("unbound section '" + e.name + "'");
            return push(eval_mfexpr(e.args[0], b), it->second);
        }
        case MfExpr::Kind::Twist:
            return translate(eval_mfexpr(e.args[0], b), 0, e.amount);
        case MfExpr::Kind::Shift:
            return translate(eval_mfexpr(e.args[0], b), e.amount, 0);
        case MfExpr::Kind::Sum:
            return direct_sum(eval_mfexpr(e.args[0], b), eval_mfexpr(e.args[1], b));
    }
    throw ValidationError("bad factorization expression");
}

namespace {

const SectionData& resolve_section(const std::string& name, const Bindings& b) {
    if (!name.empty()) {
        auto it = b.sections.find(name);
        if (it == b.sections.end()) throw ValidationError("unbound section '" + name + "'");
        return it->second;
    }
    if (b.sections.size() == 1) return b.sections.begin()->second;
    if (b.sections.empty()) throw ValidationError("no section declared; add 'section <name>'");
    throw ValidationError("several sections declared; pick one with 'section <name>'");
}

json matrix_json(const GradedMatrix& m) {
    json rows = json::array();
    for (std::size_t j = 0; j < m.rows(); ++j) {
        json row = json::array();
        for (std::size_t i = 0; i < m.cols(); ++i) row.push_back(m.at(j, i).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string conv_str(const DualityConvention& c, const std::string& name) {
    return "delta=" + std::to_string(c.delta) + " (" + name + "), sigma=" +
           (c.sigma > 0 ? "+1" : "-1");
}

std::string conv_csv(const DualityConvention& c, const std::string& name) {
    return name + ":" + std::to_string(c.delta) + ":" + (c.sigma > 0 ? "+1" : "-1");
}

ConventionSpec to_spec(const ConvExpr& c) {
    if (c.auto_mode) return ConventionSpec::automatic();
    return ConventionSpec::fixed(
        c.dim_rbar ? ConventionSpec::Delta::DimRbar : ConventionSpec::Delta::DimR, c.sigma);
}

struct Rendered {
    json result;
    json params;
    json convention; // null unless a verify/directed query
    std::vector<std::string> csv;  // rows, without the query prefix
    std::vector<std::string> text; // lines
    bool verify_failed = false;
};

struct Exec {
    const Bindings& b;
    const HomOptions hom_opts;

    Rendered operator()(const QueryHom& q) const {
        Rendered r;
        MatrixFactorization A = eval_mfexpr(q.a, b), B = eval_mfexpr(q.b, b);
        HomResult res = hom_shifted(A, B, q.twist, q.shift, hom_opts);
        r.params = {{"a", q.a.str()}, {"b", q.b.str()}, {"twist", q.twist}, {"shift", q.shift}};
        r.result = {{"dim", res.dim()},
                    {"cycle_dim", res.cycle_dim()},
                    {"boundary_dim", res.boundary_dim()}};
        if (q.witnesses) {
            json ws = json::array();
            for (const auto& p : res.quotient_representatives())
                ws.push_back({{"alpha", matrix_json(p.alpha())}, {"beta", matrix_json(p.beta())}});
            r.result["witnesses"] = std::move(ws);
        }
        r.csv.push_back("dim," + std::to_string(res.dim()));
        r.csv.push_back("cycle_dim," + std::to_string(res.cycle_dim()));
        r.csv.push_back("boundary_dim," + std::to_string(res.boundary_dim()));
        r.text.push_back("dim Hom(" + q.a.str() + ", " + q.b.str() + "[" +
                         std::to_string(q.shift) + "](" + std::to_string(q.twist) + ")) = " +
                         std::to_string(res.dim()) + "   (cycles " +
                         std::to_string(res.cycle_dim()) + ", boundaries " +
                         std::to_string(res.boundary_dim()) + ")");
        return r;
    }

    Rendered operator()(const QueryHomTable& q) const {
        Rendered r;
        MatrixFactorization A = eval_mfexpr(q.a, b), B = eval_mfexpr(q.b, b);
        HomTable t = hom_table(A, B, q.shifts.lo, q.shifts.hi, q.twists.lo, q.twists.hi,
                               hom_opts);
        r.params = {{"a", q.a.str()},
                    {"b", q.b.str()},
                    {"shifts", {{"lo", q.shifts.lo}, {"hi", q.shifts.hi}}},
                    {"twists", {{"lo", q.twists.lo}, {"hi", q.twists.hi}}}};
        json cells = json::array();
        for (int i = t.shift_lo; i <= t.shift_hi; ++i)
            for (int n = t.twist_lo; n <= t.twist_hi; ++n) {
                cells.push_back({{"shift", i}, {"twist", n}, {"dim", t.at(i, n)}});
                r.csv.push_back("cell," + std::to_string(i) + "," + std::to_string(n) + "," +
                                std::to_string(t.at(i, n)));
            }
        r.result = {{"cells", std::move(cells)}};
        for (int i = t.shift_lo; i <= t.shift_hi; ++i) {
            std::string line = "shift " + std::to_string(i) + ":";
            for (int n = t.twist_lo; n <= t.twist_hi; ++n)
                line += " " + std::to_string(t.at(i, n));
            r.text.push_back(line);
        }
        return r;
    }

    Rendered operator()(const QueryPush& q) const {
        Rendered r;
        const SectionData& sec = resolve_section(q.section, b);
        MatrixFactorization E = eval_mfexpr(q.e, b);
        MatrixFactorization P = push(E, sec);
        r.params = {{"e", q.e.str()}, {"section", q.section}};
        r.result = {{"F", sec.F().str()},     {"rank", P.rank()}, {"d", P.d()},
                    {"e", P.e()},             {"phi", matrix_json(P.phi())},
                    {"psi", matrix_json(P.psi())}};
        r.csv.push_back("rank," + std::to_string(P.rank()));
        r.csv.push_back("F," + sec.F().str());
        for (std::size_t j = 0; j < P.rank(); ++j)
            for (std::size_t i = 0; i < P.rank(); ++i) {
                r.csv.push_back("phi," + std::to_string(j) + "," + std::to_string(i) + "," +
                                P.phi().at(j, i).str());
                r.csv.push_back("psi," + std::to_string(j) + "," + std::to_string(i) + "," +
                                P.psi().at(j, i).str());
            }
        r.text.push_back("push of " + q.e.str() + " along F = " + sec.F().str() + ": rank " +
                         std::to_string(P.rank()));
        r.text.push_back("phi = " + P.phi().str());
        r.text.push_back("psi = " + P.psi().str());
        return r;
    }

    Rendered operator()(const QueryVerifyTheorem& q) const {
        Rendered r;
        const SectionData& sec = resolve_section(q.section, b);
        MatrixFactorization A = eval_mfexpr(q.a, b), B = eval_mfexpr(q.b, b);
        VerifyReport rep = verify_theorem(A, B, sec, q.shifts.lo, q.shifts.hi, q.twists.lo,
                                          q.twists.hi, to_spec(q.conv), hom_opts);
        r.verify_failed = !rep.pass;
        r.params = {{"a", q.a.str()},
                    {"b", q.b.str()},
                    {"section", q.section},
                    {"shifts", {{"lo", q.shifts.lo}, {"hi", q.shifts.hi}}},
                    {"twists", {{"lo", q.twists.lo}, {"hi", q.twists.hi}}},
                    {"requested_convention", q.conv.str()}};
        json rows = json::array();
        for (const auto& row : rep.rows) {
            rows.push_back({{"shift", row.shift},
                            {"twist", row.twist},
                            {"lhs", row.lhs},
                            {"summand1", row.summand1},
                            {"summand2", row.summand2},
                            {"ok", row.ok}});
            r.csv.push_back("row," + std::to_string(row.shift) + "," +
                            std::to_string(row.twist) + "," + std::to_string(row.lhs) + "," +
                            std::to_string(row.summand1) + "," + std::to_string(row.summand2) +
                            "," + (row.ok ? "ok" : "FAIL"));
        }
        r.result = {{"pass", rep.pass},
                    {"convention_found", rep.convention_found},
                    {"convention",
                     {{"delta", rep.convention.delta},
                      {"sigma", rep.convention.sigma},
                      {"name", rep.convention_name}}},
                    {"r", rep.r},
                    {"h", rep.h},
                    {"a", rep.a},
                    {"second_twist", rep.second_twist},
                    {"cy_case", rep.cy_case},
                    {"rows", std::move(rows)},
                    {"tried", rep.tried}};
        r.convention = conv_str(rep.convention, rep.convention_name);
        r.csv.push_back(std::string("summary,") + (rep.pass ? "pass" : "FAIL") + "," +
                        conv_csv(rep.convention, rep.convention_name));
        r.text.push_back(std::string("verify-theorem: ") + (rep.pass ? "PASS" : "FAIL") +
                         " under " + conv_str(rep.convention, rep.convention_name) +
                         " (second summand twist " + std::to_string(rep.second_twist) +
                         (rep.cy_case ? ", CY case" : "") + ")");
        for (const auto& s : rep.tried) r.text.push_back("  tried " + s);
        for (const auto& row : rep.rows)
            if (!row.ok)
                r.text.push_back("  counterexample i=" + std::to_string(row.shift) + " n=" +
                                 std::to_string(row.twist) + ": " + std::to_string(row.lhs) +
                                 " != " + std::to_string(row.summand1) + " + " +
                                 std::to_string(row.summand2));
        return r;
    }

    Rendered operator()(const QueryVerifySerre& q) const {
        Rendered r;
        MatrixFactorization A = eval_mfexpr(q.a, b), B = eval_mfexpr(q.b, b);
        SerreReport rep =
            verify_serre(A, B, q.twists.lo, q.twists.hi, to_spec(q.conv), hom_opts);
        r.verify_failed = !rep.pass;
        r.params = {{"a", q.a.str()},
                    {"b", q.b.str()},
                    {"twists", {{"lo", q.twists.lo}, {"hi", q.twists.hi}}},
                    {"requested_convention", q.conv.str()}};
        json rows = json::array();
        for (const auto& row : rep.rows) {
            rows.push_back({{"twist", row.twist},
                            {"lhs", row.lhs},
                            {"rhs", row.rhs},
                            {"ok", row.ok}});
            r.csv.push_back("row," + std::to_string(row.twist) + "," + std::to_string(row.lhs) +
                            "," + std::to_string(row.rhs) + "," + (row.ok ? "ok" : "FAIL"));
        }
        r.result = {{"pass", rep.pass},
                    {"convention_found", rep.convention_found},
                    {"convention",
                     {{"delta", rep.convention.delta},
                      {"sigma", rep.convention.sigma},
                      {"name", rep.convention_name}}},
                    {"r", rep.r},
                    {"h", rep.h},
                    {"rows", std::move(rows)},
                    {"tried", rep.tried}};
        r.convention = conv_str(rep.convention, rep.convention_name);
        r.csv.push_back(std::string("summary,") + (rep.pass ? "pass" : "FAIL") + "," +
                        conv_csv(rep.convention, rep.convention_name));
        r.text.push_back(std::string("verify-serre: ") + (rep.pass ? "PASS" : "FAIL") +
                         " under " + conv_str(rep.convention, rep.convention_name));
        return r;
    }

    Rendered operator()(const QueryOracle& q) const {
        Rendered r;
        MatrixFactorization A = eval_mfexpr(q.a, b);
        switch (q.what) {
            case QueryOracle::What::Hilbert: {
                auto dims = hilbert_function(coker_presentation(A), q.window.lo, q.window.hi);
                r.params = {{"what", "hilbert"},
                            {"a", q.a.str()},
                            {"window", {{"lo", q.window.lo}, {"hi", q.window.hi}}}};
                r.result = {{"dims", dims}};
                std::string line = "hilbert:";
                for (std::size_t k = 0; k < dims.size(); ++k) {
                    r.csv.push_back("dim," + std::to_string(q.window.lo + static_cast<int>(k)) +
                                    "," + std::to_string(dims[k]));
                    line += " " + std::to_string(dims[k]);
                }
                r.text.push_back(line);
                return r;
            }
            case QueryOracle::What::StableHom: {
                MatrixFactorization B = eval_mfexpr(q.b, b);
                long dim = stable_hom_dim(coker_presentation(A), coker_presentation(B), q.twist);
                r.params = {{"what", "stablehom"},
                            {"a", q.a.str()},
                            {"b", q.b.str()},
                            {"twist", q.twist}};
                r.result = {{"dim", dim}};
                r.csv.push_back("dim," + std::to_string(dim));
                r.text.push_back("stable hom dim = " + std::to_string(dim));
                return r;
            }
            case QueryOracle::What::Ext: {
                MatrixFactorization B = eval_mfexpr(q.b, b);
                long dim = ext_dim_periodic(A, B, q.shift, q.twist);
                r.params = {{"what", "ext"},
                            {"a", q.a.str()},
                            {"b", q.b.str()},
                            {"shift", q.shift},
                            {"twist", q.twist}};
                r.result = {{"dim", dim}};
                r.csv.push_back("dim," + std::to_string(dim));
                r.text.push_back("ext dim = " + std::to_string(dim));
                return r;
            }
        }
        throw ValidationError("bad oracle query");
    }

    Rendered operator()(const QueryTranspose& q) const {
        Rendered r;
        ExponentMatrix A = exponent_matrix(q.poly);
        Poly tr = bh_transpose(A, q.poly.ring().field());
        r.params = {{"ring", q.ring}, {"poly", q.poly.str()}};
        json mat = json::array();
        for (const auto& row : A.a) mat.push_back(row);
        r.result = {{"exponent_matrix", std::move(mat)},
                    {"transpose", tr.str()},
                    {"transpose_ring", tr.ring().str()}};
        auto weights_or_null = [](const ExponentMatrix& M) -> json {
            try {
                WeightSystem ws = weights_from_matrix(M);
                return {{"weights", ws.weights}, {"degree", ws.degree}};
            } catch (const ValidationError&) {
                return nullptr;
            }
        };
        r.result["weights"] = weights_or_null(A);
        r.result["transpose_weights"] = weights_or_null(A.transposed());
        for (std::size_t i = 0; i < A.size(); ++i)
            for (std::size_t j = 0; j < A.size(); ++j)
                r.csv.push_back("matrix," + std::to_string(i) + "," + std::to_string(j) + "," +
                                std::to_string(A.a[i][j]));
        r.csv.push_back("transpose," + tr.str());
        r.text.push_back("transpose of " + q.poly.str() + " is " + tr.str() + " over " +
                         tr.ring().str());
        return r;
    }

    Rendered operator()(const QueryDirected& q) const {
        Rendered r;
        const SectionData& sec = resolve_section(q.section, b);
        std::vector<MatrixFactorization> objs;
        std::vector<std::string> names;
        for (const auto& e : q.objects) {
            objs.push_back(eval_mfexpr(e, b));
            names.push_back(e.str());
        }
        DirectednessReport rep = directedness_report(objs, sec, to_spec(q.conv), hom_opts);
        r.params = {{"objects", names}, {"section", q.section},
                    {"requested_convention", q.conv.str()}};
        json cells = json::array();
        for (const auto& c : rep.cells) {
            cells.push_back({{"from", c.from},
                             {"to", c.to},
                             {"hom_base", c.hom_base},
                             {"hom_push", c.hom_push},
                             {"serre_dual", c.serre_dual},
                             {"completed", c.completed}});
            r.csv.push_back("cell," + std::to_string(c.from) + "," + std::to_string(c.to) + "," +
                            std::to_string(c.hom_base) + "," + std::to_string(c.hom_push) + "," +
                            std::to_string(c.serre_dual) + "," + (c.completed ? "yes" : "no"));
            r.text.push_back("(" + names[c.from] + " -> " + names[c.to] + "): base " +
                             std::to_string(c.hom_base) + ", push " +
                             std::to_string(c.hom_push) + ", dual " +
                             std::to_string(c.serre_dual) +
                             (c.completed ? "  [completed]" : ""));
        }
        r.result = {{"count", rep.count},
                    {"second_twist", rep.second_twist},
                    {"cells", std::move(cells)}};
        std::string name = q.conv.auto_mode || q.conv.dim_rbar ? "dimRbar" : "dimR";
        r.convention = conv_str(rep.convention, name);
        return r;
    }
};

std::string kind_name(const Query& q) {
    struct V {
        std::string operator()(const QueryHom&) const { return "hom"; }
        std::string operator()(const QueryHomTable&) const { return "homtable"; }
        std::string operator()(const QueryPush&) const { return "push"; }
        std::string operator()(const QueryVerifyTheorem&) const { return "verify-theorem"; }
        std::string operator()(const QueryVerifySerre&) const { return "verify-serre"; }
        std::string operator()(const QueryOracle&) const { return "oracle"; }
        std::string operator()(const QueryTranspose&) const { return "transpose"; }
        std::string operator()(const QueryDirected&) const { return "directed"; }
    };
    return std::visit(V{}, q);
}

} // namespace

RunOutcome run_program(const Program& p, const RunOptions& opts) {
    Bindings b = validate_program(p);
    HomOptions hom_opts{opts.cap, opts.jobs};
    Exec exec{b, hom_opts};

    json doc = json::array();
    std::string csv, text;
    bool verify_failed = false;

    for (std::size_t i = 0; i < p.queries.size(); ++i) {
        const Query& q = p.queries[i];
        Rendered r;
        try {
            r = std::visit(exec, q);
        } catch (const MfwError& e) {
            throw MfwError("query " + std::to_string(i + 1) + " [" + kind_name(q) +
                           "]: " + e.what());
        }
        verify_failed = verify_failed || r.verify_failed;
        json out = {{"query", query_str(q)},
                    {"kind", kind_name(q)},
                    {"params", std::move(r.params)},
                    {"result", std::move(r.result)},
                    {"convention", std::move(r.convention)},
                    {"version", kVersion}};
        doc.push_back(std::move(out));
        for (const auto& row : r.csv)
            csv += std::to_string(i + 1) + "," + kind_name(q) + "," + row + "\n";
        text += "## query " + std::to_string(i + 1) + ": " + query_str(q) + "\n";
        for (const auto& line : r.text) text += line + "\n";
    }

    RunOutcome outcome;
    outcome.verify_failed = verify_failed;
    switch (opts.format) {
        case OutputFormat::Json: outcome.output = doc.dump(2) + "\n"; break;
        case OutputFormat::Csv: outcome.output = csv; break;
        case OutputFormat::Text: outcome.output = text; break;
    }
    return outcome;
}

} // namespace mfw
