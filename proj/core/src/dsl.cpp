#include "mfw/dsl.hpp"

#include <set>

namespace mfw {

namespace {

// ------------------------------ lexer ------------------------------

enum class Tok {
    Ident, Int, LBrace, RBrace, LBracket, RBracket, LParen, RParen,
    Comma, Semi, Colon, Eq, Plus, Minus, Star, Caret, Slash, DotDot, End
};

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto push = [&](Tok k, std::string s) { out.push_back(Token{k, std::move(s), line, col}); };
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') { ++line; col = 1; ++i; continue; }
        if (c == ' ' || c == '\t' || c == '\r') { ++col; ++i; continue; }
        if (c == '#') { // line comment
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            push(Tok::Ident, text.substr(i, j - i));
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            push(Tok::Int, text.substr(i, j - i));
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        if (c == '.' && i + 1 < text.size() && text[i + 1] == '.') {
            push(Tok::DotDot, "..");
            col += 2;
            i += 2;
            continue;
        }
        Tok k;
        switch (c) {
            case '{': k = Tok::LBrace; break;
            case '}': k = Tok::RBrace; break;
            case '[': k = Tok::LBracket; break;
            case ']': k = Tok::RBracket; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            case ',': k = Tok::Comma; break;
            case ';': k = Tok::Semi; break;
            case ':': k = Tok::Colon; break;
            case '=': k = Tok::Eq; break;
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '^': k = Tok::Caret; break;
            case '/': k = Tok::Slash; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        push(k, std::string(1, c));
        ++col;
        ++i;
    }
    out.push_back(Token{Tok::End, "", line, col});
    return out;
}

// ------------------------------ parser ------------------------------

class Parser {
public:
    Parser(const std::string& text, std::optional<Field> field_override)
        : toks_(lex(text)), override_(std::move(field_override)) {}

    Program parse() {
        while (!at(Tok::End)) statement();
        if (override_) prog_.field = *override_;
        return std::move(prog_);
    }

    Poly parse_poly_only(const Ring& ring) {
        Poly p = expr(ring);
        expect(Tok::End, "end of polynomial");
        return p;
    }

private:
    const Token& cur() const { return toks_[pos_]; }
    const Token& peek(std::size_t k = 1) const {
        return toks_[std::min(pos_ + k, toks_.size() - 1)];
    }
    bool at(Tok k) const { return cur().kind == k; }
    bool at_ident(const char* s) const { return at(Tok::Ident) && cur().text == s; }
    Token advance() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " (got '" + (cur().kind == Tok::End ? "<end>" : cur().text) + "')",
                         cur().line, cur().col);
    }

    Token expect(Tok k, const char* what) {
        if (!at(k)) fail(std::string("expected ") + what);
        return advance();
    }

    std::string expect_ident(const char* what) { return expect(Tok::Ident, what).text; }

    void expect_keyword(const char* kw) {
        if (!at_ident(kw)) fail(std::string("expected '") + kw + "'");
        advance();
    }

    static long checked_long(const Token& t) {
        try {
            return std::stol(t.text);
        } catch (const std::exception&) {
            throw ParseError("integer '" + t.text + "' out of range", t.line, t.col);
        }
    }

    int integer() {
        bool neg = false;
        if (at(Tok::Minus)) { advance(); neg = true; }
        Token t = expect(Tok::Int, "integer");
        long v = checked_long(t);
        if (v > 1'000'000'000) throw ParseError("integer '" + t.text + "' out of range", t.line, t.col);
        return static_cast<int>(neg ? -v : v);
    }

    Range range() {
        int lo = integer();
        expect(Tok::DotDot, "'..'");
        int hi = integer();
        if (lo > hi) fail("empty range " + std::to_string(lo) + ".." + std::to_string(hi));
        return Range{lo, hi};
    }

    // -------- polynomial expressions --------

    const Field& field() const { return override_ ? *override_ : prog_.field; }

    Poly expr(const Ring& ring) {
        bool neg = at(Tok::Minus);
        if (neg) advance();
        Poly p = term(ring);
        if (neg) p = -p;
        while (at(Tok::Plus) || at(Tok::Minus)) {
            bool minus = at(Tok::Minus);
            advance();
            Poly q = term(ring);
            p = minus ? p - q : p + q;
        }
        return p;
    }

    Poly term(const Ring& ring) {
        Poly p = factor(ring);
        while (at(Tok::Star)) {
            advance();
            p = p * factor(ring);
        }
        return p;
    }

    Poly factor(const Ring& ring) {
        Poly b = base(ring);
        if (at(Tok::Caret)) {
            advance();
            Token t = expect(Tok::Int, "exponent");
            long e = checked_long(t);
            if (e > 100000) throw ParseError("exponent '" + t.text + "' too large", t.line, t.col);
            b = b.pow(static_cast<int>(e));
        }
        return b;
    }

    Poly base(const Ring& ring) {
        if (at(Tok::Minus)) {
            advance();
            return -base(ring);
        }
        if (at(Tok::Int)) {
            Token num = advance();
            if (at(Tok::Slash)) {
                advance();
                Token den = expect(Tok::Int, "denominator");
                return Poly::constant(ring, Scalar::fraction(field(), num.text, den.text));
            }
            return Poly::constant(ring, Scalar::from_decimal(field(), num.text));
        }
        if (at(Tok::Ident)) {
            Token t = advance();
            auto idx = ring.index_of(t.text);
            if (!idx)
                throw ParseError("unknown variable '" + t.text + "' in ring " + ring.str(),
                                 t.line, t.col);
            return Poly::variable(ring, *idx);
        }
        if (at(Tok::LParen)) {
            advance();
            Poly p = expr(ring);
            expect(Tok::RParen, "')'");
            return p;
        }
        fail("expected a polynomial");
    }

    // -------- declarations --------

    void declare(const std::string& name, const Token& where) {
        if (!names_.insert(name).second)
            throw ParseError("re-declaration of '" + name + "'", where.line, where.col);
    }

    const Ring& lookup_ring(const std::string& name, const Token& where) const {
        auto it = rings_.find(name);
        if (it == rings_.end())
            throw ParseError("unbound ring '" + name + "'", where.line, where.col);
        return it->second;
    }

    void statement() {
        Token head = cur();
        if (at_ident("field")) return field_decl();
        if (at_ident("ring")) return ring_decl();
        if (at_ident("section")) return section_decl();
        if (at_ident("mf")) return mf_decl();
        if (at_ident("query")) return query_decl();
        throw ParseError("expected a declaration or query", head.line, head.col);
    }

    void field_decl() {
        Token head = advance();
        if (prog_.field_declared)
            throw ParseError("re-declaration of the field", head.line, head.col);
        if (!prog_.rings.empty() || !prog_.sections.empty() || !prog_.mfs.empty())
            throw ParseError("the field must be declared before any ring", head.line, head.col);
        std::string name = expect_ident("'Q' or 'GF'");
        if (name == "Q") {
            prog_.field = Field::rationals();
        } else if (name == "GF") {
            expect(Tok::LParen, "'('");
            Token p = expect(Tok::Int, "prime modulus");
            expect(Tok::RParen, "')'");
            long mod = checked_long(p);
            if (mod >= (1L << 31)) throw ParseError("modulus too large", p.line, p.col);
            prog_.field = Field::prime(static_cast<std::uint32_t>(mod));
        } else {
            throw ParseError("unknown field '" + name + "'", head.line, head.col);
        }
        prog_.field_declared = true;
        expect(Tok::Semi, "';'");
    }

    void ring_decl() {
        advance();
        Token name_tok = cur();
        std::string name = expect_ident("ring name");
        declare(name, name_tok);
        expect(Tok::LBrace, "'{'");
        RingDecl decl;
        decl.name = name;
        for (;;) {
            decl.vars.push_back(expect_ident("variable name"));
            expect(Tok::Colon, "':'");
            decl.weights.push_back(integer());
            if (at(Tok::Comma)) { advance(); continue; }
            break;
        }
        expect(Tok::RBrace, "'}'");
        expect(Tok::Semi, "';'");
        decl.ring = Ring(field(), decl.vars, decl.weights);
        rings_.emplace(name, decl.ring);
        prog_.order.emplace_back(0, prog_.rings.size());
        prog_.rings.push_back(std::move(decl));
    }

    void section_decl() {
        advance();
        Token name_tok = cur();
        std::string name = expect_ident("section name");
        declare(name, name_tok);
        expect(Tok::Eq, "'='");
        Token ring_tok = cur();
        std::string base = expect_ident("ring name");
        const Ring& R = lookup_ring(base, ring_tok);
        expect(Tok::Plus, "'+'");
        std::string wvar = expect_ident("variable name");
        expect(Tok::Colon, "':'");
        int weight = integer();
        Ring S = R.extend(wvar, weight); // may throw ValidationError (fresh name, weight > 0)
        expect_keyword("with");
        expect_keyword("f");
        expect(Tok::Eq, "'='");
        Poly f = expr(R);
        expect(Tok::Comma, "','");
        expect_keyword("g");
        expect(Tok::Eq, "'='");
        Poly g = expr(S);
        expect(Tok::Semi, "';'");
        rings_.emplace(name, S); // the section name also denotes the extended ring
        prog_.order.emplace_back(1, prog_.sections.size());
        prog_.sections.push_back(SectionDecl{name, base, wvar, weight, std::move(f), std::move(g)});
    }

    void mf_decl() {
        advance();
        Token name_tok = cur();
        std::string name = expect_ident("mf name");
        declare(name, name_tok);
        mf_names_.insert(name);
        expect_keyword("over");
        expect(Tok::LParen, "'('");
        Token ring_tok = cur();
        std::string rname = expect_ident("ring name");
        const Ring& R = lookup_ring(rname, ring_tok);
        expect(Tok::Comma, "','");
        Poly f = expr(R);
        expect(Tok::RParen, "')'");
        expect(Tok::LBrace, "'{'");
        MfDecl decl;
        decl.name = name;
        decl.ring = rname;
        decl.f = std::move(f);
        expect_keyword("d");
        expect(Tok::Eq, "'='");
        decl.d = int_list();
        expect(Tok::Semi, "';'");
        expect_keyword("e");
        expect(Tok::Eq, "'='");
        decl.e = int_list();
        expect(Tok::Semi, "';'");
        expect_keyword("phi");
        expect(Tok::Eq, "'='");
        decl.phi = poly_matrix(R);
        expect(Tok::Semi, "';'");
        expect_keyword("psi");
        expect(Tok::Eq, "'='");
        decl.psi = poly_matrix(R);
        expect(Tok::Semi, "';'");
        expect(Tok::RBrace, "'}'");
        expect(Tok::Semi, "';'");
        prog_.order.emplace_back(2, prog_.mfs.size());
        prog_.mfs.push_back(std::move(decl));
    }

    std::vector<int> int_list() {
        expect(Tok::LBracket, "'['");
        std::vector<int> out;
        if (!at(Tok::RBracket)) {
            out.push_back(integer());
            while (at(Tok::Comma)) {
                advance();
                out.push_back(integer());
            }
        }
        expect(Tok::RBracket, "']'");
        return out;
    }

    std::vector<std::vector<Poly>> poly_matrix(const Ring& ring) {
        expect(Tok::LBracket, "'['");
        std::vector<std::vector<Poly>> rows;
        if (!at(Tok::RBracket)) {
            rows.push_back(poly_row(ring));
            while (at(Tok::Comma)) {
                advance();
                rows.push_back(poly_row(ring));
            }
        }
        expect(Tok::RBracket, "']'");
        return rows;
    }

    std::vector<Poly> poly_row(const Ring& ring) {
        expect(Tok::LBracket, "'['");
        std::vector<Poly> row;
        if (!at(Tok::RBracket)) {
            row.push_back(expr(ring));
            while (at(Tok::Comma)) {
                advance();
                row.push_back(expr(ring));
            }
        }
        expect(Tok::RBracket, "']'");
        return row;
    }

    // -------- queries --------

    bool mf_name_known(const std::string& n) const { return mf_names_.count(n) > 0; }

    bool at_mfexpr_start() const {
        if (!at(Tok::Ident)) return false;
        const std::string& t = cur().text;
        if ((t == "push" || t == "twist" || t == "shift" || t == "sum") &&
            peek().kind == Tok::LParen)
            return true;
        // A clause keyword terminates an expression list.
        if (t == "section" || t == "convention" || t == "twist" || t == "shift" ||
            t == "twists" || t == "shifts" || t == "window" || t == "witnesses")
            return false;
        return true;
    }

    MfExpr mf_expr() {
        Token t = cur();
        std::string name = expect_ident("factorization expression");
        if ((name == "push" || name == "twist" || name == "shift" || name == "sum") &&
            at(Tok::LParen)) {
            advance();
            MfExpr e;
            if (name == "push") {
                e.kind = MfExpr::Kind::Push;
                e.args.push_back(mf_expr());
                expect(Tok::Comma, "','");
                e.name = expect_ident("section name");
            } else if (name == "sum") {
                e.kind = MfExpr::Kind::Sum;
                e.args.push_back(mf_expr());
                expect(Tok::Comma, "','");
                e.args.push_back(mf_expr());
            } else {
                e.kind = name == "twist" ? MfExpr::Kind::Twist : MfExpr::Kind::Shift;
                e.args.push_back(mf_expr());
                expect(Tok::Comma, "','");
                e.amount = integer();
            }
            expect(Tok::RParen, "')'");
            return e;
        }
        if (!mf_name_known(name))
            throw ParseError("unbound factorization '" + name + "'", t.line, t.col);
        MfExpr e;
        e.kind = MfExpr::Kind::Name;
        e.name = name;
        return e;
    }

    ConvExpr convention() {
        ConvExpr c;
        Token t = cur();
        std::string name = expect_ident("convention");
        if (name == "auto") {
            c.auto_mode = true;
        } else if (name == "dimR" || name == "dimRbar") {
            c.auto_mode = false;
            c.dim_rbar = name == "dimRbar";
            if (at(Tok::Comma)) {
                advance();
                c.sigma = integer();
                if (c.sigma != 1 && c.sigma != -1)
                    throw ParseError("convention sign must be 1 or -1", t.line, t.col);
            }
        } else {
            throw ParseError("unknown convention '" + name + "'", t.line, t.col);
        }
        return c;
    }

    std::string section_clause_or_empty() {
        if (at_ident("section")) {
            advance();
            Token t = cur();
            std::string name = expect_ident("section name");
            bool known = false;
            for (const auto& s : prog_.sections) known = known || s.name == name;
            if (!known) throw ParseError("unbound section '" + name + "'", t.line, t.col);
            return name;
        }
        return "";
    }

    void query_decl() {
        advance();
        Token kind_tok = cur();
        std::string kind = expect_ident("query kind");
        if (kind == "verify") {
            expect(Tok::Minus, "'-'");
            kind += "-" + expect_ident("'theorem' or 'serre'");
        }
        Query q = [&]() -> Query {
            if (kind == "hom") return q_hom();
            if (kind == "homtable") return q_homtable();
            if (kind == "push") return q_push();
            if (kind == "verify-theorem") return q_verify_theorem();
            if (kind == "verify-serre") return q_verify_serre();
            if (kind == "oracle") return q_oracle();
            if (kind == "transpose") return q_transpose();
            if (kind == "directed") return q_directed();
            throw ParseError("unknown query kind '" + kind + "'", kind_tok.line, kind_tok.col);
        }();
        expect(Tok::Semi, "';'");
        prog_.order.emplace_back(3, prog_.queries.size());
        prog_.queries.push_back(std::move(q));
    }

    Query q_hom() {
        QueryHom q{mf_expr(), mf_expr(), 0, 0, false};
        for (;;) {
            if (at_ident("twist")) { advance(); q.twist = integer(); continue; }
            if (at_ident("shift")) { advance(); q.shift = integer(); continue; }
            if (at_ident("witnesses")) { advance(); q.witnesses = true; continue; }
            break;
        }
        return q;
    }

    Query q_homtable() {
        QueryHomTable q{mf_expr(), mf_expr(), {}, {}};
        bool have_s = false, have_t = false;
        for (;;) {
            if (at_ident("shifts")) { advance(); q.shifts = range(); have_s = true; continue; }
            if (at_ident("twists")) { advance(); q.twists = range(); have_t = true; continue; }
            break;
        }
        if (!have_s || !have_t) fail("homtable needs 'shifts a..b' and 'twists c..d'");
        return q;
    }

    Query q_push() {
        QueryPush q{mf_expr(), ""};
        q.section = section_clause_or_empty();
        return q;
    }

    Query q_verify_theorem() {
        QueryVerifyTheorem q{mf_expr(), mf_expr(), "", {}, {}, {}};
        bool have_s = false, have_t = false;
        for (;;) {
            if (at_ident("section")) { q.section = section_clause_or_empty(); continue; }
            if (at_ident("shifts")) { advance(); q.shifts = range(); have_s = true; continue; }
            if (at_ident("twists")) { advance(); q.twists = range(); have_t = true; continue; }
            if (at_ident("convention")) { advance(); q.conv = convention(); continue; }
            break;
        }
        if (!have_s || !have_t) fail("verify-theorem needs 'shifts a..b' and 'twists c..d'");
        return q;
    }

    Query q_verify_serre() {
        QueryVerifySerre q{mf_expr(), mf_expr(), {}, {}};
        bool have_t = false;
        for (;;) {
            if (at_ident("twists")) { advance(); q.twists = range(); have_t = true; continue; }
            if (at_ident("convention")) { advance(); q.conv = convention(); continue; }
            break;
        }
        if (!have_t) fail("verify-serre needs 'twists a..b'");
        return q;
    }

    Query q_oracle() {
        Token what_tok = cur();
        std::string what = expect_ident("oracle kind");
        if (what == "hilbert") {
            QueryOracle q;
            q.what = QueryOracle::What::Hilbert;
            q.a = mf_expr();
            expect_keyword("window");
            q.window = range();
            return q;
        }
        if (what == "stablehom") {
            QueryOracle q;
            q.what = QueryOracle::What::StableHom;
            q.a = mf_expr();
            q.b = mf_expr();
            if (at_ident("twist")) { advance(); q.twist = integer(); }
            return q;
        }
        if (what == "ext") {
            QueryOracle q;
            q.what = QueryOracle::What::Ext;
            q.a = mf_expr();
            q.b = mf_expr();
            for (;;) {
                if (at_ident("shift")) { advance(); q.shift = integer(); continue; }
                if (at_ident("twist")) { advance(); q.twist = integer(); continue; }
                break;
            }
            return q;
        }
        throw ParseError("unknown oracle '" + what + "'", what_tok.line, what_tok.col);
    }

    Query q_transpose() {
        Token ring_tok = cur();
        std::string rname = expect_ident("ring name");
        const Ring& R = lookup_ring(rname, ring_tok);
        QueryTranspose q{rname, expr(R)};
        return q;
    }

    Query q_directed() {
        QueryDirected q;
        while (at_mfexpr_start()) q.objects.push_back(mf_expr());
        if (q.objects.empty() && !at(Tok::Semi)) fail("expected factorization expressions");
        for (;;) {
            if (at_ident("section")) { q.section = section_clause_or_empty(); continue; }
            if (at_ident("convention")) { advance(); q.conv = convention(); continue; }
            break;
        }
        return q;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::optional<Field> override_;
    Program prog_;
    std::map<std::string, Ring> rings_;
    std::set<std::string> names_;
    std::set<std::string> mf_names_; // tracked separately for expression resolution
};

} // namespace

Program parse_program(const std::string& text, std::optional<Field> field_override) {
    Parser p(text, std::move(field_override));
    return p.parse();
}

Poly parse_polynomial(const Ring& ring, const std::string& text) {
    Parser p(text, ring.field());
    return p.parse_poly_only(ring);
}

// ------------------------------ printing ------------------------------

std::string MfExpr::str() const {
    switch (kind) {
        case Kind::Name: return name;
        case Kind::Push: return "push(" + args[0].str() + ", " + name + ")";
        case Kind::Twist: return "twist(" + args[0].str() + ", " + std::to_string(amount) + ")";
        case Kind::Shift: return "shift(" + args[0].str() + ", " + std::to_string(amount) + ")";
        case Kind::Sum: return "sum(" + args[0].str() + ", " + args[1].str() + ")";
    }
    return "";
}

std::string ConvExpr::str() const {
    if (auto_mode) return "auto";
    std::string s = dim_rbar ? "dimRbar" : "dimR";
    if (sigma < 0) s += ",-1";
    return s;
}

namespace {

std::string range_str(const Range& r) {
    return std::to_string(r.lo) + ".." + std::to_string(r.hi);
}

std::string int_list_str(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

std::string matrix_str(const std::vector<std::vector<Poly>>& m) {
    std::string s = "[";
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (j) s += ", ";
        s += "[";
        for (std::size_t i = 0; i < m[j].size(); ++i) {
            if (i) s += ", ";
            s += m[j][i].str();
        }
        s += "]";
    }
    return s + "]";
}

struct QueryPrinter {
    std::string operator()(const QueryHom& q) const {
        std::string s = "query hom " + q.a.str() + " " + q.b.str() + " twist " +
                        std::to_string(q.twist) + " shift " + std::to_string(q.shift);
        if (q.witnesses) s += " witnesses";
        return s + ";";
    }
    std::string operator()(const QueryHomTable& q) const {
        return "query homtable " + q.a.str() + " " + q.b.str() + " shifts " +
               range_str(q.shifts) + " twists " + range_str(q.twists) + ";";
    }
    std::string operator()(const QueryPush& q) const {
        std::string s = "query push " + q.e.str();
        if (!q.section.empty()) s += " section " + q.section;
        return s + ";";
    }
    std::string operator()(const QueryVerifyTheorem& q) const {
        std::string s = "query verify-theorem " + q.a.str() + " " + q.b.str();
        if (!q.section.empty()) s += " section " + q.section;
        s += " shifts " + range_str(q.shifts) + " twists " + range_str(q.twists) +
             " convention " + q.conv.str();
        return s + ";";
    }
    std::string operator()(const QueryVerifySerre& q) const {
        return "query verify-serre " + q.a.str() + " " + q.b.str() + " twists " +
               range_str(q.twists) + " convention " + q.conv.str() + ";";
    }
    std::string operator()(const QueryOracle& q) const {
        switch (q.what) {
            case QueryOracle::What::Hilbert:
                return "query oracle hilbert " + q.a.str() + " window " + range_str(q.window) +
                       ";";
            case QueryOracle::What::StableHom:
                return "query oracle stablehom " + q.a.str() + " " + q.b.str() + " twist " +
                       std::to_string(q.twist) + ";";
            case QueryOracle::What::Ext:
                return "query oracle ext " + q.a.str() + " " + q.b.str() + " shift " +
                       std::to_string(q.shift) + " twist " + std::to_string(q.twist) + ";";
        }
        return ";";
    }
    std::string operator()(const QueryTranspose& q) const {
        return "query transpose " + q.ring + " " + q.poly.str() + ";";
    }
    std::string operator()(const QueryDirected& q) const {
        std::string s = "query directed";
        for (const auto& e : q.objects) s += " " + e.str();
        if (!q.section.empty()) s += " section " + q.section;
        s += " convention " + q.conv.str();
        return s + ";";
    }
};

} // namespace

std::string query_str(const Query& q) { return std::visit(QueryPrinter{}, q); }

std::string print_program(const Program& p) {
    std::string out;
    out += "field " + p.field.name() + ";\n";
    for (const auto& [kind, idx] : p.order) {
        switch (kind) {
            case 0: {
                const RingDecl& r = p.rings[idx];
                out += "ring " + r.name + " { ";
                for (std::size_t i = 0; i < r.vars.size(); ++i) {
                    if (i) out += ", ";
                    out += r.vars[i] + ":" + std::to_string(r.weights[i]);
                }
                out += " };\n";
                break;
            }
            case 1: {
                const SectionDecl& s = p.sections[idx];
                out += "section " + s.name + " = " + s.ring + " + " + s.wvar + ":" +
                       std::to_string(s.weight) + " with f = " + s.f.str() + ", g = " +
                       s.g.str() + ";\n";
                break;
            }
            case 2: {
                const MfDecl& m = p.mfs[idx];
                out += "mf " + m.name + " over (" + m.ring + ", " + m.f.str() + ") { d=" +
                       int_list_str(m.d) + "; e=" + int_list_str(m.e) + "; phi=" +
                       matrix_str(m.phi) + "; psi=" + matrix_str(m.psi) + "; };\n";
                break;
            }
            case 3:
                out += query_str(p.queries[idx]) + "\n";
                break;
        }
    }
    return out;
}

// ------------------------------ validation ------------------------------

Bindings validate_program(const Program& p) {
    Bindings b;
    for (const auto& r : p.rings) b.rings.emplace(r.name, r.ring);
    for (const auto& s : p.sections) {
        auto it = b.rings.find(s.ring);
        if (it == b.rings.end()) throw ValidationError("section " + s.name + ": unbound ring");
        SectionData sec(it->second, s.wvar, s.weight, s.f, s.g);
        b.rings.emplace(s.name, sec.ext_ring());
        b.sections.emplace(s.name, std::move(sec));
    }
    for (const auto& m : p.mfs) {
        auto it = b.rings.find(m.ring);
        if (it == b.rings.end()) throw ValidationError("mf " + m.name + ": unbound ring");
        const Ring& R = it->second;
        auto deg = m.f.degree();
        if (!deg)
            throw ValidationError("mf " + m.name + ": f = " + m.f.str() + " is inhomogeneous");
        auto build = [&](const std::vector<std::vector<Poly>>& rows, const TwistTuple& target,
                         const TwistTuple& source, int offset, const char* which) {
            std::vector<Poly> entries;
            if (rows.size() != target.size())
                throw ValidationError("mf " + m.name + ": " + which + " has " +
                                      std::to_string(rows.size()) + " rows, expected " +
                                      std::to_string(target.size()));
            for (const auto& row : rows) {
                if (row.size() != source.size())
                    throw ValidationError("mf " + m.name + ": " + which +
                                          " row width differs from |" +
                                          (offset ? "d" : "e") + "| = " +
                                          std::to_string(source.size()));
                for (const auto& q : row) entries.push_back(q);
            }
            return GradedMatrix(R, target, source, offset, std::move(entries));
        };
        try {
            GradedMatrix phi = build(m.phi, m.d, m.e, 0, "phi");
            GradedMatrix psi = build(m.psi, m.e, m.d, *deg, "psi");
            b.mfs.emplace(m.name, MatrixFactorization(R, m.f, m.d, m.e, std::move(phi),
                                                      std::move(psi)));
        } catch (const ValidationError& err) {
            throw ValidationError("mf " + m.name + ": " + err.what());
        }
    }
    return b;
}

} // namespace mfw
