#pragma once

#include <map>
#include <variant>

#include "mfw/mf.hpp"
#include "mfw/section.hpp"

namespace mfw {

// ---------------------------------------------------------------------------
// Surface syntax
//
//   field Q;                         field GF(32003);
//   ring R { x:1, y:2 };
//   section S = R + w:1 with f = x^2, g = w;
//   mf E over (R, x^2) { d=[0]; e=[-1]; phi=[[x]]; psi=[[x]]; };
//   query hom E E twist 0 shift 0;
//   query homtable E E shifts -2..2 twists -3..3;
//   query push E section S;
//   query verify-theorem E E section S shifts -3..3 twists -4..4 convention auto;
//   query verify-serre E E twists -4..4 convention auto;
//   query oracle hilbert E window 0..4;
//   query oracle stablehom E E twist 0;
//   query oracle ext E E shift 1 twist 0;
//   query transpose R x^2*y + y^3;
//   query directed E1 E2 section S;
//
// MF positions accept expressions: a name, push(<e>, <section>),
// twist(<e>, n), shift(<e>, i), sum(<e>, <e>). A section name also binds its
// extended ring, so factorizations over S can be declared directly.
// `section <name>` clauses may be omitted when exactly one section exists.
// ---------------------------------------------------------------------------

struct Range {
    int lo = 0, hi = 0;
    bool operator==(const Range&) const = default;
};

struct MfExpr {
    enum class Kind { Name, Push, Twist, Shift, Sum };
    Kind kind = Kind::Name;
    std::string name; // Name: the mf; Push: the section
    int amount = 0;   // Twist / Shift
    std::vector<MfExpr> args;

    std::string str() const;
    bool operator==(const MfExpr&) const = default;
};

struct ConvExpr {
    bool auto_mode = true;
    bool dim_rbar = true; // when fixed: delta = dim Rbar vs dim R
    int sigma = +1;

    std::string str() const;
    bool operator==(const ConvExpr&) const = default;
};

struct QueryHom {
    MfExpr a, b;
    int twist = 0, shift = 0;
    bool witnesses = false;
};
struct QueryHomTable {
    MfExpr a, b;
    Range shifts, twists;
};
struct QueryPush {
    MfExpr e;
    std::string section; // empty = the only declared section
};
struct QueryVerifyTheorem {
    MfExpr a, b;
    std::string section;
    Range shifts, twists;
    ConvExpr conv;
};
struct QueryVerifySerre {
    MfExpr a, b;
    Range twists;
    ConvExpr conv;
};
struct QueryOracle {
    enum class What { Hilbert, StableHom, Ext };
    What what = What::Hilbert;
    MfExpr a, b;       // b unused for hilbert
    Range window;      // hilbert only
    int twist = 0;
    int shift = 1;     // ext only
};
struct QueryTranspose {
    std::string ring;
    Poly poly;
};
struct QueryDirected {
    std::vector<MfExpr> objects;
    std::string section;
    ConvExpr conv;
};

using Query = std::variant<QueryHom, QueryHomTable, QueryPush, QueryVerifyTheorem,
                           QueryVerifySerre, QueryOracle, QueryTranspose, QueryDirected>;

std::string query_str(const Query& q);

struct RingDecl {
    std::string name;
    std::vector<std::string> vars;
    std::vector<int> weights;
    Ring ring;
};

struct SectionDecl {
    std::string name;
    std::string ring; // base ring name
    std::string wvar;
    int weight = 1;
    Poly f; // over the base ring
    Poly g; // over the extended ring
};

struct MfDecl {
    std::string name;
    std::string ring;
    Poly f;
    std::vector<int> d, e;
    std::vector<std::vector<Poly>> phi, psi;
};

struct Program {
    Field field = Field::rationals();
    bool field_declared = false;
    std::vector<RingDecl> rings;
    std::vector<SectionDecl> sections;
    std::vector<MfDecl> mfs;
    std::vector<Query> queries;
    // Statement order for printing: (kind 0 ring / 1 section / 2 mf / 3 query, index).
    std::vector<std::pair<int, std::size_t>> order;
};

/// Parse with name resolution; polynomial coefficients are read in the
/// program's field (or the override). Syntax and unbound-name problems throw
/// ParseError; ill-formed rings throw ValidationError.
Program parse_program(const std::string& text, std::optional<Field> field_override = {});

/// Canonical text; parse(print(parse(t))) == parse(t).
std::string print_program(const Program& p);

/// Semantic validation: builds every section and factorization, checking the
/// factorization identities. Throws ValidationError.
struct Bindings {
    std::map<std::string, Ring> rings;
    std::map<std::string, SectionData> sections;
    std::map<std::string, MatrixFactorization> mfs;
};
Bindings validate_program(const Program& p);

/// Expression grammar: identifiers, integer or integer/integer literals,
/// + - * ^ and parentheses.
Poly parse_polynomial(const Ring& ring, const std::string& text);

} // namespace mfw
