#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace lcrit {

// A sign built from symbolic factors (each squaring to one) and an overall
// minus. The empty product is eps_+.
struct SymSign {
    bool negative = false;
    std::set<std::string> factors;

    static SymSign plus() { return {}; }
    static SymSign minus() { return {true, {}}; }
    static SymSign of(const std::string& symbol) { return {false, {symbol}}; }

    SymSign operator*(const SymSign& o) const;
    SymSign operator-() const { return {!negative, factors}; }
    std::string str() const;

    auto operator<=>(const SymSign&) const = default;
};

// Product of named characters with integer exponents, e.g. omega_pi xi^2.
struct CharExpr {
    std::map<std::string, int> exps;

    static CharExpr of(const std::string& name) { return {{{name, 1}}}; }
    CharExpr operator*(const CharExpr& o) const;
    CharExpr pow(int k) const;
    bool trivial() const { return exps.empty(); }
    bool composite() const;
    std::string str() const;

    auto operator<=>(const CharExpr&) const = default;
};

// A cuspidal representation of GL(rank), possibly twisted by characters.
struct PeriodObject {
    std::string base;
    int rank = 1;
    CharExpr twist;

    std::string str() const;
    auto operator<=>(const PeriodObject&) const = default;
};

enum class AtomKind { Period, ArchPeriod, GaussSum, LValue, RationalityUnit };

struct Atom {
    AtomKind kind = AtomKind::Period;
    PeriodObject object;           // Period
    SymSign sign;                  // Period, ArchPeriod (first)
    SymSign sign2;                 // ArchPeriod (second)
    std::string label1;            // ArchPeriod first weight, LValue point
    std::string label2;            // ArchPeriod second weight, LValue object
    CharExpr character;            // GaussSum
    std::set<std::string> fields;  // RationalityUnit

    static Atom period(PeriodObject obj, SymSign s);
    static Atom arch(std::string w1, std::string w2, SymSign s1, SymSign s2);
    static Atom gauss(CharExpr chi);
    static Atom lvalue(std::string point, std::string object);
    static Atom unit(std::set<std::string> fields);

    std::string str() const;
    auto operator<=>(const Atom&) const = default;
};

// Formal monomial in atoms, modulo the rationality fields in `modulo`.
struct PeriodExpr {
    std::map<Atom, int> terms;
    std::set<std::string> modulo;

    PeriodExpr& mul(const Atom& a, int e = 1);
    PeriodExpr operator*(const PeriodExpr& o) const;
    PeriodExpr inverse() const;
    PeriodExpr operator/(const PeriodExpr& o) const { return *this * o.inverse(); }
    int exponent(const Atom& a) const;
    std::string str() const;

    bool operator==(const PeriodExpr&) const = default;
};

struct CharacterInfo {
    SymSign signature;
    std::string field;
};

struct RuleSet {
    std::map<std::string, CharacterInfo> characters;      // binds eps_chi and Q(chi)
    std::map<std::string, std::string> object_fields;     // Q(Pi) per base object
    std::map<std::string, CharExpr> central_characters;   // omega per base object
};

struct TraceStep {
    std::string rule;     // "R1" twist, "R2" Gauss multiplicativity, "R4" GL(1), "R3" units
    std::string context;  // which equation was being normalized
    Atom before;
    int multiplicity = 1;  // exponent of `before` in the expression
    PeriodExpr produced;   // replacement for one copy of `before`
    int gauss_exponent = 0;  // R1 only: rank(rank-1)/2
    int rank = 0;            // R1 only
    std::string character;   // R1 only
};

struct Normalized {
    PeriodExpr expr;
    std::vector<TraceStep> trace;
};

// Rewrites to normal form under R1 > R2 > R4 > R3.
Normalized normalize(const PeriodExpr& e, const RuleSet& rules, const std::string& context = "");

CharExpr central_character(const PeriodObject& obj, const RuleSet& rules);

// Right-hand side of the Rankin-Selberg algebraicity statement for
// GL(n) x GL(n-1), with signs eps, eta and eps_m left symbolic.
PeriodExpr rankin_selberg_rhs(int n, const PeriodObject& Pi, const PeriodObject& Sigma, const SymSign& eps,
                              const SymSign& eta, const std::string& mu_label, const std::string& lam_label,
                              const RuleSet& rules);

struct Sym3Derivation {
    RuleSet rules;
    PeriodExpr gl3_input, gl2_input;    // before normalization
    PeriodExpr gl3_normal, gl2_normal;  // after
    PeriodExpr lhs;                     // L-value quotient
    PeriodExpr rhs;                     // normal form of the quotient
    std::vector<TraceStep> trace;
};

inline const char* kGl3Side = "GL3xGL2";
inline const char* kGl2Side = "GL2xGL1";

Sym3Derivation derive_sym3();
PeriodExpr derive_sym3_rhs();

// Total exponent of G(chi) produced by the trace steps of one context.
int produced_gauss_exponent(const std::vector<TraceStep>& trace, const std::string& context,
                            const std::string& chi);

}  // namespace lcrit
