#include "lcrit/periods.hpp"

#include <sstream>

#include "lcrit/error.hpp"

namespace lcrit {

SymSign SymSign::operator*(const SymSign& o) const {
    SymSign out{negative != o.negative, factors};
    for (const auto& f : o.factors) {
        if (!out.factors.erase(f)) out.factors.insert(f);
    }
    return out;
}

std::string SymSign::str() const {
    if (factors.empty()) return negative ? "-" : "+";
    std::string s = negative ? "-" : "";
    bool first = true;
    for (const auto& f : factors) {
        if (!first) s += "·";
        s += f;
        first = false;
    }
    return s;
}

CharExpr CharExpr::operator*(const CharExpr& o) const {
    CharExpr out = *this;
    for (const auto& [name, e] : o.exps) {
        int& x = out.exps[name];
        x += e;
        if (x == 0) out.exps.erase(name);
    }
    return out;
}

CharExpr CharExpr::pow(int k) const {
    CharExpr out;
    if (k == 0) return out;
    for (const auto& [name, e] : exps) out.exps[name] = e * k;
    return out;
}

bool CharExpr::composite() const { return exps.size() > 1 || (exps.size() == 1 && exps.begin()->second != 1); }

std::string CharExpr::str() const {
    if (exps.empty()) return "1";
    std::string s;
    bool first = true;
    for (const auto& [name, e] : exps) {
        if (!first) s += "·";
        s += name;
        if (e != 1) s += "^" + std::to_string(e);
        first = false;
    }
    return s;
}

std::string PeriodObject::str() const { return twist.trivial() ? base : base + "⊗" + twist.str(); }

Atom Atom::period(PeriodObject obj, SymSign s) {
    Atom a;
    a.kind = AtomKind::Period;
    a.object = std::move(obj);
    a.sign = std::move(s);
    return a;
}

Atom Atom::arch(std::string w1, std::string w2, SymSign s1, SymSign s2) {
    Atom a;
    a.kind = AtomKind::ArchPeriod;
    a.label1 = std::move(w1);
    a.label2 = std::move(w2);
    a.sign = std::move(s1);
    a.sign2 = std::move(s2);
    return a;
}

Atom Atom::gauss(CharExpr chi) {
    Atom a;
    a.kind = AtomKind::GaussSum;
    a.character = std::move(chi);
    return a;
}

Atom Atom::lvalue(std::string point, std::string object) {
    Atom a;
    a.kind = AtomKind::LValue;
    a.label1 = std::move(point);
    a.label2 = std::move(object);
    return a;
}

Atom Atom::unit(std::set<std::string> fields) {
    Atom a;
    a.kind = AtomKind::RationalityUnit;
    a.fields = std::move(fields);
    return a;
}

std::string Atom::str() const {
    switch (kind) {
        case AtomKind::Period:
            return "p^{" + sign.str() + "}(" + object.str() + ")";
        case AtomKind::ArchPeriod:
            return "p_inf^{" + sign.str() + "," + sign2.str() + "}(" + label1 + ", " + label2 + ")";
        case AtomKind::GaussSum:
            return "G(" + character.str() + ")";
        case AtomKind::LValue:
            return "L(" + label1 + ", " + label2 + ")";
        case AtomKind::RationalityUnit: {
            std::string s = "unit[";
            bool first = true;
            for (const auto& f : fields) {
                if (!first) s += ",";
                s += f;
                first = false;
            }
            return s + "]";
        }
    }
    return "?";
}

PeriodExpr& PeriodExpr::mul(const Atom& a, int e) {
    if (e == 0) return *this;
    int& x = terms[a];
    x += e;
    if (x == 0) terms.erase(a);
    return *this;
}

PeriodExpr PeriodExpr::operator*(const PeriodExpr& o) const {
    PeriodExpr out = *this;
    for (const auto& [a, e] : o.terms) out.mul(a, e);
    out.modulo.insert(o.modulo.begin(), o.modulo.end());
    return out;
}

PeriodExpr PeriodExpr::inverse() const {
    PeriodExpr out;
    out.modulo = modulo;
    for (const auto& [a, e] : terms) out.terms[a] = -e;
    return out;
}

int PeriodExpr::exponent(const Atom& a) const {
    auto it = terms.find(a);
    return it == terms.end() ? 0 : it->second;
}

std::string PeriodExpr::str() const {
    std::ostringstream os;
    if (terms.empty()) os << "1";
    bool first = true;
    for (const auto& [a, e] : terms) {
        if (!first) os << " · ";
        os << a.str();
        if (e != 1) os << "^" << e;
        first = false;
    }
    if (!modulo.empty()) {
        os << "   (mod ";
        bool f = true;
        for (const auto& m : modulo) {
            if (!f) os << ", ";
            os << m;
            f = false;
        }
        os << ")";
    }
    return os.str();
}

namespace {

const CharacterInfo& bound_character(const RuleSet& rules, const std::string& name) {
    auto it = rules.characters.find(name);
    if (it == rules.characters.end()) throw InputError("unbound character label '" + name + "'");
    return it->second;
}

std::string object_field(const RuleSet& rules, const std::string& base) {
    auto it = rules.object_fields.find(base);
    return it == rules.object_fields.end() ? "Q(" + base + ")" : it->second;
}

// One rewrite step; returns false when `e` is in normal form.
bool step(PeriodExpr& e, const RuleSet& rules, const std::string& context, std::vector<TraceStep>& trace) {
    // R1: Period(Pi ⊗ xi, s) -> G(xi)^{n(n-1)/2} Period(Pi, s·eps_xi)
    for (const auto& [atom, k] : e.terms) {
        if (atom.kind != AtomKind::Period || atom.object.twist.trivial()) continue;
        const auto& [chi, ex] = *atom.object.twist.exps.begin();
        if (ex < 0) throw InputError("negative twist exponent in " + atom.str());
        const CharacterInfo& info = bound_character(rules, chi);
        PeriodObject rest = atom.object;
        rest.twist = rest.twist * CharExpr::of(chi).pow(-1);
        const int n = atom.object.rank;
        TraceStep t{"R1", context, atom, k, {}, n * (n - 1) / 2, n, chi};
        t.produced.mul(Atom::period(rest, atom.sign * info.signature));
        t.produced.mul(Atom::gauss(CharExpr::of(chi)), t.gauss_exponent);
        const Atom before = atom;
        const int mult = k;
        e.terms.erase(before);
        for (const auto& [a, x] : t.produced.terms) e.mul(a, x * mult);
        trace.push_back(std::move(t));
        return true;
    }
    // R2: G(prod chi_i^{e_i}) -> prod G(chi_i)^{e_i}, modulo the fields of the chi_i
    for (const auto& [atom, k] : e.terms) {
        if (atom.kind != AtomKind::GaussSum) continue;
        if (!atom.character.composite() && !atom.character.trivial()) continue;
        TraceStep t{"R2", context, atom, k, {}, 0, 0, ""};
        for (const auto& [chi, ex] : atom.character.exps) {
            const CharacterInfo& info = bound_character(rules, chi);
            t.produced.mul(Atom::gauss(CharExpr::of(chi)), ex);
            t.produced.modulo.insert(info.field);
        }
        const Atom before = atom;
        const int mult = k;
        e.terms.erase(before);
        for (const auto& [a, x] : t.produced.terms) e.mul(a, x * mult);
        e.modulo.insert(t.produced.modulo.begin(), t.produced.modulo.end());
        trace.push_back(std::move(t));
        return true;
    }
    // R4: periods of GL(1) objects are rational
    for (const auto& [atom, k] : e.terms) {
        if (atom.kind != AtomKind::Period || atom.object.rank != 1 || !atom.object.twist.trivial()) continue;
        TraceStep t{"R4", context, atom, k, {}, 0, 0, ""};
        t.produced.mul(Atom::unit({object_field(rules, atom.object.base)}));
        const Atom before = atom;
        const int mult = k;
        e.terms.erase(before);
        for (const auto& [a, x] : t.produced.terms) e.mul(a, x * mult);
        trace.push_back(std::move(t));
        return true;
    }
    // R3: rational units are absorbed into the ambient field
    for (const auto& [atom, k] : e.terms) {
        if (atom.kind != AtomKind::RationalityUnit) continue;
        TraceStep t{"R3", context, atom, k, {}, 0, 0, ""};
        t.produced.modulo = atom.fields;
        e.modulo.insert(atom.fields.begin(), atom.fields.end());
        e.terms.erase(atom);
        trace.push_back(std::move(t));
        return true;
    }
    return false;
}

}  // namespace

Normalized normalize(const PeriodExpr& input, const RuleSet& rules, const std::string& context) {
    Normalized out{input, {}};
    // Each step lowers (total twist degree, composite Gauss sums, GL(1)
    // periods, units) lexicographically, so this terminates.
    while (step(out.expr, rules, context, out.trace)) {
    }
    return out;
}

CharExpr central_character(const PeriodObject& obj, const RuleSet& rules) {
    auto it = rules.central_characters.find(obj.base);
    if (it == rules.central_characters.end())
        throw InputError("no central character recorded for '" + obj.base + "'");
    return it->second * obj.twist.pow(obj.rank);
}

PeriodExpr rankin_selberg_rhs(int n, const PeriodObject& Pi, const PeriodObject& Sigma, const SymSign& eps,
                              const SymSign& eta, const std::string& mu_label, const std::string& lam_label,
                              const RuleSet& rules) {
    if (Pi.rank != n || Sigma.rank != n - 1) throw InputError("rankin_selberg_rhs: rank mismatch");
    const SymSign em = SymSign::of("ε_m");
    PeriodExpr e;
    if (n % 2 == 0) {
        e.mul(Atom::period(Pi, em * eps));
        e.mul(Atom::period(Sigma, eta));
        e.mul(Atom::arch(mu_label + "+m", lam_label, eps, eta));
    } else {
        e.mul(Atom::period(Pi, eps));
        e.mul(Atom::period(Sigma, em * eta));
        e.mul(Atom::arch(mu_label, lam_label + "+m", eps, eta));
    }
    e.mul(Atom::gauss(central_character(Sigma, rules)));
    return e;
}

namespace {

RuleSet sym3_rules() {
    RuleSet r;
    r.characters["ξ"] = {SymSign::of("ε_ξ"), "Q(ξ)"};
    r.characters["ω_π"] = {SymSign::of("ε_ω_π"), "Q(π)"};
    r.object_fields["π"] = "Q(π)";
    r.object_fields["Sym²(π)"] = "Q(π)";
    r.object_fields["ω_π"] = "Q(π)";
    r.central_characters["π"] = CharExpr::of("ω_π");
    r.central_characters["ω_π"] = CharExpr::of("ω_π");
    r.central_characters["Sym²(π)"] = CharExpr::of("ω_π").pow(3);
    return r;
}

}  // namespace

Sym3Derivation derive_sym3() {
    Sym3Derivation d;
    d.rules = sym3_rules();
    const CharExpr xi = CharExpr::of("ξ");
    const SymSign eps_xi = SymSign::of("ε_ξ");

    // Sym²(π) x (π⊗ξ): n = 3, eps = eps_+ since omega_{pi_v}(-1)^3 (-1)^w = 1,
    // and eta = -eps.
    const PeriodObject sym2{"Sym²(π)", 3, {}};
    const PeriodObject pi_xi{"π", 2, xi};
    d.gl3_input = rankin_selberg_rhs(3, sym2, pi_xi, SymSign::plus(), SymSign::minus(), "Sym²(μ)", "μ", d.rules);

    // π x (ω_π ξ): n = 2, eps = eta = eps_xi.
    const PeriodObject pi{"π", 2, {}};
    const PeriodObject omega_xi{"ω_π", 1, xi};
    d.gl2_input = rankin_selberg_rhs(2, pi, omega_xi, eps_xi, eps_xi, "μ", "det(μ)", d.rules);

    Normalized a = normalize(d.gl3_input, d.rules, kGl3Side);
    Normalized b = normalize(d.gl2_input, d.rules, kGl2Side);
    d.gl3_normal = a.expr;
    d.gl2_normal = b.expr;
    d.trace = a.trace;
    d.trace.insert(d.trace.end(), b.trace.begin(), b.trace.end());

    Normalized q = normalize(d.gl3_normal / d.gl2_normal, d.rules, "quotient");
    d.rhs = q.expr;
    d.trace.insert(d.trace.end(), q.trace.begin(), q.trace.end());

    d.lhs.mul(Atom::lvalue("1/2+m", "Sym²(π)×π⊗ξ"));
    d.lhs.mul(Atom::lvalue("1/2+m", "π⊗ω_π·ξ"), -1);
    return d;
}

PeriodExpr derive_sym3_rhs() { return derive_sym3().rhs; }

int produced_gauss_exponent(const std::vector<TraceStep>& trace, const std::string& context,
                            const std::string& chi) {
    int total = 0;
    const Atom g = Atom::gauss(CharExpr::of(chi));
    for (const auto& t : trace)
        if (t.context == context) total += t.multiplicity * t.produced.exponent(g);
    return total;
}

}  // namespace lcrit
