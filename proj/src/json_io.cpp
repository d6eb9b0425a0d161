#include "lcrit/json_io.hpp"

#include <string>

#include "lcrit/error.hpp"

namespace lcrit::io {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    return j.at(key);
}

template <class T>
T get(const json& j, const char* key) {
    try {
        return field(j, key).get<T>();
    } catch (const json::exception& e) {
        throw InputError(std::string("field '") + key + "': " + e.what());
    }
}

template <class T>
T as(const json& j, const char* what) {
    try {
        return j.get<T>();
    } catch (const json::exception& e) {
        throw InputError(std::string(what) + ": " + e.what());
    }
}

const char* kind_name(AtomKind k) {
    switch (k) {
        case AtomKind::Period: return "Period";
        case AtomKind::ArchPeriod: return "ArchPeriod";
        case AtomKind::GaussSum: return "GaussSum";
        case AtomKind::LValue: return "LValue";
        case AtomKind::RationalityUnit: return "RationalityUnit";
    }
    return "?";
}

AtomKind kind_from(const std::string& s) {
    for (AtomKind k : {AtomKind::Period, AtomKind::ArchPeriod, AtomKind::GaussSum, AtomKind::LValue,
                       AtomKind::RationalityUnit})
        if (s == kind_name(k)) return k;
    throw InputError("unknown atom kind '" + s + "'");
}

json char_json(const CharExpr& c) {
    json j = json::object();
    for (const auto& [k, v] : c.exps) j[k] = v;
    return j;
}

CharExpr char_from(const json& j) {
    CharExpr c;
    for (const auto& [k, v] : as<std::map<std::string, int>>(j, "character")) c = c * CharExpr::of(k).pow(v);
    return c;
}

}  // namespace

json to_json(const FieldSignature& sig) {
    json j{{"r1", sig.r1()}, {"r2", sig.r2()}};
    if (!sig.galois_perms().empty()) j["galois_perms"] = sig.galois_perms();
    if (sig.cm()) j["cm"] = true;
    return j;
}

FieldSignature field_from_json(const json& j) {
    std::vector<std::vector<int>> perms;
    if (j.is_object() && j.contains("galois_perms"))
        perms = get<std::vector<std::vector<int>>>(j, "galois_perms");
    bool cm = j.is_object() && j.contains("cm") ? get<bool>(j, "cm") : false;
    return FieldSignature(get<int>(j, "r1"), get<int>(j, "r2"), std::move(perms), cm);
}

json to_json(const Weight& mu) {
    json comps = json::object();
    for (int e = 0; e < mu.sig().degree(); ++e) comps[std::to_string(e)] = mu.at(e);
    return {{"n", mu.n()}, {"components", comps}};
}

Weight weight_from_json(const json& j, const FieldSignature& sig) {
    const int n = get<int>(j, "n");
    if (j.contains("parallel")) return Weight::parallel(n, sig, get<Tuple>(j, "parallel"));
    const json& c = field(j, "components");
    if (!c.is_object()) throw InputError("'components' must be an object keyed by embedding id");
    std::vector<Tuple> comps(sig.degree());
    std::vector<bool> seen(sig.degree(), false);
    for (const auto& [key, val] : c.items()) {
        int e = -1;
        try {
            std::size_t pos = 0;
            e = std::stoi(key, &pos);
            if (pos != key.size()) e = -1;
        } catch (const std::exception&) {
        }
        if (e < 0 || e >= sig.degree()) throw InputError("bad embedding id '" + key + "'");
        comps[e] = as<Tuple>(val, "component");
        seen[e] = true;
    }
    for (int e = 0; e < sig.degree(); ++e)
        if (!seen[e]) throw InputError("missing component for embedding " + std::to_string(e));
    return Weight(n, sig, std::move(comps));
}

json to_json(const PurityReport& r) {
    const char* s = r.strongly_pure == Tri::Yes ? "yes" : r.strongly_pure == Tri::No ? "no" : "not-verified";
    json j{{"is_pure", r.is_pure}, {"strongly_pure", s}, {"sheaf_condition", r.sheaf_condition}};
    j["w"] = r.w ? json(*r.w) : json(nullptr);
    return j;
}

json to_json(const CriticalSet& s) {
    if (s.empty()) return {{"empty", true}};
    return {{"empty", false}, {"lo", *s.lo}, {"hi", *s.hi}};
}

CriticalSet critical_set_from_json(const json& j) {
    if (get<bool>(j, "empty")) return CriticalSet::none();
    return CriticalSet::interval(get<Int>(j, "lo"), get<Int>(j, "hi"));
}

json to_json(HalfInt h) { return std::to_string(h.twice) + "/2"; }

HalfInt halfint_from_json(const json& j) {
    const auto s = as<std::string>(j, "half-integer");
    const auto slash = s.find('/');
    if (slash == std::string::npos || s.substr(slash) != "/2") throw InputError("half-integer must read '<int>/2'");
    try {
        std::size_t pos = 0;
        const std::string num = s.substr(0, slash);
        const Int t = std::stoll(num, &pos);
        if (pos != num.size()) throw InputError("bad half-integer '" + s + "'");
        return HalfInt{t};
    } catch (const std::logic_error&) {
        throw InputError("bad half-integer '" + s + "'");
    }
}

json to_json(const ArchParameter& p) {
    json arr = json::array();
    for (const auto& s : p.summands) {
        if (auto* i = std::get_if<InducedSummand>(&s))
            arr.push_back({{"kind", "induced"}, {"l", i->l}, {"twist", to_json(i->twist)}});
        else if (auto* g = std::get_if<SignSummand>(&s))
            arr.push_back({{"kind", "sign"}, {"parity", g->parity}, {"twist", to_json(g->twist)}});
        else {
            const auto& c = std::get<CharSummand>(s);
            arr.push_back({{"kind", "char"}, {"p", to_json(c.p)}, {"q", to_json(c.q)}});
        }
    }
    return {{"place", p.kind == PlaceKind::Real ? "real" : "complex"}, {"summands", arr}};
}

ArchParameter parameter_from_json(const json& j) {
    const auto place = get<std::string>(j, "place");
    if (place != "real" && place != "complex") throw InputError("place must be 'real' or 'complex'");
    ArchParameter p{place == "real" ? PlaceKind::Real : PlaceKind::Complex, {}};
    for (const auto& s : field(j, "summands")) {
        const auto kind = get<std::string>(s, "kind");
        if (kind == "induced")
            p.summands.push_back(InducedSummand{get<Int>(s, "l"), halfint_from_json(field(s, "twist"))});
        else if (kind == "sign")
            p.summands.push_back(SignSummand{get<int>(s, "parity"), halfint_from_json(field(s, "twist"))});
        else if (kind == "char")
            p.summands.push_back(CharSummand{halfint_from_json(field(s, "p")), halfint_from_json(field(s, "q"))});
        else
            throw InputError("unknown summand kind '" + kind + "'");
    }
    return p;
}

json to_json(const DegreeReport& r) {
    return {{"b_real", r.b_real}, {"b_cplx", r.b_cplx}, {"t_real", r.t_real}, {"t_cplx", r.t_cplx},
            {"b_F", r.b_F},       {"t_F", r.t_F},       {"t_tilde_F", r.t_tilde_F}};
}

DegreeReport degrees_from_json(const json& j) {
    DegreeReport r;
    r.b_real = get<long long>(j, "b_real");
    r.b_cplx = get<long long>(j, "b_cplx");
    r.t_real = get<long long>(j, "t_real");
    r.t_cplx = get<long long>(j, "t_cplx");
    r.b_F = get<long long>(j, "b_F");
    r.t_F = get<long long>(j, "t_F");
    r.t_tilde_F = get<long long>(j, "t_tilde_F");
    return r;
}

json to_json(const SymSign& s) {
    return {{"negative", s.negative}, {"factors", std::vector<std::string>(s.factors.begin(), s.factors.end())}};
}

SymSign sign_from_json(const json& j) {
    SymSign s;
    s.negative = get<bool>(j, "negative");
    for (const auto& f : get<std::vector<std::string>>(j, "factors")) s = s * SymSign::of(f);
    return s;
}

json to_json(const Atom& a) {
    json j{{"kind", kind_name(a.kind)}};
    switch (a.kind) {
        case AtomKind::Period:
            j["object"] = {{"base", a.object.base}, {"rank", a.object.rank}, {"twist", char_json(a.object.twist)}};
            j["sign"] = to_json(a.sign);
            break;
        case AtomKind::ArchPeriod:
            j["weights"] = {a.label1, a.label2};
            j["signs"] = {to_json(a.sign), to_json(a.sign2)};
            break;
        case AtomKind::GaussSum:
            j["character"] = char_json(a.character);
            break;
        case AtomKind::LValue:
            j["point"] = a.label1;
            j["object"] = a.label2;
            break;
        case AtomKind::RationalityUnit:
            j["fields"] = std::vector<std::string>(a.fields.begin(), a.fields.end());
            break;
    }
    j["text"] = a.str();
    return j;
}

Atom atom_from_json(const json& j) {
    switch (kind_from(get<std::string>(j, "kind"))) {
        case AtomKind::Period: {
            const json& o = field(j, "object");
            PeriodObject obj{get<std::string>(o, "base"), get<int>(o, "rank"), char_from(field(o, "twist"))};
            return Atom::period(std::move(obj), sign_from_json(field(j, "sign")));
        }
        case AtomKind::ArchPeriod: {
            const auto w = get<std::vector<std::string>>(j, "weights");
            const json& s = field(j, "signs");
            if (w.size() != 2 || !s.is_array() || s.size() != 2) throw InputError("ArchPeriod needs two weights and two signs");
            return Atom::arch(w[0], w[1], sign_from_json(s[0]), sign_from_json(s[1]));
        }
        case AtomKind::GaussSum:
            return Atom::gauss(char_from(field(j, "character")));
        case AtomKind::LValue:
            return Atom::lvalue(get<std::string>(j, "point"), get<std::string>(j, "object"));
        case AtomKind::RationalityUnit: {
            const auto f = get<std::vector<std::string>>(j, "fields");
            return Atom::unit({f.begin(), f.end()});
        }
    }
    throw InputError("unreachable atom kind");
}

json to_json(const PeriodExpr& e) {
    json terms = json::array();
    for (const auto& [a, x] : e.terms) terms.push_back({{"atom", to_json(a)}, {"exponent", x}});
    return {{"terms", terms}, {"modulo", std::vector<std::string>(e.modulo.begin(), e.modulo.end())}};
}

PeriodExpr period_expr_from_json(const json& j) {
    PeriodExpr e;
    for (const auto& t : field(j, "terms")) e.mul(atom_from_json(field(t, "atom")), get<int>(t, "exponent"));
    for (const auto& m : get<std::vector<std::string>>(j, "modulo")) e.modulo.insert(m);
    return e;
}

json to_json(const TraceStep& t) {
    json j{{"rule", t.rule},
           {"context", t.context},
           {"before", to_json(t.before)},
           {"multiplicity", t.multiplicity},
           {"produced", to_json(t.produced)}};
    if (t.rule == "R1") {
        j["rank"] = t.rank;
        j["character"] = t.character;
        j["gauss_exponent"] = t.gauss_exponent;
    }
    return j;
}

json to_json(const HodgeData& h) {
    json pq = json::object();
    for (int e = 0; e < h.sig().degree(); ++e) pq[std::to_string(e)] = {h.p(e), h.q(e)};
    return {{"pq", pq}, {"w", h.weight()}};
}

HodgeData hodge_from_json(const json& j, const FieldSignature& sig) {
    const json& pq = field(j, "pq");
    std::vector<std::pair<Int, Int>> v(sig.degree());
    for (int e = 0; e < sig.degree(); ++e) {
        const auto key = std::to_string(e);
        if (!pq.contains(key)) throw InputError("missing Hodge pair for embedding " + key);
        const auto t = as<std::vector<Int>>(pq.at(key), "Hodge pair");
        if (t.size() != 2) throw InputError("Hodge pair must have two entries");
        v[e] = {t[0], t[1]};
    }
    return HodgeData(sig, std::move(v), get<Int>(j, "w"));
}

json to_json(const std::optional<CritType>& t) {
    if (!t) return nullptr;
    return {{"T", t->T}, {"A", t->A}, {"Abar", t->Abar}};
}

std::optional<CritType> crit_type_from_json(const json& j) {
    if (j.is_null()) return std::nullopt;
    return CritType{get<std::vector<int>>(j, "T"), get<std::vector<int>>(j, "A"), get<std::vector<int>>(j, "Abar")};
}

HeckeCharData hecke_from_json(const json& j, const FieldSignature& sig) {
    HeckeCharData chi{sig, get<std::vector<Int>>(j, "infinity_type"), {}};
    if (j.contains("finite_parities")) chi.finite_parities = get<std::vector<int>>(j, "finite_parities");
    return chi;
}

}  // namespace lcrit::io
