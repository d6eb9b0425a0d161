// lcrit: command line front end for the critical-value library.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "lcrit/error.hpp"
#include "lcrit/json_io.hpp"
#include "lcrit/symmetric.hpp"
#include "lcrit/verify.hpp"

using namespace lcrit;
using io::json;

namespace {

struct Options {
    std::string input;
    bool as_json = false;
    std::uint64_t seed = 1;
    int trials = 200;
    Int max_entry = 10;
    bool inject_fault = false;
};

constexpr int kOk = 0;
constexpr int kInputError = 2;
constexpr int kConsistency = 3;

json read_input(const Options& o) {
    if (o.input.empty()) throw InputError("this command needs --input FILE (or - for stdin)");
    try {
        if (o.input == "-") return json::parse(std::cin);
        std::ifstream f(o.input);
        if (!f) throw InputError("cannot open " + o.input);
        return json::parse(f);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    return j.at(key);
}

template <class T>
T need_as(const json& j, const char* key) {
    try {
        return need(j, key).get<T>();
    } catch (const json::exception&) {
        throw InputError(std::string("field '") + key + "' has the wrong type");
    }
}

FieldSignature field_of(const json& in) { return io::field_from_json(need(in, "field")); }

// Human-readable key/value table.
class Table {
public:
    Table& row(const std::string& k, const std::string& v) {
        rows_.emplace_back(k, v);
        width_ = std::max(width_, k.size());
        return *this;
    }
    void print(std::ostream& os) const {
        for (const auto& [k, v] : rows_) os << std::left << std::setw(static_cast<int>(width_) + 2) << k << v << "\n";
    }

private:
    std::vector<std::pair<std::string, std::string>> rows_;
    std::size_t width_ = 0;
};

std::string set_str(const CriticalSet& s) {
    if (s.empty()) return "empty";
    if (*s.lo == *s.hi) return "{" + std::to_string(*s.lo) + "}";
    return "[" + std::to_string(*s.lo) + ", " + std::to_string(*s.hi) + "]";
}

std::string tri_str(Tri t) { return t == Tri::Yes ? "yes" : t == Tri::No ? "no" : "not verified"; }

std::string signs_str(const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += x > 0 ? "+" : "-";
    return s.empty() ? "(no real places)" : s;
}

void emit(const Options& o, const json& payload, const Table& t) {
    if (o.as_json)
        std::cout << payload.dump(2) << "\n";
    else
        t.print(std::cout);
}

int cmd_critical_set(const Options& o) {
    const json in = read_input(o);
    const FieldSignature sig = field_of(in);
    const Weight mu = io::weight_from_json(need(in, "mu"), sig);
    const Weight lam = io::weight_from_json(need(in, "lambda"), sig);
    check_pair(mu, lam);

    const CriticalSet compat = compat_set(mu, lam);
    const CriticalSet scan = critical_set_scan(mu, lam);
    std::optional<CriticalSet> closed;
    if (!compat.empty()) closed = critical_set_closed_form(mu, lam);

    std::string verdict;
    int code = kOk;
    if (compat.empty()) {
        verdict = scan.empty() ? "no critical points" : "incompatible sheaves, critical points exist";
    } else if (compat == scan && *closed == scan) {
        verdict = "consistent";
    } else {
        verdict = "INCONSISTENT";
        code = kConsistency;
    }

    json out{{"compat", io::to_json(compat)}, {"scan", io::to_json(scan)}, {"verdict", verdict}};
    out["closed_form"] = closed ? io::to_json(*closed) : json(nullptr);
    Table t;
    t.row("compat set", set_str(compat))
        .row("closed form", closed ? set_str(*closed) : "n/a (sheaves not compatible)")
        .row("scan", set_str(scan));

    json places = json::array();
    const Int w = require_pure(mu), wp = require_pure(lam);
    for (const Place& p : sig.places()) {
        json pj{{"embedding", p.embedding}, {"kind", p.kind == PlaceKind::Real ? "real" : "complex"}};
        const std::string tag = "place " + std::to_string(p.embedding);
        if (p.kind == PlaceKind::Real) {
            const Int c = cuspidal_width(cuspidal_params_real(mu.at(p.embedding), w),
                                         cuspidal_params_real(lam.at(p.embedding), wp));
            pj["cuspidal_width"] = c;
            t.row(tag + " cuspidal width", std::to_string(c));
        } else {
            json shifts = json::array();
            std::string s;
            for (HalfInt h : rs_gamma_shifts_cplx(mu.at(p.embedding), lam.at(p.embedding), w, wp)) {
                shifts.push_back(io::to_json(h));
                s += (s.empty() ? "" : " ") + h.str();
            }
            pj["gamma_shifts"] = shifts;
            t.row(tag + " gamma shifts", s);
        }
        if (closed) {
            const MBounds b = m_pm_place(mu.at(p.embedding), lam.at(p.embedding), w, wp, p.kind);
            pj["m_minus"] = b.minus;
            pj["m_plus"] = b.plus;
            t.row(tag + " (m-, m+)", "(" + std::to_string(b.minus) + ", " + std::to_string(b.plus) + ")");
        }
        places.push_back(pj);
    }
    out["places"] = places;
    t.row("verdict", verdict);
    emit(o, out, t);
    return code;
}

int cmd_compat(const Options& o) {
    const json in = read_input(o);
    const FieldSignature sig = field_of(in);
    const Weight mu = io::weight_from_json(need(in, "mu"), sig);
    const PurityReport pm = purity(mu);
    json out{{"mu", io::to_json(pm)}};
    Table t;
    t.row("mu pure", pm.is_pure ? "yes (w = " + std::to_string(*pm.w) + ")" : "no")
        .row("mu strongly pure", tri_str(pm.strongly_pure))
        .row("mu sheaf condition", pm.sheaf_condition ? "yes" : "no");
    if (in.contains("lambda")) {
        const Weight lam = io::weight_from_json(in.at("lambda"), sig);
        check_pair(mu, lam);
        const PurityReport pl = purity(lam);
        const CriticalSet c = compat_set(mu, lam);
        out["lambda"] = io::to_json(pl);
        out["interlaces"] = interlaces(mu, lam);
        out["compat"] = io::to_json(c);
        t.row("lambda pure", pl.is_pure ? "yes (w = " + std::to_string(*pl.w) + ")" : "no")
            .row("dual(mu) interlaces lambda", interlaces(mu, lam) ? "yes" : "no")
            .row("compatible shifts", set_str(c));
    }
    emit(o, out, t);
    return kOk;
}

std::string param_str(const ArchParameter& p) { return io::to_json(p.canonical())["summands"].dump(); }

int cmd_sym(const Options& o) {
    const json in = read_input(o);
    const FieldSignature sig = field_of(in);
    const Weight mu = io::weight_from_json(need(in, "mu"), sig);
    const int r = in.contains("r") ? need_as<int>(in, "r") : 3;
    const Int w = require_pure(mu);
    const Weight s = sym_weight(mu, r);

    json out{{"r", r}, {"sym_weight", io::to_json(s)}, {"purity_weight", *purity_weight(s)}};
    Table t;
    t.row("r", std::to_string(r)).row("Sym^r weight", io::to_json(s)["components"].dump());
    t.row("purity weight", std::to_string(*purity_weight(s)));
    json params = json::array();
    for (const Place& p : sig.places()) {
        const Int a = mu.at(p.embedding)[0], b = mu.at(p.embedding)[1];
        const ArchParameter par =
            p.kind == PlaceKind::Real ? sym_parameter_real(a - b + 1, w, r) : sym_parameter_cplx(a, b, w, r);
        params.push_back(io::to_json(par));
        t.row("parameter at " + std::to_string(p.embedding), param_str(par));
    }
    out["parameters"] = params;

    const SymCompatReport rep = sym_compat_necessary(mu, r);
    out["compat_necessary"] = {{"per_embedding", rep.per_embedding}, {"all", rep.all}};
    out["compat_necessary"]["j"] = rep.j ? json(*rep.j) : json(nullptr);
    t.row("compat condition", rep.all ? "holds" : "fails (Sym^r x Sym^(r-1) cannot be compatible)");
    if (rep.j) t.row("suggested twist j", std::to_string(*rep.j));

    const CriticalSet c3 = sym3_critical_set(mu);
    const CriticalSet g3 = sym3_gamma_scan(mu);
    out["sym3_critical_set"] = io::to_json(c3);
    out["sym3_gamma_scan"] = io::to_json(g3);
    t.row("Sym^3 critical set", set_str(c3)).row("Sym^3 gamma scan", set_str(g3));
    emit(o, out, t);
    return c3 == g3 ? kOk : kConsistency;
}

int cmd_degrees(const Options& o) {
    const json in = read_input(o);
    const FieldSignature sig = field_of(in);
    const int n = need_as<int>(in, "n");
    if (n < 1) throw InputError("n must be positive");
    const DegreeReport d = degrees(n, sig);
    const bool ok = verify_degree_identity(n, sig);
    json out{{"degrees", io::to_json(d)},
             {"dim", dim_symmetric_space(n, sig)},
             {"identity_holds", ok},
             {"signature_count", permissible_signature_count(n, sig)}};
    Table t;
    t.row("b_F", std::to_string(d.b_F))
        .row("t_F", std::to_string(d.t_F))
        .row("t~_F", std::to_string(d.t_tilde_F))
        .row("dim", std::to_string(dim_symmetric_space(n, sig)))
        .row("identity", ok ? "holds" : "FAILS")
        .row("sign characters", std::to_string(permissible_signature_count(n, sig)));
    emit(o, out, t);
    return ok ? kOk : kConsistency;
}

int cmd_signs(const Options& o) {
    const json in = read_input(o);
    const FieldSignature sig = field_of(in);
    const int n = need_as<int>(in, "n");
    std::vector<int> parities(sig.r1(), 1);
    if (in.contains("central_parities")) parities = need_as<std::vector<int>>(in, "central_parities");
    if (static_cast<int>(parities.size()) != sig.r1()) throw InputError("need one central parity per real place");
    const Int w_mu = in.contains("w_mu") ? need_as<Int>(in, "w_mu") : 0;
    const Int w_lam = in.contains("w_lambda") ? need_as<Int>(in, "w_lambda") : 0;
    const SignPair sp = sign_recipe(n, parities, w_mu, w_lam);
    json out{{"eps", sp.eps}, {"eta", sp.eta}};
    Table t;
    t.row("eps", signs_str(sp.eps)).row("eta", signs_str(sp.eta));
    if (in.contains("m")) {
        const int em = epsilon_m(need_as<Int>(in, "m"));
        out["eps_m"] = em;
        t.row("eps_m", em > 0 ? "+" : "-");
    }
    if (in.contains("hecke")) {
        const HeckeCharData chi = io::hecke_from_json(in.at("hecke"), sig);
        out["hecke_weight"] = hecke_purity_weight(chi);
        t.row("Hecke purity weight", std::to_string(hecke_purity_weight(chi)));
        if (sig.r1() > 0) {
            const auto s = hecke_signature(chi);
            out["hecke_signature"] = s;
            t.row("Hecke signature", signs_str(s));
        }
    }
    emit(o, out, t);
    return kOk;
}

int cmd_motivic(const Options& o) {
    const json in = read_input(o);
    const FieldSignature sig = field_of(in);
    HodgeData h = in.contains("hodge") ? io::hodge_from_json(in.at("hodge"), sig)
                                       : tate_twist(hodge_from_gl2_weight(io::weight_from_json(need(in, "mu"), sig)),
                                                    in.contains("tate") ? need_as<Int>(in, "tate") : 1);
    std::vector<Int> j;
    if (in.contains("j")) {
        j = need_as<std::vector<Int>>(in, "j");
    } else {
        const Weight lam = io::weight_from_json(need(in, "lambda"), sig);
        if (lam.n() != 1) throw InputError("lambda must be a GL(1) weight");
        for (const auto& c : lam.comps()) j.push_back(c[0]);
    }
    const auto type = classify(h, j);
    json shifts = json::array();
    std::string s;
    for (const GammaShift& g : motivic_gamma(h)) {
        shifts.push_back({{"embedding", g.embedding}, {"shift", g.shift}});
        s += (s.empty() ? "" : " ") + std::to_string(g.embedding) + ":" + std::to_string(g.shift);
    }
    json out{{"hodge", io::to_json(h)}, {"type", io::to_json(type)}, {"gamma_shifts", shifts}};
    Table t;
    t.row("Hodge data", io::to_json(h)["pq"].dump()).row("weight", std::to_string(h.weight()));
    if (!type) {
        t.row("critical", "no");
    } else {
        auto ids = [](const std::vector<int>& v) {
            std::string r;
            for (int e : v) r += (r.empty() ? "" : ",") + std::to_string(e);
            return "{" + r + "}";
        };
        t.row("critical", "yes").row("T", ids(type->T)).row("A", ids(type->A)).row("Abar", ids(type->Abar));
    }
    t.row("Gamma_C shifts", s);
    emit(o, out, t);
    return kOk;
}

int cmd_period_derive(const Options& o) {
    const Sym3Derivation d = derive_sym3();
    json trace = json::array();
    for (const auto& step : d.trace) trace.push_back(io::to_json(step));
    json out{{"rhs", io::to_json(d.rhs)}, {"rhs_text", d.rhs.str()}, {"lhs_text", d.lhs.str()}, {"trace", trace}};
    if (o.as_json) {
        std::cout << out.dump(2) << "\n";
        return kOk;
    }
    std::cout << "trace:\n";
    for (const auto& step : d.trace) {
        std::cout << "  [" << step.context << "] " << step.rule << ": " << step.before.str();
        if (step.multiplicity != 1) std::cout << " (x" << step.multiplicity << ")";
        std::cout << "  ->  " << (step.produced.terms.empty() ? "1" : step.produced.str()) << "\n";
    }
    std::cout << "\n" << d.lhs.str() << "\n  ~  " << d.rhs.str() << "\n";
    return kOk;
}

int cmd_verify(const Options& o) {
    VerifyOptions vo{o.seed, o.trials, o.max_entry, o.inject_fault};
    const VerifyReport rep = run_verify(vo);
    if (o.as_json) {
        json checks = json::array();
        for (const auto& c : rep.checks)
            checks.push_back({{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}, {"messages", c.messages}});
        std::cout << json{{"seed", rep.seed},         {"trials", rep.trials}, {"checks", checks},
                          {"warnings", rep.warnings}, {"ok", rep.ok()}}
                         .dump(2)
                  << "\n";
    } else {
        for (const auto& w : rep.warnings) std::cerr << "warning: " << w << "\n";
        for (const auto& c : rep.checks) {
            std::cout << (c.ok() ? "ok    " : "FAIL  ") << c.name << " (" << c.cases << " cases";
            if (!c.ok()) std::cout << ", " << c.failures << " failures";
            std::cout << ")\n";
            for (const auto& m : c.messages) std::cout << "      " << m << "\n";
        }
        std::cout << (rep.ok() ? "all pass" : "FAILURES") << "\n";
    }
    return rep.ok() ? kOk : kConsistency;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Critical points and period bookkeeping for Rankin-Selberg L-functions"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--input", o.input, "problem description (JSON file, - for stdin)");
    app.add_flag("--json", o.as_json, "machine-readable output");
    app.add_option("--seed", o.seed, "random seed for verify");
    app.add_option("--trials", o.trials, "trials per randomized check");
    app.add_option("--max-entry", o.max_entry, "bound on random weight entries");
    app.add_flag("--inject-fault", o.inject_fault)->group("");

    struct Cmd {
        const char* name;
        const char* help;
        int (*run)(const Options&);
    };
    const Cmd cmds[] = {
        {"critical-set", "compatibility set, closed form and scan for a GL(n) x GL(n-1) pair", cmd_critical_set},
        {"compat", "purity and interlacing report", cmd_compat},
        {"sym", "symmetric power transfer and Sym^3 critical set", cmd_sym},
        {"degrees", "cuspidal range and dimension identity", cmd_degrees},
        {"signs", "sign recipe and Hecke character signature", cmd_signs},
        {"motivic", "Hodge data and critical type", cmd_motivic},
        {"period-derive", "derive the Sym^3 period relation", cmd_period_derive},
        {"verify", "run the randomized cross-check suite", cmd_verify},
    };
    int (*selected)(const Options&) = nullptr;
    for (const auto& c : cmds) app.add_subcommand(c.name, c.help)->callback([&selected, &c] { selected = c.run; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        return selected(o);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis not met: " << e.what() << "\n";
        return kInputError;
    } catch (const ConsistencyError& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kConsistency;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    }
}
