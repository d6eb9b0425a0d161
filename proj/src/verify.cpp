#include "lcrit/verify.hpp"

#include <algorithm>
#include <functional>

#include "lcrit/archimedean.hpp"
#include "lcrit/cohomology.hpp"
#include "lcrit/error.hpp"
#include "lcrit/json_io.hpp"
#include "lcrit/motivic.hpp"
#include "lcrit/periods.hpp"
#include "lcrit/random.hpp"
#include "lcrit/signs.hpp"
#include "lcrit/symmetric.hpp"

namespace lcrit {

bool VerifyReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok(); });
}

namespace {

constexpr std::size_t kMaxMessages = 5;

void fail(CheckResult& r, const std::string& msg) {
    ++r.failures;
    if (r.messages.size() < kMaxMessages) r.messages.push_back(msg);
}

std::string show(const Weight& w) { return io::to_json(w)["components"].dump(); }
std::string show(const FieldSignature& s) {
    return "(" + std::to_string(s.r1()) + "," + std::to_string(s.r2()) + ")";
}
std::string show(const CriticalSet& s) { return io::to_json(s).dump(); }

std::string place_name(const Place& p) {
    return (p.kind == PlaceKind::Real ? "real place " : "complex place ") + std::to_string(p.embedding);
}

// Runs body(trial) for each trial, turning stray library errors into failures.
void each_trial(CheckResult& r, int trials, const std::function<void(int)>& body) {
    for (int t = 0; t < trials; ++t) {
        ++r.cases;
        try {
            body(t);
        } catch (const std::exception& e) {
            fail(r, "trial " + std::to_string(t) + ": unexpected error: " + e.what());
        }
    }
}

MBounds closed_bounds(const Weight& mu, const Weight& lam, const Place& p, bool fault, bool first) {
    MBounds b = m_pm_place(mu.at(p.embedding), lam.at(p.embedding), *purity_weight(mu), *purity_weight(lam), p.kind);
    if (fault && first) b.plus += 1;
    return b;
}

CheckResult check_equivalence(const VerifyOptions& opt, Rng rng) {
    CheckResult r{"compat = closed form = scan", 0, 0, {}};
    each_trial(r, opt.trials, [&](int t) {
        const int n = static_cast<int>(uniform(rng, 2, 5));
        const FieldSignature sig = random_signature(rng, 2, 2);
        const auto [mu, lam] = random_compatible_pair(rng, n, sig, opt.max_entry);
        const CriticalSet compat = compat_set(mu, lam);
        const CriticalSet scan = critical_set_scan(mu, lam);
        CriticalSet closed;
        bool first = true;
        for (const Place& p : sig.places()) {
            const MBounds b = closed_bounds(mu, lam, p, opt.inject_fault, first);
            const CriticalSet local = CriticalSet::interval(b.minus, b.plus);
            closed = first ? local : closed.intersect(local);
            first = false;
        }
        if (closed != critical_set_closed_form(mu, lam) && !opt.inject_fault)
            fail(r, "trial " + std::to_string(t) + ": per-place intersection disagrees with closed form");
        if (!(compat == closed && closed == scan))
            fail(r, "trial " + std::to_string(t) + ": sig " + show(sig) + " mu " + show(mu) + " lambda " + show(lam) +
                        ": compat " + show(compat) + " closed " + show(closed) + " scan " + show(scan));
    });
    return r;
}

CheckResult check_complex_places(const VerifyOptions& opt, Rng rng) {
    CheckResult r{"complex m± vs inequality scan", 0, 0, {}};
    each_trial(r, opt.trials, [&](int t) {
        const int n = static_cast<int>(uniform(rng, 2, 5));
        const FieldSignature sig(0, static_cast<int>(uniform(rng, 1, 2)), {}, true);
        const auto [mu, lam] = random_compatible_pair(rng, n, sig, opt.max_entry);
        const Int w = *purity_weight(mu), wp = *purity_weight(lam);
        const Int R = scan_radius(mu, lam);
        bool first = true;
        for (const Place& p : sig.places()) {
            const MBounds b = closed_bounds(mu, lam, p, opt.inject_fault, first);
            first = false;
            std::vector<Int> members;
            for (Int m = -R; m <= R; ++m)
                if (is_critical_cplx(m, mu.at(p.embedding), lam.at(p.embedding), w, wp)) members.push_back(m);
            const CriticalSet scanned = CriticalSet::from_members(members);
            if (scanned != CriticalSet::interval(b.minus, b.plus))
                fail(r, "trial " + std::to_string(t) + ": " + place_name(p) + " mu " + show(mu) + " lambda " +
                            show(lam) + ": m-=" + std::to_string(b.minus) + " m+=" + std::to_string(b.plus) +
                            " but scan gives " + show(scanned));
        }
    });
    return r;
}

CheckResult check_degrees() {
    CheckResult r{"degree identity grid", 0, 0, {}};
    for (int n = 2; n <= 12; ++n)
        for (int r1 = 0; r1 <= 4; ++r1)
            for (int r2 = 0; r2 <= 4; ++r2) {
                if (r1 + r2 == 0) continue;
                ++r.cases;
                if (!verify_degree_identity(n, FieldSignature(r1, r2)))
                    fail(r, "n=" + std::to_string(n) + " sig (" + std::to_string(r1) + "," + std::to_string(r2) + ")");
            }
    return r;
}

// omega_{Sym^r pi_v}(-1) at a real place for pi_v of weight (a, b).
int sym_central_parity(Int a, Int b, int r) {
    const int base = gl2_real_central_parity(a, b);
    return ((r * (r + 1) / 2) % 2 == 0) ? 1 : base;
}

CheckResult check_sym_transfer(const VerifyOptions& opt, Rng rng) {
    CheckResult r{"symmetric power transfer", 0, 0, {}};
    each_trial(r, opt.trials, [&](int t) {
        const FieldSignature sig = random_signature(rng, 2, 2);
        const Weight mu = random_pure(rng, 2, sig, opt.max_entry);
        const Int w = *purity_weight(mu);
        for (int k = 1; k <= 5; ++k) {
            const Weight s = sym_weight(mu, k);  // constructor enforces dominance
            const auto ws = purity_weight(s);
            if (!ws || *ws != k * w) {
                fail(r, "trial " + std::to_string(t) + ": purity weight of Sym^" + std::to_string(k) + " " + show(mu));
                continue;
            }
            for (const Place& p : sig.places()) {
                const Int a = mu.at(p.embedding)[0], b = mu.at(p.embedding)[1];
                ArchParameter expect, got;
                if (p.kind == PlaceKind::Real) {
                    expect = sym_parameter_real(a - b + 1, w, k);
                    std::optional<int> eps;
                    if (k % 2 == 0) eps = jmu_sign_from_central(sym_central_parity(a, b, k), k + 1);
                    got = jmu_parameter(s, p, eps);
                } else {
                    expect = sym_parameter_cplx(a, b, w, k);
                    got = jmu_parameter(s, p);
                }
                if (!expect.same_multiset(got))
                    fail(r, "trial " + std::to_string(t) + ": Sym^" + std::to_string(k) + " at " + place_name(p) +
                                " mu " + show(mu));
            }
        }
    });
    return r;
}

CheckResult check_sym3(Rng rng) {
    CheckResult r{"Sym³ critical set (parallel)", 0, 0, {}};
    for (Int a = -6; a <= 6; ++a)
        for (Int b = -6; b <= a; ++b) {
            ++r.cases;
            FieldSignature sig(static_cast<int>(uniform(rng, 1, 2)), static_cast<int>(uniform(rng, 0, 2)));
            const Weight mu = Weight::parallel(2, sig, {a, b});
            try {
                const CriticalSet got = sym3_critical_set(mu);
                const CriticalSet expect = CriticalSet::interval(-2 * a - b, -a - 2 * b);
                const CriticalSet scan = sym3_gamma_scan(mu);
                if (got != expect || got != scan)
                    fail(r, "(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ") sig " + show(sig) + ": got " +
                                show(got) + " scan " + show(scan));
            } catch (const std::exception& e) {
                fail(r, std::string("unexpected error: ") + e.what());
            }
        }
    return r;
}

CheckResult check_factorization(const VerifyOptions& opt, Rng rng) {
    CheckResult r{"Sym² ⊗ Sym¹ factorization", 0, 0, {}};
    each_trial(r, opt.trials, [&](int t) {
        Int a = uniform(rng, -opt.max_entry, opt.max_entry);
        Int b = uniform(rng, -opt.max_entry, opt.max_entry);
        if (a < b) std::swap(a, b);
        const Int w = uniform(rng, -opt.max_entry, opt.max_entry);
        if (!factorization_check_cplx(a, b, w, 2))
            fail(r, "trial " + std::to_string(t) + ": complex (a,b,w)=(" + std::to_string(a) + "," + std::to_string(b) +
                        "," + std::to_string(w) + ")");
        if (!factorization_check_real(a, b))
            fail(r, "trial " + std::to_string(t) + ": real (a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")");
    });
    return r;
}

CheckResult check_motivic(const VerifyOptions& opt, Rng rng) {
    CheckResult r{"compatible GL2×GL1 data has type A empty", 0, 0, {}};
    each_trial(r, opt.trials, [&](int t) {
        const FieldSignature sig = random_signature(rng, 2, 2);
        const auto [mu, lam] = random_compatible_pair(rng, 2, sig, opt.max_entry);
        // lambda + m is compatible with mu for m in the compatibility set,
        // so the twisted motive must be critical there.
        const auto members = compat_set(mu, lam).members();
        const Int m = members[uniform(rng, 0, static_cast<Int>(members.size()) - 1)];
        std::vector<Int> j;
        for (const auto& c : lam.comps()) j.push_back(c[0] + m);
        const auto type = classify(tate_twist(hodge_from_gl2_weight(mu), 1), j);
        const std::string tag = "trial " + std::to_string(t) + ": mu " + show(mu) + " lambda+m " + show(twist(lam, m));
        if (!type)
            fail(r, tag + " is not critical");
        else if (!type->A.empty())
            fail(r, tag + " classified as type A");
    });
    return r;
}

CheckResult check_signs(const VerifyOptions& opt, Rng rng) {
    CheckResult r{"sign laws", 0, 0, {}};
    ++r.cases;
    const SignPair trivial = sign_recipe(3, {1}, 0, 0);
    if (trivial.eps != std::vector<int>{1} || trivial.eta != std::vector<int>{-1})
        fail(r, "n=3 with trivial data is not (+,-)");
    each_trial(r, opt.trials, [&](int t) {
        const int n = static_cast<int>(uniform(rng, 2, 8));
        const int r1 = static_cast<int>(uniform(rng, 1, 4));
        std::vector<int> parities;
        for (int v = 0; v < r1; ++v) parities.push_back(uniform(rng, 0, 1) ? 1 : -1);
        const Int w_mu = 2 * uniform(rng, -5, 5), w_lam = 2 * uniform(rng, -5, 5);
        const SignPair sp = sign_recipe(n, parities, w_mu, w_lam);
        const int sign_n = (n % 2 == 0) ? 1 : -1;
        for (int v = 0; v < r1; ++v)
            if (sp.eps[v] != sign_n * sp.eta[v])
                fail(r, "trial " + std::to_string(t) + ": n=" + std::to_string(n) + " place " + std::to_string(v));
    });
    return r;
}

PeriodExpr expected_sym3_monomial() {
    const SymSign em = SymSign::of("ε_m"), ex = SymSign::of("ε_ξ");
    PeriodExpr e;
    e.mul(Atom::period({"Sym²(π)", 3, {}}, SymSign::plus()));
    e.mul(Atom::period({"π", 2, {}}, -(em * ex)));
    e.mul(Atom::period({"π", 2, {}}, em * ex), -1);
    e.mul(Atom::gauss(CharExpr::of("ξ")), 2);
    e.mul(Atom::arch("Sym²(μ)", "μ+m", SymSign::plus(), SymSign::minus()));
    e.mul(Atom::arch("μ+m", "det(μ)", ex, ex), -1);
    return e;
}

CheckResult check_periods() {
    CheckResult r{"period derivation", 0, 0, {}};
    ++r.cases;
    const Sym3Derivation d = derive_sym3();
    if (d.rhs.terms != expected_sym3_monomial().terms) fail(r, "normal form is " + d.rhs.str());
    if (d.rhs.exponent(Atom::gauss(CharExpr::of("ω_π"))) != 0) fail(r, "G(ω_π) survives");
    for (const auto* side : {kGl3Side, kGl2Side}) {
        const int expect = std::string(side) == kGl3Side ? 3 : 1;
        int r1 = 0;
        for (const auto& s : d.trace)
            if (s.context == side && s.rule == "R1") ++r1;
        if (r1 != 1) fail(r, std::string(side) + ": twist rule applied " + std::to_string(r1) + " times");
        const int g = produced_gauss_exponent(d.trace, side, "ξ");
        if (g != expect)
            fail(r, std::string(side) + ": G(ξ) exponent " + std::to_string(g) + ", expected " + std::to_string(expect));
    }
    return r;
}

CheckResult check_weight_invariants(const VerifyOptions& opt, Rng rng) {
    CheckResult r{"weight invariants", 0, 0, {}};
    each_trial(r, opt.trials, [&](int t) {
        const int n = static_cast<int>(uniform(rng, 1, 6));
        const FieldSignature sig = random_signature(rng, 2, 2);
        const Weight mu = random_strongly_pure(rng, n, sig, opt.max_entry);
        const Int w = *purity_weight(mu);
        const std::string tag = "trial " + std::to_string(t) + ": mu " + show(mu) + " sig " + show(sig);
        const PurityReport rep = purity(mu);
        if (!rep.is_pure || rep.strongly_pure == Tri::No) fail(r, tag + ": generated weight not strongly pure");
        if (!sheaf_condition(mu)) fail(r, tag + ": sheaf condition fails");
        const auto wd = purity_weight(dual(mu));
        if (!wd || *wd != -w) fail(r, tag + ": dual has wrong purity weight");
        if (!(dual(dual(mu)) == mu)) fail(r, tag + ": dual is not an involution");
        const Int m = uniform(rng, -5, 5);
        const auto wt = purity_weight(twist(mu, m));
        if (!wt || *wt != w + 2 * m) fail(r, tag + ": twist shifts the purity weight wrongly");
        std::vector<int> conj(sig.degree());
        for (int e = 0; e < sig.degree(); ++e) conj[e] = sig.conjugate(e);
        const auto wc = purity_weight(relabel(mu, conj));
        if (!wc || *wc != w) fail(r, tag + ": complex conjugation breaks purity");
    });
    return r;
}

}  // namespace

CriticalSet sym3_gamma_scan(const Weight& mu) {
    if (mu.n() != 2) throw InputError("expected a GL(2) weight");
    const Int w = require_pure(mu);
    // Gamma shifts (doubled) for L(s, Sym³) and for the dual at 1 - s.
    std::vector<Int> up, down;
    for (const Place& p : mu.sig().places()) {
        const Int a = mu.at(p.embedding)[0], b = mu.at(p.embedding)[1];
        if (p.kind == PlaceKind::Real) {
            const Int l = a - b + 1;
            for (Int k : {l, 3 * l}) {
                up.push_back(3 * w + k);
                down.push_back(-3 * w + k);
            }
        } else {
            for (Int k = 0; k <= 3; ++k) {
                const Int p2 = 2 * ((3 - k) * a + k * b) + 3 - 2 * k;  // 2p
                const Int q2 = 6 * w - p2;
                up.push_back(std::max(p2, q2));
                down.push_back(-std::min(p2, q2));
            }
        }
    }
    // s = 1/2 + m is regular iff 1/2 + m + shift is not a non-positive integer.
    auto regular = [](Int twice) { return twice % 2 != 0 || twice > 0; };
    Int R = 0;
    for (Int x : up) R = std::max(R, std::llabs(x));
    for (Int x : down) R = std::max(R, std::llabs(x));
    R = R / 2 + 2;
    std::vector<Int> members;
    for (Int m = -R; m <= R; ++m) {
        bool ok = true;
        for (Int s : up) ok = ok && regular(1 + 2 * m + s);
        for (Int s : down) ok = ok && regular(1 - 2 * m + s);
        if (ok) members.push_back(m);
    }
    return CriticalSet::from_members(members);
}

VerifyReport run_verify(const VerifyOptions& opt) {
    if (opt.trials < 0) throw InputError("trials must be non-negative");
    if (opt.max_entry < 1) throw InputError("max-entry must be positive");
    VerifyReport rep;
    rep.seed = opt.seed;
    rep.trials = opt.trials;
    if (opt.trials == 0) rep.warnings.push_back("trials = 0: randomized checks are vacuous");
    auto rng = [&](std::uint64_t k) { return Rng(opt.seed * 1000003ULL + k); };
    rep.checks.push_back(check_equivalence(opt, rng(1)));
    rep.checks.push_back(check_complex_places(opt, rng(2)));
    rep.checks.push_back(check_degrees());
    rep.checks.push_back(check_sym_transfer(opt, rng(4)));
    rep.checks.push_back(check_sym3(rng(5)));
    rep.checks.push_back(check_factorization(opt, rng(6)));
    rep.checks.push_back(check_motivic(opt, rng(7)));
    rep.checks.push_back(check_signs(opt, rng(8)));
    rep.checks.push_back(check_periods());
    rep.checks.push_back(check_weight_invariants(opt, rng(10)));
    return rep;
}

}  // namespace lcrit
