#include "lcrit/archimedean.hpp"

#include <algorithm>
#include <cstdlib>

#include "lcrit/error.hpp"

namespace lcrit {

std::string HalfInt::str() const {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

ArchParameter ArchParameter::canonical() const {
    ArchParameter out = *this;
    std::sort(out.summands.begin(), out.summands.end());
    return out;
}

bool ArchParameter::same_multiset(const ArchParameter& o) const {
    return kind == o.kind && canonical().summands == o.canonical().summands;
}

ArchParameter ArchParameter::operator+(const ArchParameter& o) const {
    if (kind != o.kind) throw InputError("direct sum of parameters at different place kinds");
    ArchParameter out = *this;
    out.summands.insert(out.summands.end(), o.summands.begin(), o.summands.end());
    return out;
}

namespace {

void check_local_purity(const Tuple& a, const Tuple& b, Int w) {
    const std::size_t n = a.size();
    if (b.size() != n) throw InputError("conjugate components have different lengths");
    for (std::size_t i = 0; i < n; ++i)
        if (b[i] + a[n - 1 - i] != w) throw InputError("local purity fails for weight " + std::to_string(w));
}

}  // namespace

Tuple cuspidal_params_real(const Tuple& mu, Int w) {
    check_local_purity(mu, mu, w);
    const Int n = static_cast<Int>(mu.size());
    Tuple l(n);
    for (Int i = 1; i <= n; ++i) l[i - 1] = 2 * mu[i - 1] + n - 2 * i + 1 - w;
    return l;
}

CplxParams cuspidal_params_cplx(const Tuple& mu, const Tuple& mu_bar, Int w) {
    check_local_purity(mu, mu_bar, w);
    const Int n = static_cast<Int>(mu.size());
    CplxParams out;
    for (Int i = 1; i <= n; ++i) {
        HalfInt a{2 * mu[i - 1] + n + 1 - 2 * i};
        out.a.push_back(a);
        out.b.push_back(HalfInt::of(w) - a);
    }
    return out;
}

ArchParameter jmu_parameter_real(const Tuple& mu, Int w, std::optional<int> eps) {
    const Tuple l = cuspidal_params_real(mu, w);
    const std::size_t n = mu.size();
    ArchParameter out{PlaceKind::Real, {}};
    const HalfInt t{w};
    for (std::size_t i = 0; i < n / 2; ++i) out.summands.push_back(InducedSummand{l[i], t});
    if (n % 2 == 1) {
        if (!eps) throw InputError("a sign is required at a real place when n is odd");
        if (*eps != 1 && *eps != -1) throw InputError("sign must be +1 or -1");
        out.summands.push_back(SignSummand{*eps, t});
    }
    return out;
}

ArchParameter jmu_parameter_cplx(const Tuple& mu, const Tuple& mu_bar, Int w) {
    const CplxParams c = cuspidal_params_cplx(mu, mu_bar, w);
    ArchParameter out{PlaceKind::Complex, {}};
    for (std::size_t i = 0; i < c.a.size(); ++i) out.summands.push_back(CharSummand{c.a[i], c.b[i]});
    return out;
}

ArchParameter jmu_parameter(const Weight& mu, const Place& v, std::optional<int> eps) {
    const Int w = require_pure(mu);
    if (v.kind == PlaceKind::Real) return jmu_parameter_real(mu.at(v.embedding), w, eps);
    return jmu_parameter_cplx(mu.at(v.embedding), mu.at(v.conjugate), w);
}

Int cuspidal_width(const Tuple& l, const Tuple& lp) {
    if (l.empty() || lp.empty()) throw InputError("cuspidal width of an empty tuple");
    Int c = std::llabs(l[0] - lp[0]);
    for (Int x : l)
        for (Int y : lp) c = std::min(c, std::llabs(x - y));
    return c;
}

bool is_critical_real(Int m, const Tuple& l, const Tuple& lp, Int w, Int wp) {
    const Int c = cuspidal_width(l, lp);
    const Int s = w + wp + 2 * m;
    return -(c - 1) <= s && s <= c - 1;
}

namespace {

// |2 mu_i + 2 lam_j + 2n - 2i - 2j + 1 - (w + w')| for 1-indexed i, j.
Int gamma_gap(const Tuple& mu, const Tuple& lam, Int i, Int j, Int S) {
    const Int n = static_cast<Int>(mu.size());
    return std::llabs(2 * mu[i - 1] + 2 * lam[j - 1] + 2 * n - 2 * i - 2 * j + 1 - S);
}

}  // namespace

std::vector<HalfInt> rs_gamma_shifts_cplx(const Tuple& mu, const Tuple& lam, Int w, Int wp) {
    const Int n = static_cast<Int>(mu.size());
    if (static_cast<Int>(lam.size()) != n - 1) throw InputError("rs_gamma_shifts_cplx: rank mismatch");
    const Int S = w + wp;
    std::vector<HalfInt> out;
    for (Int i = 1; i <= n; ++i)
        for (Int j = 1; j <= n - 1; ++j) out.push_back(HalfInt{S + gamma_gap(mu, lam, i, j, S)});
    return out;
}

bool is_critical_cplx(Int m, const Tuple& mu, const Tuple& lam, Int w, Int wp) {
    const Int n = static_cast<Int>(mu.size());
    if (static_cast<Int>(lam.size()) != n - 1) throw InputError("is_critical_cplx: rank mismatch");
    const Int S = w + wp;
    for (Int i = 1; i <= n; ++i)
        for (Int j = 1; j <= n - 1; ++j) {
            const Int X = gamma_gap(mu, lam, i, j, S);
            // m + (1 + S + X)/2 >= 1  and  -m + (1 - S + X)/2 >= 1, doubled
            if (2 * m + 1 + S + X < 2) return false;
            if (-2 * m + 1 - S + X < 2) return false;
        }
    return true;
}

Int scan_radius(const Weight& mu, const Weight& lam) {
    Int M = 0;
    for (const auto* wt : {&mu, &lam})
        for (const auto& t : wt->comps())
            for (Int x : t) M = std::max(M, std::llabs(x));
    // Complex bounds are at most (|w+w'| + X + 1)/2 + 1 with |w|,|w'| <= 2M
    // and X <= 8M + 2n + 1; the real bounds are smaller.
    return 6 * M + mu.n() + 2;
}

CriticalSet critical_set_scan(const Weight& mu, const Weight& lam) {
    check_pair(mu, lam);
    const Int w = require_pure(mu);
    const Int wp = require_pure(lam);
    const Int R = scan_radius(mu, lam);
    struct Local {
        Place p;
        Tuple l, lp;
    };
    std::vector<Local> places;
    for (const Place& p : mu.sig().places()) {
        Local loc{p, {}, {}};
        if (p.kind == PlaceKind::Real) {
            loc.l = cuspidal_params_real(mu.at(p.embedding), w);
            loc.lp = cuspidal_params_real(lam.at(p.embedding), wp);
        }
        places.push_back(std::move(loc));
    }
    std::vector<Int> members;
    for (Int m = -R; m <= R; ++m) {
        bool ok = true;
        for (const auto& loc : places) {
            ok = loc.p.kind == PlaceKind::Real
                     ? is_critical_real(m, loc.l, loc.lp, w, wp)
                     : is_critical_cplx(m, mu.at(loc.p.embedding), lam.at(loc.p.embedding), w, wp);
            if (!ok) break;
        }
        if (ok) members.push_back(m);
    }
    return CriticalSet::from_members(members);
}

namespace {

void add_induced(ArchParameter& out, Int l, HalfInt t) {
    if (l == 0) {
        out.summands.push_back(SignSummand{1, t});
        out.summands.push_back(SignSummand{-1, t});
    } else {
        out.summands.push_back(InducedSummand{l, t});
    }
}

void tensor_real(ArchParameter& out, const Summand& x, const Summand& y) {
    if (auto* a = std::get_if<InducedSummand>(&x)) {
        if (auto* b = std::get_if<InducedSummand>(&y)) {
            add_induced(out, a->l + b->l, a->twist + b->twist);
            add_induced(out, std::llabs(a->l - b->l), a->twist + b->twist);
        } else {
            const auto& s = std::get<SignSummand>(y);
            out.summands.push_back(InducedSummand{a->l, a->twist + s.twist});
        }
        return;
    }
    const auto& s = std::get<SignSummand>(x);
    if (auto* b = std::get_if<InducedSummand>(&y)) {
        out.summands.push_back(InducedSummand{b->l, s.twist + b->twist});
    } else {
        const auto& t = std::get<SignSummand>(y);
        out.summands.push_back(SignSummand{s.parity * t.parity, s.twist + t.twist});
    }
}

}  // namespace

ArchParameter tensor(const ArchParameter& A, const ArchParameter& B) {
    if (A.kind != B.kind) throw InputError("tensor of parameters at different place kinds");
    ArchParameter out{A.kind, {}};
    for (const auto& x : A.summands)
        for (const auto& y : B.summands) {
            if (A.kind == PlaceKind::Complex) {
                const auto* a = std::get_if<CharSummand>(&x);
                const auto* b = std::get_if<CharSummand>(&y);
                if (!a || !b) throw InputError("complex parameter holds a real summand");
                out.summands.push_back(CharSummand{a->p + b->p, a->q + b->q});
            } else {
                if (std::holds_alternative<CharSummand>(x) || std::holds_alternative<CharSummand>(y))
                    throw InputError("real parameter holds a complex summand");
                tensor_real(out, x, y);
            }
        }
    return out;
}

}  // namespace lcrit
