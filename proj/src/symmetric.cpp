#include "lcrit/symmetric.hpp"

#include <algorithm>
#include <cstdlib>

#include "lcrit/error.hpp"

namespace lcrit {

namespace {

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

void need_gl2(const Weight& mu) {
    if (mu.n() != 2) throw InputError("expected a GL(2) weight");
}

}  // namespace

Weight sym_weight(const Weight& mu, int r) {
    need_gl2(mu);
    if (r < 1) throw InputError("symmetric power must be at least 1");
    std::vector<Tuple> comps;
    for (const auto& t : mu.comps()) {
        Tuple s;
        for (int k = 0; k <= r; ++k) s.push_back((r - k) * t[0] + k * t[1]);
        comps.push_back(std::move(s));
    }
    return Weight(r + 1, mu.sig(), std::move(comps));
}

Weight det_weight(const Weight& mu) {
    need_gl2(mu);
    std::vector<Tuple> comps;
    for (const auto& t : mu.comps()) comps.push_back({t[0] + t[1]});
    return Weight(1, mu.sig(), std::move(comps));
}

ArchParameter sym_parameter_real(Int l, Int w, int r) {
    if (l < 1) throw InputError("sym_parameter_real: l must be positive");
    if (r < 1) throw InputError("symmetric power must be at least 1");
    ArchParameter out{PlaceKind::Real, {}};
    const HalfInt t{r * w};
    if (r % 2 == 0) {
        const int parity = ((r * l / 2) % 2 == 0) ? 1 : -1;
        out.summands.push_back(SignSummand{parity, t});
    }
    for (int k = (r % 2 == 0) ? 2 : 1; k <= r; k += 2) out.summands.push_back(InducedSummand{k * l, t});
    return out;
}

ArchParameter sym_parameter_cplx(Int a, Int b, Int w, int r) {
    if (r < 0) throw InputError("symmetric power must be non-negative");
    ArchParameter out{PlaceKind::Complex, {}};
    for (int k = 0; k <= r; ++k) {
        const HalfInt p{2 * ((r - k) * a + k * b) + r - 2 * k};
        out.summands.push_back(CharSummand{p, HalfInt::of(r * w) - p});
    }
    return out;
}

SymCompatReport sym_compat_necessary(const Weight& mu, int r) {
    need_gl2(mu);
    if (r < 1) throw InputError("symmetric power must be at least 1");
    const Int w = require_pure(mu);
    SymCompatReport rep;
    rep.all = true;
    for (const auto& t : mu.comps()) {
        const Int a = t[0], b = t[1];
        const bool ok = 2 * r * a + 2 * (r - 1) * b >= (2 * r - 1) * w && (2 * r - 1) * w >= 2 * (r - 1) * a + 2 * r * b;
        rep.per_embedding.push_back(ok);
        rep.all = rep.all && ok;
    }
    if (rep.all && mu.sig().r1() > 0) rep.j = floor_div(w, 2) - r * w;
    return rep;
}

namespace {

Int sym3_alpha(Int a, Int b, Int w) {
    return std::min({std::llabs(6 * a - 3 * w + 3), std::llabs(4 * a + 2 * b - 3 * w + 1),
                     std::llabs(2 * a + 4 * b - 3 * w - 1), std::llabs(6 * b - 3 * w - 3)});
}

}  // namespace

CriticalSet sym3_critical_set(const Weight& mu) {
    need_gl2(mu);
    const Int w = require_pure(mu);
    CriticalSet out;
    bool first = true;
    for (const Place& p : mu.sig().places()) {
        const Int a = mu.at(p.embedding)[0], b = mu.at(p.embedding)[1];
        CriticalSet local;
        if (p.kind == PlaceKind::Real) {
            local = CriticalSet::interval(-2 * a - b, -2 * b - a);
        } else {
            const Int alpha = sym3_alpha(a, b, w);
            const Int alpha_bar = sym3_alpha(mu.at(p.conjugate)[0], mu.at(p.conjugate)[1], w);
            if (alpha != alpha_bar) throw ConsistencyError("alpha differs between conjugate embeddings");
            local = CriticalSet::interval(ceil_div(1 - 3 * w - alpha, 2), floor_div(-1 - 3 * w + alpha, 2));
        }
        out = first ? local : out.intersect(local);
        first = false;
    }
    return out;
}

ArchParameter gl2_central_parameter_cplx(Int a, Int b, Int w) {
    const ArchParameter par = jmu_parameter_cplx({a, b}, {w - b, w - a}, w);
    CharSummand det{HalfInt{0}, HalfInt{0}};
    for (const auto& s : par.summands) {
        const auto& c = std::get<CharSummand>(s);
        det = {det.p + c.p, det.q + c.q};
    }
    return {PlaceKind::Complex, {det}};
}

ArchParameter gl2_central_parameter_real(Int a, Int b) {
    const ArchParameter par = jmu_parameter_real({a, b}, a + b, std::nullopt);
    const auto& ind = std::get<InducedSummand>(par.summands.at(0));
    // det Ind(xi_l) = sgn^{l+1}; the twist doubles.
    const int parity = (ind.l % 2 == 0) ? -1 : 1;
    return {PlaceKind::Real, {SignSummand{parity, ind.twist + ind.twist}}};
}

bool factorization_check_cplx(Int a, Int b, Int w, int r) {
    if (r < 1) throw InputError("symmetric power must be at least 1");
    const ArchParameter lhs = tensor(sym_parameter_cplx(a, b, w, r), sym_parameter_cplx(a, b, w, r - 1));
    const auto omega = std::get<CharSummand>(gl2_central_parameter_cplx(a, b, w).summands[0]);
    ArchParameter rhs{PlaceKind::Complex, {}};
    for (int s = 1; s <= r; ++s) {
        ArchParameter piece = sym_parameter_cplx(a, b, w, 2 * s - 1);
        for (auto& x : piece.summands) {
            auto& c = std::get<CharSummand>(x);
            c.p.twice += (r - s) * omega.p.twice;
            c.q.twice += (r - s) * omega.q.twice;
        }
        rhs = rhs + piece;
    }
    return lhs.same_multiset(rhs);
}

bool factorization_check_real(Int a, Int b) {
    if (a < b) throw InputError("weight is not dominant");
    const Int w = a + b, l = a - b + 1;
    const ArchParameter lhs = tensor(sym_parameter_real(l, w, 2), sym_parameter_real(l, w, 1));
    const ArchParameter rhs =
        sym_parameter_real(l, w, 3) + tensor(sym_parameter_real(l, w, 1), gl2_central_parameter_real(a, b));
    return lhs.same_multiset(rhs);
}

}  // namespace lcrit
