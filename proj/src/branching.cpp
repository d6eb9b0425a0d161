#include "lcrit/branching.hpp"

#include <algorithm>

#include "lcrit/error.hpp"

namespace lcrit {

CriticalSet CriticalSet::interval(Int lo, Int hi) {
    if (lo > hi) return none();
    return {lo, hi};
}

CriticalSet CriticalSet::from_members(const std::vector<Int>& members) {
    if (members.empty()) return none();
    for (std::size_t i = 1; i < members.size(); ++i)
        if (members[i] != members[i - 1] + 1) throw ConsistencyError("critical set is not an interval");
    return {members.front(), members.back()};
}

std::vector<Int> CriticalSet::members() const {
    std::vector<Int> out;
    if (empty()) return out;
    for (Int m = *lo; m <= *hi; ++m) out.push_back(m);
    return out;
}

CriticalSet CriticalSet::intersect(const CriticalSet& o) const {
    if (empty() || o.empty()) return none();
    return interval(std::max(*lo, *o.lo), std::min(*hi, *o.hi));
}

void check_pair(const Weight& mu, const Weight& lam) {
    if (!(mu.sig() == lam.sig())) throw InputError("weights live over different field signatures");
    if (mu.n() < 2) throw InputError("GL(n) x GL(n-1) needs n >= 2");
    if (lam.n() != mu.n() - 1)
        throw InputError("rank mismatch: expected lambda of rank " + std::to_string(mu.n() - 1));
}

namespace {

// nu_1 >= lam_1 >= nu_2 >= ... >= lam_{n-1} >= nu_n with nu = dual(mu).
bool local_interlace(const Tuple& mu, const Tuple& lam, Int j) {
    const Tuple nu = dual_tuple(mu);
    for (std::size_t k = 0; k < lam.size(); ++k) {
        const Int l = lam[k] + j;
        if (!(nu[k] >= l && l >= nu[k + 1])) return false;
    }
    return true;
}

bool interlaces_shift(const Weight& mu, const Weight& lam, Int j) {
    for (int e = 0; e < mu.sig().degree(); ++e)
        if (!local_interlace(mu.at(e), lam.at(e), j)) return false;
    return true;
}

}  // namespace

bool interlaces(const Weight& mu, const Weight& lam) {
    check_pair(mu, lam);
    return interlaces_shift(mu, lam, 0);
}

CriticalSet compat_set(const Weight& mu, const Weight& lam) {
    check_pair(mu, lam);
    Int lo = 0, hi = 0;
    bool first = true;
    for (const auto* wt : {&mu, &lam})
        for (const auto& t : wt->comps())
            for (Int x : t) {
                lo = first ? x : std::min(lo, x);
                hi = first ? x : std::max(hi, x);
                first = false;
            }
    // A member j puts lam_k + j between entries of dual(mu), which lie in
    // [-hi, -lo]; hence -2hi <= j <= -2lo.
    std::vector<Int> members;
    for (Int j = -2 * hi - 1; j <= -2 * lo + 1; ++j)
        if (interlaces_shift(mu, lam, j)) members.push_back(j);
    return CriticalSet::from_members(members);
}

MBounds m_pm_place(const Tuple& mu, const Tuple& lam, Int w, Int wp, PlaceKind kind) {
    const int n = static_cast<int>(mu.size());
    if (n < 2 || static_cast<int>(lam.size()) != n - 1) throw InputError("m_pm_place: rank mismatch");
    // 1-indexed accessors
    auto M = [&](int i) { return mu[i - 1]; };
    auto L = [&](int j) { return lam[j - 1]; };
    Int plus = 0, minus = 0;
    for (int j = 1; j <= n - 1; ++j) {
        Int up = -M(n + 1 - j) - L(j);
        Int down = -M(n - j) - L(j);
        if (kind == PlaceKind::Complex) {
            up = std::min(up, M(n - j) + L(j) - (w + wp));
            down = std::max(down, M(n + 1 - j) + L(j) - (w + wp));
        }
        plus = (j == 1) ? up : std::min(plus, up);
        minus = (j == 1) ? down : std::max(minus, down);
    }
    return {minus, plus};
}

CriticalSet critical_set_closed_form(const Weight& mu, const Weight& lam) {
    check_pair(mu, lam);
    if (compat_set(mu, lam).empty())
        throw HypothesisError("no integer shift makes the coefficient systems compatible");
    const Int w = require_pure(mu);
    const Int wp = require_pure(lam);
    CriticalSet out;
    bool first = true;
    for (const Place& p : mu.sig().places()) {
        MBounds b = m_pm_place(mu.at(p.embedding), lam.at(p.embedding), w, wp, p.kind);
        CriticalSet local = CriticalSet::interval(b.minus, b.plus);
        out = first ? local : out.intersect(local);
        first = false;
    }
    return out;
}

}  // namespace lcrit
