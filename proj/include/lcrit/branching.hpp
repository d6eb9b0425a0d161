#pragma once

#include <optional>
#include <vector>

#include "lcrit/weights.hpp"

namespace lcrit {

// A finite interval of integers; both ends absent means empty.
struct CriticalSet {
    std::optional<Int> lo;
    std::optional<Int> hi;

    static CriticalSet none() { return {}; }
    static CriticalSet interval(Int lo, Int hi);
    // Packs a sorted list of members; throws ConsistencyError on a gap.
    static CriticalSet from_members(const std::vector<Int>& members);

    bool empty() const { return !lo.has_value(); }
    bool contains(Int m) const { return !empty() && *lo <= m && m <= *hi; }
    std::vector<Int> members() const;
    CriticalSet intersect(const CriticalSet& o) const;

    bool operator==(const CriticalSet&) const = default;
};

struct MBounds {
    Int minus;
    Int plus;
    bool operator==(const MBounds&) const = default;
};

// dual(mu)^e interlaces lam^e at every embedding e.
bool interlaces(const Weight& mu, const Weight& lam);

// {j : dual(mu) interlaces lam + j}, found by direct enumeration.
CriticalSet compat_set(const Weight& mu, const Weight& lam);

// Per-place closed-form bounds; indices refer to the chosen embedding.
MBounds m_pm_place(const Tuple& mu_v, const Tuple& lam_v, Int w, Int wp, PlaceKind kind);

// Intersection of the per-place bounds. Throws HypothesisError when the
// compatibility set is empty.
CriticalSet critical_set_closed_form(const Weight& mu, const Weight& lam);

// Shared argument checks for a GL(n) x GL(n-1) pair.
void check_pair(const Weight& mu, const Weight& lam);

}  // namespace lcrit
