#pragma once

#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lcrit/branching.hpp"

namespace lcrit {

// Exact half-integer, stored as twice its value.
struct HalfInt {
    Int twice = 0;

    static HalfInt of(Int v) { return {2 * v}; }
    static HalfInt halves(Int t) { return {t}; }

    HalfInt operator+(HalfInt o) const { return {twice + o.twice}; }
    HalfInt operator-(HalfInt o) const { return {twice - o.twice}; }
    HalfInt operator-() const { return {-twice}; }
    bool is_integer() const { return twice % 2 == 0; }
    std::string str() const;  // "3/2", "-1", "0"

    auto operator<=>(const HalfInt&) const = default;
};

// I(xi_l) |.|^twist at a real place.
struct InducedSummand {
    Int l;
    HalfInt twist;
    auto operator<=>(const InducedSummand&) const = default;
};

// sgn^{(1-parity)/2} |.|^twist at a real place.
struct SignSummand {
    int parity;
    HalfInt twist;
    auto operator<=>(const SignSummand&) const = default;
};

// z^p zbar^q at a complex place.
struct CharSummand {
    HalfInt p;
    HalfInt q;
    auto operator<=>(const CharSummand&) const = default;
};

using Summand = std::variant<InducedSummand, SignSummand, CharSummand>;

struct ArchParameter {
    PlaceKind kind;
    std::vector<Summand> summands;

    // Summands sorted; equality of canonical forms is multiset equality.
    ArchParameter canonical() const;
    bool same_multiset(const ArchParameter& o) const;
    ArchParameter operator+(const ArchParameter& o) const;  // direct sum
};

Tuple cuspidal_params_real(const Tuple& mu_v, Int w);

struct CplxParams {
    std::vector<HalfInt> a;
    std::vector<HalfInt> b;
};
CplxParams cuspidal_params_cplx(const Tuple& mu_iota, const Tuple& mu_bar, Int w);

ArchParameter jmu_parameter_real(const Tuple& mu_v, Int w, std::optional<int> eps);
ArchParameter jmu_parameter_cplx(const Tuple& mu_iota, const Tuple& mu_bar, Int w);
ArchParameter jmu_parameter(const Weight& mu, const Place& v, std::optional<int> eps = std::nullopt);

Int cuspidal_width(const Tuple& l, const Tuple& lp);
bool is_critical_real(Int m, const Tuple& l, const Tuple& lp, Int w, Int wp);

std::vector<HalfInt> rs_gamma_shifts_cplx(const Tuple& mu_v, const Tuple& lam_v, Int w, Int wp);
bool is_critical_cplx(Int m, const Tuple& mu_v, const Tuple& lam_v, Int w, Int wp);

// Scan radius: every analytically critical m satisfies |m| <= radius.
Int scan_radius(const Weight& mu, const Weight& lam);
CriticalSet critical_set_scan(const Weight& mu, const Weight& lam);

ArchParameter tensor(const ArchParameter& A, const ArchParameter& B);

}  // namespace lcrit
