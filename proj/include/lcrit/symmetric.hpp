#pragma once

#include <optional>
#include <vector>

#include "lcrit/archimedean.hpp"

namespace lcrit {

Weight sym_weight(const Weight& mu, int r);
Weight det_weight(const Weight& mu);

ArchParameter sym_parameter_real(Int l, Int w, int r);
ArchParameter sym_parameter_cplx(Int a, Int b, Int w, int r);

struct SymCompatReport {
    std::vector<bool> per_embedding;
    bool all = false;
    // Offered when F has a real place and the condition holds everywhere.
    std::optional<Int> j;
};
SymCompatReport sym_compat_necessary(const Weight& mu, int r);

CriticalSet sym3_critical_set(const Weight& mu);

// Sym^r ⊗ Sym^{r-1} against the sum of Sym^{2a-1} ⊗ omega^{r-a}, a = 1..r.
bool factorization_check_cplx(Int a, Int b, Int w, int r);
// Real places, r = 2 only: Sym² ⊗ Sym¹ against Sym³ ⊕ Sym¹ ⊗ omega.
bool factorization_check_real(Int a, Int b);

// Parameter of the central character of a GL(2) representation.
ArchParameter gl2_central_parameter_cplx(Int a, Int b, Int w);
ArchParameter gl2_central_parameter_real(Int a, Int b);

}  // namespace lcrit
