#pragma once

// Brute-force reference computations used only by the tests. None of them
// calls the closed forms they are compared against.

#include "lcrit/branching.hpp"

namespace oracle {

using lcrit::CriticalSet;
using lcrit::Int;
using lcrit::Tuple;
using lcrit::Weight;

// {j : nu_k >= lam_k + j >= nu_{k+1} at every embedding}, nu = reversed -mu,
// checked over a fixed wide window.
CriticalSet compat_by_enumeration(const Weight& mu, const Weight& lam, Int window = 200);

// Critical set from Gamma factors: real places via the Mackey decomposition
// of the tensor of induced characters, complex places via the pairing of
// the characters z^a zbar^b of both representations.
CriticalSet critical_by_gamma(const Weight& mu, const Weight& lam, Int window = 200);

// Same, at one place only (identified by its chosen embedding).
CriticalSet critical_by_gamma_at(const Weight& mu, const Weight& lam, int embedding, Int window = 200);

// Sym³ critical set from the Gamma factors of L(s, Sym³ pi) written directly
// in terms of (a, b, w).
CriticalSet sym3_by_gamma(const Weight& mu, Int window = 200);

}  // namespace oracle
