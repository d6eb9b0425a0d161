#pragma once

#include <optional>
#include <random>
#include <utility>

#include "lcrit/weights.hpp"

namespace lcrit {

using Rng = std::mt19937_64;

Int uniform(Rng& rng, Int lo, Int hi);

// r1, r2 <= max; r1 = 0 yields a CM signature.
FieldSignature random_signature(Rng& rng, int max_r1, int max_r2);

// Real-pure n-tuple of purity weight w: the top half is sampled and the
// rest completed by mu_{n+1-i} = w - mu_i.
Tuple random_real_pure_tuple(Rng& rng, int n, Int w, Int spread);

// Strongly pure weight with entries roughly bounded by max_entry. Over a
// field with both real and complex places the weight is parallel, the only
// shape that is strongly pure without further Galois data.
Weight random_strongly_pure(Rng& rng, int n, const FieldSignature& sig, Int max_entry);

// Pure weight, not necessarily strongly pure: independent components at
// every place.
Weight random_pure(Rng& rng, int n, const FieldSignature& sig, Int max_entry);

// A pair (mu, lam) of ranks n, n-1 with nonempty compatibility set.
std::pair<Weight, Weight> random_compatible_pair(Rng& rng, int n, const FieldSignature& sig, Int max_entry,
                                                 bool strongly_pure = true);

}  // namespace lcrit
