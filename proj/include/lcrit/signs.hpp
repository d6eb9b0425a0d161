#pragma once

#include <vector>

#include "lcrit/weights.hpp"

namespace lcrit {

// An algebraic Hecke character, remembered only through its infinity type
// (one integer per embedding) and the parities omega°_v(-1) of its
// finite-order part at the real places.
struct HeckeCharData {
    FieldSignature sig;
    std::vector<Int> infinity_type;
    std::vector<int> finite_parities;
};

// Purity weight of the character; throws InputError if the infinity type
// violates the purity constraint.
Int hecke_purity_weight(const HeckeCharData& chi);
// epsilon_v = (-1)^{w} omega°_v(-1) per real place.
std::vector<int> hecke_signature(const HeckeCharData& chi);

struct SignPair {
    std::vector<int> eps;
    std::vector<int> eta;
    bool operator==(const SignPair&) const = default;
};

// central_parities[v] is omega_{Pi_v}(-1) for n odd and omega_{Sigma_v}(-1)
// for n even, one entry per real place.
SignPair sign_recipe(int n, const std::vector<int>& central_parities, Int w_mu, Int w_lambda);

int epsilon_m(Int m);

// Sign of the one-dimensional summand of J_mu at a real place for n odd,
// read off from the central character: omega(-1) (-1)^{(n-1)/2}.
int jmu_sign_from_central(int omega_parity, int n);

// omega_{pi_v}(-1) for the cohomological GL(2) representation of weight
// (a, b) at a real place.
int gl2_real_central_parity(Int a, Int b);

}  // namespace lcrit
