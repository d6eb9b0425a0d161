#pragma once

#include <optional>
#include <vector>

#include "lcrit/numberfield.hpp"

namespace lcrit {

using Int = long long;
using Tuple = std::vector<Int>;

// Dominant integral weight of GL(n) over F: one non-increasing n-tuple
// per embedding id.
class Weight {
public:
    Weight(int n, FieldSignature sig, std::vector<Tuple> comps);
    static Weight parallel(int n, const FieldSignature& sig, const Tuple& t);

    int n() const { return n_; }
    const FieldSignature& sig() const { return sig_; }
    const Tuple& at(int e) const { return comps_.at(e); }
    const std::vector<Tuple>& comps() const { return comps_; }

    bool operator==(const Weight&) const = default;

private:
    int n_;
    FieldSignature sig_;
    std::vector<Tuple> comps_;
};

enum class Tri { Yes, No, NotVerified };

struct PurityReport {
    bool is_pure = false;
    std::optional<Int> w;
    Tri strongly_pure = Tri::No;
    bool sheaf_condition = false;
};

// Purity weight if the purity equations are jointly solvable.
std::optional<Int> purity_weight(const Weight& mu);
PurityReport purity(const Weight& mu);
// Purity weight or InputError.
Int require_pure(const Weight& mu);

bool is_parallel(const Weight& mu);
Weight dual(const Weight& mu);
Weight twist(const Weight& lam, Int m);
bool sheaf_condition(const Weight& mu);

// Relabel components by a permutation of embedding ids: comp'[e] = comp[perm[e]].
Weight relabel(const Weight& mu, const std::vector<int>& perm);

// Local dominance / dual helpers on a single tuple.
bool is_dominant(const Tuple& t);
Tuple dual_tuple(const Tuple& t);

}  // namespace lcrit
