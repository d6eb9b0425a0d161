#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lcrit/weights.hpp"

namespace lcrit {

// Hodge numbers of a rank-2 motive: (p_e, q_e) per embedding with p_e > q_e,
// and p_{conj e} + q_e = w_M.
class HodgeData {
public:
    HodgeData(FieldSignature sig, std::vector<std::pair<Int, Int>> pq, Int w_M);

    const FieldSignature& sig() const { return sig_; }
    Int p(int e) const { return pq_.at(e).first; }
    Int q(int e) const { return pq_.at(e).second; }
    Int weight() const { return w_M_; }
    const std::vector<std::pair<Int, Int>>& pq() const { return pq_; }

    // H_e = {(p_e, q_{conj e}), (q_e, p_{conj e})}
    std::vector<std::pair<Int, Int>> hodge_types(int e) const;

    bool operator==(const HodgeData&) const = default;

private:
    FieldSignature sig_;
    std::vector<std::pair<Int, Int>> pq_;
    Int w_M_;
};

// Critical type: T holds the embeddings of "real type", A the chosen
// complex embeddings, Abar their conjugates.
struct CritType {
    std::vector<int> T;
    std::vector<int> A;
    std::vector<int> Abar;
    bool operator==(const CritType&) const = default;
};

HodgeData hodge_from_gl2_weight(const Weight& mu);
HodgeData tate_twist(const HodgeData& h, Int k);
// std::nullopt means "not critical".
std::optional<CritType> classify(const HodgeData& h, const std::vector<Int>& j);

struct GammaShift {
    int embedding;
    Int shift;  // factor Gamma_C(s + shift)
    bool operator==(const GammaShift&) const = default;
};
std::vector<GammaShift> motivic_gamma(const HodgeData& h);

}  // namespace lcrit
