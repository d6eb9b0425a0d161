#include "lcrit/motivic.hpp"

#include "lcrit/error.hpp"

namespace lcrit {

HodgeData::HodgeData(FieldSignature sig, std::vector<std::pair<Int, Int>> pq, Int w_M)
    : sig_(std::move(sig)), pq_(std::move(pq)), w_M_(w_M) {
    if (static_cast<int>(pq_.size()) != sig_.degree()) throw InputError("Hodge data has wrong length");
    for (int e = 0; e < sig_.degree(); ++e) {
        if (p(e) <= q(e)) throw InputError("Hodge data must satisfy p > q at every embedding");
        const int c = sig_.conjugate(e);
        if (p(c) + q(e) != w_M_ || q(c) + p(e) != w_M_)
            throw InputError("Hodge data violates p_conj + q = w_M at embedding " + std::to_string(e));
    }
}

std::vector<std::pair<Int, Int>> HodgeData::hodge_types(int e) const {
    const int c = sig_.conjugate(e);
    return {{p(e), q(c)}, {q(e), p(c)}};
}

HodgeData hodge_from_gl2_weight(const Weight& mu) {
    if (mu.n() != 2) throw InputError("expected a GL(2) weight");
    const Int w = require_pure(mu);
    std::vector<std::pair<Int, Int>> pq;
    for (const auto& t : mu.comps()) pq.push_back({-t[1] + 1, -t[0]});
    return HodgeData(mu.sig(), std::move(pq), 1 - w);
}

HodgeData tate_twist(const HodgeData& h, Int k) {
    auto pq = h.pq();
    for (auto& [p, q] : pq) {
        p -= k;
        q -= k;
    }
    return HodgeData(h.sig(), std::move(pq), h.weight() - 2 * k);
}

std::optional<CritType> classify(const HodgeData& h, const std::vector<Int>& j) {
    const auto& sig = h.sig();
    if (static_cast<int>(j.size()) != sig.degree()) throw InputError("infinity type has wrong length");
    CritType out;
    for (int e = 0; e < sig.degree(); ++e) {
        if (sig.is_real(e)) {
            if (!(h.q(e) + 1 <= j[e] && j[e] <= h.p(e))) return std::nullopt;
            out.T.push_back(e);
            continue;
        }
        const int c = sig.conjugate(e);
        if (h.p(e) - j[e] < h.q(c) - j[c]) {
            if (!(j[e] >= h.p(e) + 1 && j[c] <= h.q(c))) return std::nullopt;
            out.A.push_back(e);
        } else if (h.p(c) - j[c] < h.q(e) - j[e]) {
            if (!(j[c] >= h.p(c) + 1 && j[e] <= h.q(e))) return std::nullopt;
            out.Abar.push_back(e);
        } else if (h.p(e) - j[e] > h.q(c) - j[c] && h.p(c) - j[c] > h.q(e) - j[e]) {
            if (!(h.q(e) + 1 <= j[e] && j[e] <= h.p(e))) return std::nullopt;
            out.T.push_back(e);
        } else {
            return std::nullopt;  // middle Hodge type
        }
    }
    return out;
}

std::vector<GammaShift> motivic_gamma(const HodgeData& h) {
    std::vector<GammaShift> out;
    for (int e = 0; e < h.sig().degree(); ++e)
        for (const auto& [p, q] : h.hodge_types(e))
            if (p < q) out.push_back({e, -p});
    return out;
}

}  // namespace lcrit
