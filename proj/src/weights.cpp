#include "lcrit/weights.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lcrit/error.hpp"

namespace lcrit {

bool is_dominant(const Tuple& t) { return std::is_sorted(t.rbegin(), t.rend()); }

Tuple dual_tuple(const Tuple& t) {
    Tuple out(t.rbegin(), t.rend());
    for (auto& x : out) x = -x;
    return out;
}

Weight::Weight(int n, FieldSignature sig, std::vector<Tuple> comps)
    : n_(n), sig_(std::move(sig)), comps_(std::move(comps)) {
    if (n < 1) throw InputError("weight rank must be at least 1");
    if (static_cast<int>(comps_.size()) != sig_.degree())
        throw InputError("weight has " + std::to_string(comps_.size()) + " components, field degree is " +
                         std::to_string(sig_.degree()));
    for (std::size_t e = 0; e < comps_.size(); ++e) {
        if (static_cast<int>(comps_[e].size()) != n)
            throw InputError("component " + std::to_string(e) + " has wrong length");
        if (!is_dominant(comps_[e])) throw InputError("component " + std::to_string(e) + " is not dominant");
    }
}

Weight Weight::parallel(int n, const FieldSignature& sig, const Tuple& t) {
    return Weight(n, sig, std::vector<Tuple>(sig.degree(), t));
}

std::optional<Int> purity_weight(const Weight& mu) {
    const int n = mu.n();
    std::optional<Int> w;
    auto check = [&](Int v) {
        if (!w) w = v;
        return *w == v;
    };
    for (const Place& p : mu.sig().places()) {
        const Tuple& a = mu.at(p.embedding);
        const Tuple& b = mu.at(p.conjugate);  // == a at a real place
        for (int i = 0; i < n; ++i)
            if (!check(b[i] + a[n - 1 - i])) return std::nullopt;
    }
    return w;
}

Int require_pure(const Weight& mu) {
    auto w = purity_weight(mu);
    if (!w) throw InputError("weight is not pure");
    return *w;
}

bool is_parallel(const Weight& mu) {
    const auto& c = mu.comps();
    return std::all_of(c.begin(), c.end(), [&](const Tuple& t) { return t == c.front(); });
}

Weight relabel(const Weight& mu, const std::vector<int>& perm) {
    std::vector<Tuple> comps;
    for (int e = 0; e < mu.sig().degree(); ++e) comps.push_back(mu.at(perm.at(e)));
    return Weight(mu.n(), mu.sig(), std::move(comps));
}

PurityReport purity(const Weight& mu) {
    PurityReport r;
    r.w = purity_weight(mu);
    r.is_pure = r.w.has_value();
    r.sheaf_condition = sheaf_condition(mu);
    if (!r.is_pure) {
        r.strongly_pure = Tri::No;
        return r;
    }
    const auto& sig = mu.sig();
    for (const auto& perm : sig.galois_perms()) {
        if (purity_weight(relabel(mu, perm)) != r.w) {
            r.strongly_pure = Tri::No;
            return r;
        }
    }
    // A parallel weight is strongly pure over any field; over totally real
    // and CM fields (imaginary quadratic ones included) purity and strong
    // purity coincide.
    const bool cm = sig.cm() || (sig.r1() == 0 && sig.r2() == 1);
    if (sig.r2() == 0 || cm || is_parallel(mu) || !sig.galois_perms().empty())
        r.strongly_pure = Tri::Yes;
    else
        r.strongly_pure = Tri::NotVerified;
    return r;
}

Weight dual(const Weight& mu) {
    std::vector<Tuple> comps;
    for (const auto& t : mu.comps()) comps.push_back(dual_tuple(t));
    return Weight(mu.n(), mu.sig(), std::move(comps));
}

Weight twist(const Weight& lam, Int m) {
    std::vector<Tuple> comps = lam.comps();
    for (auto& t : comps)
        for (auto& x : t) x += m;
    return Weight(lam.n(), lam.sig(), std::move(comps));
}

bool sheaf_condition(const Weight& mu) {
    const auto& sig = mu.sig();
    std::vector<Int> a;
    for (const auto& t : mu.comps()) a.push_back(std::accumulate(t.begin(), t.end(), Int{0}));
    if (sig.r1() > 0) return std::all_of(a.begin(), a.end(), [&](Int x) { return x == a.front(); });

    const Int c = a[0] + a[1];
    auto pairs_constant = [&](const std::vector<int>& perm) {
        for (const Place& p : sig.places())
            if (a[perm[p.embedding]] + a[perm[p.conjugate]] != c) return false;
        return true;
    };
    std::vector<int> id(sig.degree());
    std::iota(id.begin(), id.end(), 0);
    if (!pairs_constant(id)) return false;
    for (const auto& perm : sig.galois_perms())
        if (!pairs_constant(perm)) return false;
    return true;
}

}  // namespace lcrit
