#include "lcrit/random.hpp"

#include <algorithm>
#include <cstdlib>

#include "lcrit/error.hpp"

namespace lcrit {

Int uniform(Rng& rng, Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); }

FieldSignature random_signature(Rng& rng, int max_r1, int max_r2) {
    for (;;) {
        const int r1 = static_cast<int>(uniform(rng, 0, max_r1));
        const int r2 = static_cast<int>(uniform(rng, 0, max_r2));
        if (r1 + r2 == 0) continue;
        return FieldSignature(r1, r2, {}, r1 == 0);
    }
}

namespace {

Int ceil_half(Int w) { return (w >= 0) ? (w + 1) / 2 : -((-w) / 2); }

Int random_weight_value(Rng& rng, bool need_even, Int max_entry) {
    Int w = uniform(rng, -max_entry / 2, max_entry / 2);
    if (need_even && (w % 2 != 0)) w += (w > 0) ? -1 : 1;
    return w;
}

Tuple random_free_tuple(Rng& rng, int n, Int center, Int spread) {
    Tuple t(n);
    for (auto& x : t) x = center + uniform(rng, -spread, spread);
    std::sort(t.rbegin(), t.rend());
    return t;
}

Tuple conjugate_component(const Tuple& t, Int w) {
    Tuple out(t.rbegin(), t.rend());
    for (auto& x : out) x = w - x;
    return out;
}

}  // namespace

Tuple random_real_pure_tuple(Rng& rng, int n, Int w, Int spread) {
    if (n % 2 == 1 && w % 2 != 0) throw InputError("odd rank needs an even purity weight at a real place");
    Tuple t(n);
    const int half = n / 2;
    const Int c = ceil_half(w);
    Tuple top(half);
    for (auto& x : top) x = c + uniform(rng, 0, spread);
    std::sort(top.rbegin(), top.rend());
    for (int i = 0; i < half; ++i) {
        t[i] = top[i];
        t[n - 1 - i] = w - top[i];
    }
    if (n % 2 == 1) t[half] = w / 2;
    return t;
}

namespace {

Weight random_pure_impl(Rng& rng, int n, const FieldSignature& sig, Int max_entry, bool parallel_if_mixed) {
    const bool need_even = sig.r1() > 0 && n % 2 == 1;
    const Int w = random_weight_value(rng, need_even, max_entry);
    const Int spread = std::max<Int>(1, max_entry / 2);
    std::vector<Tuple> comps(sig.degree());
    if (parallel_if_mixed && sig.r1() > 0 && sig.r2() > 0) {
        const Tuple t = random_real_pure_tuple(rng, n, w, spread);
        return Weight::parallel(n, sig, t);
    }
    for (const Place& p : sig.places()) {
        if (p.kind == PlaceKind::Real) {
            comps[p.embedding] = random_real_pure_tuple(rng, n, w, spread);
        } else {
            comps[p.embedding] = random_free_tuple(rng, n, w / 2, spread);
            comps[p.conjugate] = conjugate_component(comps[p.embedding], w);
        }
    }
    return Weight(n, sig, std::move(comps));
}

// Entries of lam_k with dual(mu) interlacing lam and purity weight w0 = delta - w
// lie in [nu_{k+1} + max(0,delta), nu_k + min(0,delta)].
std::optional<std::pair<Int, Int>> slot(const Tuple& nu, int k, Int delta) {
    const Int lo = nu[k + 1] + std::max<Int>(0, delta);
    const Int hi = nu[k] + std::min<Int>(0, delta);
    if (lo > hi) return std::nullopt;
    return std::make_pair(lo, hi);
}

std::optional<Tuple> sample_lambda(Rng& rng, const Tuple& mu, Int delta, Int w0, bool real) {
    const Tuple nu = dual_tuple(mu);
    const int m = static_cast<int>(mu.size()) - 1;
    Tuple lam(m);
    for (int k = 0; k < m; ++k) {
        if (real && k > m - 1 - k) break;
        auto s = slot(nu, k, delta);
        if (!s) return std::nullopt;
        if (real && k == m - 1 - k) {
            if (w0 % 2 != 0 || w0 / 2 < s->first || w0 / 2 > s->second) return std::nullopt;
            lam[k] = w0 / 2;
        } else {
            lam[k] = uniform(rng, s->first, s->second);
            if (real) lam[m - 1 - k] = w0 - lam[k];
        }
    }
    return lam;
}

}  // namespace

Weight random_strongly_pure(Rng& rng, int n, const FieldSignature& sig, Int max_entry) {
    return random_pure_impl(rng, n, sig, max_entry, true);
}

Weight random_pure(Rng& rng, int n, const FieldSignature& sig, Int max_entry) {
    return random_pure_impl(rng, n, sig, max_entry, false);
}

std::pair<Weight, Weight> random_compatible_pair(Rng& rng, int n, const FieldSignature& sig, Int max_entry,
                                                 bool strongly_pure) {
    if (n < 2) throw InputError("random_compatible_pair: n must be at least 2");
    const bool parallel = strongly_pure && sig.r1() > 0 && sig.r2() > 0;
    for (int attempt = 0; attempt < 10000; ++attempt) {
        const Weight mu = random_pure_impl(rng, n, sig, max_entry, strongly_pure);
        const Int w = *purity_weight(mu);
        std::vector<Int> deltas{0, 1, -1, 2, -2};
        std::shuffle(deltas.begin(), deltas.end(), rng);
        std::stable_sort(deltas.begin(), deltas.end(), [](Int a, Int b) { return std::abs(a) < std::abs(b); });
        for (Int delta : deltas) {
            const Int w0 = delta - w;
            std::vector<Tuple> comps(sig.degree());
            bool ok = true;
            if (parallel) {
                auto lam = sample_lambda(rng, mu.at(0), delta, w0, true);
                if (!lam) continue;
                comps.assign(sig.degree(), *lam);
            } else {
                for (const Place& p : sig.places()) {
                    const bool real = p.kind == PlaceKind::Real;
                    auto lam = sample_lambda(rng, mu.at(p.embedding), delta, w0, real);
                    if (!lam) {
                        ok = false;
                        break;
                    }
                    comps[p.embedding] = *lam;
                    if (!real) comps[p.conjugate] = conjugate_component(*lam, w0);
                }
            }
            if (!ok) continue;
            const Weight lam0(n - 1, sig, std::move(comps));
            return {mu, twist(lam0, -uniform(rng, -3, 3))};
        }
    }
    throw ConsistencyError("could not generate a compatible pair");
}

}  // namespace lcrit
