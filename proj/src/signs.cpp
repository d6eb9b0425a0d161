#include "lcrit/signs.hpp"

#include "lcrit/error.hpp"

namespace lcrit {

namespace {

int neg_one_pow(Int k) { return (k % 2 == 0) ? 1 : -1; }

void check_parity(int s) {
    if (s != 1 && s != -1) throw InputError("parity must be +1 or -1");
}

}  // namespace

Int hecke_purity_weight(const HeckeCharData& chi) {
    const auto& sig = chi.sig;
    const auto& a = chi.infinity_type;
    if (static_cast<int>(a.size()) != sig.degree()) throw InputError("infinity type has wrong length");
    if (sig.r1() > 0) {
        for (Int x : a)
            if (x != a[0]) throw InputError("infinity type must be constant when F has a real place");
        return a[0];
    }
    const Int w = a[0] + a[1];
    for (const Place& p : sig.places())
        if (a[p.embedding] + a[p.conjugate] != w) throw InputError("infinity type violates the purity constraint");
    for (const auto& perm : sig.galois_perms())
        for (const Place& p : sig.places())
            if (a[perm[p.embedding]] + a[perm[p.conjugate]] != w)
                throw InputError("infinity type violates the purity constraint");
    return w;
}

std::vector<int> hecke_signature(const HeckeCharData& chi) {
    if (chi.sig.r1() == 0) throw InputError("signature is undefined without real places");
    const Int w = hecke_purity_weight(chi);
    if (static_cast<int>(chi.finite_parities.size()) != chi.sig.r1())
        throw InputError("need one finite parity per real place");
    std::vector<int> out;
    for (int s : chi.finite_parities) {
        check_parity(s);
        out.push_back(neg_one_pow(w) * s);
    }
    return out;
}

SignPair sign_recipe(int n, const std::vector<int>& central_parities, Int w_mu, Int w_lambda) {
    if (n < 2) throw InputError("sign_recipe: n must be at least 2");
    const Int w = (n % 2 == 1) ? w_mu : w_lambda;
    if (w % 2 != 0)
        throw InputError(n % 2 == 1 ? "w(mu) must be even for n odd" : "w(lambda) must be even for n even");
    SignPair r;
    for (int s : central_parities) {
        check_parity(s);
        const int base = s * neg_one_pow(w / 2);
        if (n % 2 == 1) {
            r.eps.push_back(base);
            r.eta.push_back(-base);
        } else {
            r.eta.push_back(base);
            r.eps.push_back(base);
        }
    }
    return r;
}

int epsilon_m(Int m) { return neg_one_pow(m); }

int jmu_sign_from_central(int omega_parity, int n) {
    check_parity(omega_parity);
    if (n % 2 == 0) throw InputError("the one-dimensional summand only exists for n odd");
    return omega_parity * neg_one_pow((n - 1) / 2);
}

int gl2_real_central_parity(Int a, Int b) { return neg_one_pow(a - b); }

}  // namespace lcrit
