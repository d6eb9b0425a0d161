#include "lcrit/numberfield.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lcrit/error.hpp"

namespace lcrit {

FieldSignature::FieldSignature(int r1, int r2, std::vector<std::vector<int>> galois_perms, bool cm)
    : r1_(r1), r2_(r2), perms_(std::move(galois_perms)), cm_(cm) {
    if (r1 < 0 || r2 < 0) throw InputError("field signature: negative place count");
    if (r1 + r2 == 0) throw InputError("field signature: r1 = r2 = 0 is not a number field");
    if (cm && r1 != 0) throw InputError("field signature: a CM field has no real places");
    const int d = degree();
    for (const auto& p : perms_) {
        if (static_cast<int>(p.size()) != d)
            throw InputError("galois permutation has length " + std::to_string(p.size()) +
                             ", expected " + std::to_string(d));
        std::vector<int> sorted = p;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> ids(d);
        std::iota(ids.begin(), ids.end(), 0);
        if (sorted != ids) throw InputError("galois permutation is not a permutation of embedding ids");
    }
}

bool FieldSignature::is_real(int e) const {
    if (e < 0 || e >= degree()) throw InputError("embedding id " + std::to_string(e) + " out of range");
    return e < r1_;
}

int FieldSignature::conjugate(int e) const {
    if (is_real(e)) return e;
    return ((e - r1_) % 2 == 0) ? e + 1 : e - 1;
}

std::vector<Place> FieldSignature::places() const {
    std::vector<Place> out;
    for (int i = 0; i < r1_; ++i) out.push_back({PlaceKind::Real, i, i});
    for (int k = 0; k < r2_; ++k) out.push_back({PlaceKind::Complex, r1_ + 2 * k, r1_ + 2 * k + 1});
    return out;
}

FieldSignature validate(int r1, int r2) { return FieldSignature(r1, r2); }

int conjugate(const FieldSignature& sig, int e) { return sig.conjugate(e); }

}  // namespace lcrit
