#pragma once

#include <vector>

namespace lcrit {

enum class PlaceKind { Real, Complex };

// An archimedean place. At a complex place `embedding` is the chosen
// embedding and `conjugate` its complex conjugate; at a real place both
// are the same id.
struct Place {
    PlaceKind kind;
    int embedding;
    int conjugate;
};

// Archimedean shape of a number field: ids 0..r1-1 are real embeddings,
// ids r1+2k and r1+2k+1 are the conjugate pair of complex place k.
//
// `galois_perms` optionally models part of the Aut(C)-action on embeddings;
// each entry is a permutation of 0..d-1. Nothing else about the Galois
// structure is known to this library.
class FieldSignature {
public:
    FieldSignature(int r1, int r2, std::vector<std::vector<int>> galois_perms = {},
                   bool cm = false);

    int r1() const { return r1_; }
    int r2() const { return r2_; }
    int degree() const { return r1_ + 2 * r2_; }
    bool cm() const { return cm_; }
    const std::vector<std::vector<int>>& galois_perms() const { return perms_; }

    bool is_real(int e) const;
    int conjugate(int e) const;
    std::vector<Place> places() const;

    bool operator==(const FieldSignature&) const = default;

private:
    int r1_;
    int r2_;
    std::vector<std::vector<int>> perms_;
    bool cm_;
};

FieldSignature validate(int r1, int r2);
int conjugate(const FieldSignature& sig, int e);

}  // namespace lcrit
