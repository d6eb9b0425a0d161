#pragma once

#include "lcrit/numberfield.hpp"

namespace lcrit {

struct DegreeReport {
    long long b_real = 0, b_cplx = 0;  // per-place bottom degrees
    long long t_real = 0, t_cplx = 0;  // per-place top degrees
    long long b_F = 0, t_F = 0, t_tilde_F = 0;

    bool operator==(const DegreeReport&) const = default;
};

DegreeReport degrees(int n, const FieldSignature& sig);
long long dim_symmetric_space(int n, const FieldSignature& sig);
bool verify_degree_identity(int n, const FieldSignature& sig);
// Number of sign characters under which a cuspidal class appears.
long long permissible_signature_count(int n, const FieldSignature& sig);

}  // namespace lcrit
