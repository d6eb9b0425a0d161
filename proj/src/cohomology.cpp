#include "lcrit/cohomology.hpp"

#include "lcrit/error.hpp"

namespace lcrit {

DegreeReport degrees(int n, const FieldSignature& sig) {
    if (n < 1) throw InputError("degrees: n must be at least 1");
    const long long N = n;
    DegreeReport r;
    r.b_real = N * N / 4;
    r.b_cplx = N * (N - 1) / 2;
    r.t_real = r.b_real + (N - 1) / 2;
    r.t_cplx = r.b_cplx + N - 1;
    r.b_F = sig.r1() * r.b_real + sig.r2() * r.b_cplx;
    r.t_F = sig.r1() * r.t_real + sig.r2() * r.t_cplx;
    r.t_tilde_F = r.t_F + sig.degree() - 1;
    return r;
}

long long dim_symmetric_space(int n, const FieldSignature& sig) {
    if (n < 1) throw InputError("dim_symmetric_space: n must be at least 1");
    const long long N = n;
    return sig.r1() * N * (N + 1) / 2 + sig.r2() * N * N;
}

bool verify_degree_identity(int n, const FieldSignature& sig) {
    if (n < 2) throw InputError("verify_degree_identity: n must be at least 2");
    return degrees(n, sig).b_F + degrees(n - 1, sig).b_F == dim_symmetric_space(n - 1, sig);
}

long long permissible_signature_count(int n, const FieldSignature& sig) {
    return n % 2 == 0 ? (1LL << sig.r1()) : 1;
}

}  // namespace lcrit
