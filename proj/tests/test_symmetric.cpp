#include <doctest.h>

#include "lcrit/error.hpp"
#include "lcrit/random.hpp"
#include "lcrit/signs.hpp"
#include "lcrit/symmetric.hpp"
#include "oracles.hpp"

using namespace lcrit;

namespace {
const FieldSignature Q(1, 0);
const FieldSignature K(0, 1);
HalfInt h(Int twice) { return HalfInt::halves(twice); }
}  // namespace

TEST_SUITE("symmetric") {

TEST_CASE("transferred weights") {
    const Weight mu(2, Q, {{4, -1}});
    CHECK(sym_weight(mu, 1) == mu);
    CHECK(sym_weight(mu, 3).at(0) == Tuple{12, 7, 2, -3});
    CHECK(*purity_weight(sym_weight(mu, 3)) == 9);
    CHECK(det_weight(mu).at(0) == Tuple{3});
    const Weight par = Weight::parallel(2, FieldSignature(1, 1), {1, -1});
    CHECK(det_weight(par).at(0) == Tuple{0});
    CHECK(*purity_weight(det_weight(par)) == 0);
    CHECK(is_parallel(sym_weight(par, 4)));
    CHECK_THROWS_AS(sym_weight(mu, 0), InputError);
    CHECK_THROWS_AS(sym_weight(Weight(1, Q, {{0}}), 2), InputError);
}

TEST_CASE("real symmetric power parameters") {
    CHECK(sym_parameter_real(2, 4, 3).same_multiset(
        {PlaceKind::Real, {InducedSummand{2, HalfInt::of(6)}, InducedSummand{6, HalfInt::of(6)}}}));
    CHECK(sym_parameter_real(1, 3, 2).same_multiset(
        {PlaceKind::Real, {SignSummand{-1, HalfInt::of(3)}, InducedSummand{2, HalfInt::of(3)}}}));
    CHECK(sym_parameter_real(5, 1, 1).same_multiset({PlaceKind::Real, {InducedSummand{5, h(1)}}}));
    CHECK_THROWS_AS(sym_parameter_real(0, 0, 1), InputError);
}

TEST_CASE("complex symmetric power parameters") {
    CHECK(sym_parameter_cplx(1, 0, 1, 1).same_multiset(jmu_parameter_cplx({1, 0}, {1, 0}, 1)));
    const ArchParameter p = sym_parameter_cplx(1, 0, 1, 3);
    CHECK(std::get<CharSummand>(p.summands[0]) == CharSummand{h(9), h(-3)});
    const Weight mu(2, K, {{1, 0}, {1, 0}});
    const CplxParams c = cuspidal_params_cplx(sym_weight(mu, 3).at(0), sym_weight(mu, 3).at(1), 3);
    CHECK(c.a[0] == h(9));
    CHECK(c.b[0] == h(-3));
}

TEST_CASE("property: transfer matches J_mu of the transferred weight") {
    Rng rng(31);
    for (int t = 0; t < 150; ++t) {
        const FieldSignature sig = random_signature(rng, 2, 2);
        const Weight mu = random_pure(rng, 2, sig, 10);
        const Int w = *purity_weight(mu);
        for (int r = 1; r <= 5; ++r) {
            const Weight s = sym_weight(mu, r);
            CHECK(*purity_weight(s) == r * w);
            if (purity(mu).strongly_pure == Tri::Yes) CHECK(purity(s).strongly_pure == Tri::Yes);
            for (const Place& p : sig.places()) {
                const Int a = mu.at(p.embedding)[0], b = mu.at(p.embedding)[1];
                if (p.kind == PlaceKind::Complex) {
                    CHECK(sym_parameter_cplx(a, b, w, r).same_multiset(jmu_parameter(s, p)));
                    continue;
                }
                std::optional<int> eps;
                if (r % 2 == 0) {
                    // omega_{Sym^r}(-1) = omega(-1)^{r(r+1)/2}
                    int omega = 1;
                    for (int k = 0; k < r * (r + 1) / 2; ++k) omega *= gl2_real_central_parity(a, b);
                    eps = jmu_sign_from_central(omega, r + 1);
                }
                CHECK(sym_parameter_real(a - b + 1, w, r).same_multiset(jmu_parameter(s, p, eps)));
            }
        }
    }
}

TEST_CASE("compatibility feasibility") {
    // imaginary quadratic, a = b, w != 2a
    for (Int a = -3; a <= 3; ++a)
        for (Int w = -4; w <= 4; ++w) {
            if (w == 2 * a) continue;
            const Weight mu(2, K, {{a, a}, {w - a, w - a}});
            for (int r = 1; r <= 4; ++r) CHECK(!sym_compat_necessary(mu, r).all);
        }
    // totally real: always feasible, with an explicit twist
    for (Int a = -3; a <= 3; ++a)
        for (Int b = -3; b <= a; ++b)
            for (int r = 1; r <= 4; ++r) {
                const Weight mu = Weight::parallel(2, FieldSignature(2, 0), {a, b});
                const SymCompatReport rep = sym_compat_necessary(mu, r);
                CHECK(rep.all);
                REQUIRE(rep.j.has_value());
                const Int w = a + b;
                const Int fl = (w >= 0) ? w / 2 : -((-w + 1) / 2);
                CHECK(*rep.j == fl - r * w);
                // and the twist really makes Sym^r x Sym^(r-1) interlace
                if (r >= 2) {
                    const Weight big = sym_weight(mu, r);
                    const Weight small = twist(sym_weight(mu, r - 1), *rep.j);
                    CHECK(interlaces(big, small));
                }
            }
    // r = 1, mu = (0, 0): 0 >= w >= 0
    CHECK(sym_compat_necessary(Weight(2, K, {{0, 0}, {0, 0}}), 1).all);
    CHECK(!sym_compat_necessary(Weight(2, K, {{0, 0}, {1, 1}}), 1).all);
    CHECK(!sym_compat_necessary(Weight(2, K, {{0, 0}, {1, 1}}), 1).j.has_value());
}

TEST_CASE("Sym³ critical sets") {
    CHECK(sym3_critical_set(Weight::parallel(2, Q, {1, -1})) == CriticalSet::interval(-1, 1));
    for (Int a = -6; a <= 6; ++a)
        for (Int b = -6; b <= a; ++b)
            for (const auto& sig : {Q, FieldSignature(1, 1), FieldSignature(2, 2)}) {
                const Weight mu = Weight::parallel(2, sig, {a, b});
                const CriticalSet c = sym3_critical_set(mu);
                CHECK(c == CriticalSet::interval(-2 * a - b, -a - 2 * b));
                CHECK(c == oracle::sym3_by_gamma(mu));
            }
}

TEST_CASE("property: Sym³ over CM fields matches the Gamma oracle") {
    Rng rng(77);
    for (int t = 0; t < 200; ++t) {
        const Weight mu = random_pure(rng, 2, FieldSignature(0, static_cast<int>(uniform(rng, 1, 2)), {}, true), 10);
        CHECK(sym3_critical_set(mu) == oracle::sym3_by_gamma(mu));
    }
}

TEST_CASE("factorization") {
    CHECK(factorization_check_cplx(1, 0, 1, 1));
    CHECK(factorization_check_cplx(1, 0, 1, 2));
    CHECK(factorization_check_cplx(1, 0, 1, 3));
    CHECK(gl2_central_parameter_cplx(3, 1, 5).same_multiset(
        {PlaceKind::Complex, {CharSummand{HalfInt::of(4), HalfInt::of(6)}}}));
    Rng rng(4);
    for (int t = 0; t < 100; ++t) {
        Int a = uniform(rng, -10, 10), b = uniform(rng, -10, 10);
        if (a < b) std::swap(a, b);
        const Int w = uniform(rng, -10, 10);
        for (int r = 1; r <= 4; ++r) CHECK(factorization_check_cplx(a, b, w, r));
        CHECK(factorization_check_real(a, b));
    }
}

}
