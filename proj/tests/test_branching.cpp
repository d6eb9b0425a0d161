#include <doctest.h>

#include "lcrit/archimedean.hpp"
#include "lcrit/error.hpp"
#include "lcrit/random.hpp"
#include "oracles.hpp"

using namespace lcrit;

namespace {
const FieldSignature Q(1, 0);
const FieldSignature K(0, 1);

// mu^iota = (1,0) = mu^iotabar, lambda = 0: purity weights 1 and 0.
Weight k_mu() { return Weight(2, K, {{1, 0}, {1, 0}}); }
Weight k_lam() { return Weight(1, K, {{0}, {0}}); }
}  // namespace

TEST_SUITE("branching") {

TEST_CASE("interlacing examples") {
    CHECK(interlaces(Weight(3, Q, {{0, 0, 0}}), Weight(2, Q, {{0, 0}})));
    CHECK(!interlaces(Weight(3, Q, {{0, 0, 0}}), Weight(2, Q, {{1, -1}})));
    CHECK(interlaces(k_mu(), k_lam()));
    CHECK_THROWS_AS(interlaces(Weight(3, Q, {{0, 0, 0}}), Weight(1, Q, {{0}})), InputError);
}

TEST_CASE("compat set examples") {
    CHECK(compat_set(Weight(3, Q, {{0, 0, 0}}), Weight(2, Q, {{1, -1}})).empty());
    CHECK(compat_set(Weight(2, Q, {{5, 2}}), Weight(1, Q, {{-2}})).contains(0));
    CHECK(compat_set(k_mu(), k_lam()) == CriticalSet::interval(-1, 0));
}

TEST_CASE("m bounds examples") {
    CHECK(m_pm_place({1, 0}, {0}, 1, 0, PlaceKind::Complex) == MBounds{-1, 0});
    CHECK(m_pm_place({4, -1}, {0}, 3, 0, PlaceKind::Real) == MBounds{-4, 1});
    CHECK(m_pm_place({0, 0, 0}, {0, 0}, 0, 0, PlaceKind::Real) == MBounds{0, 0});
}

TEST_CASE("closed form examples") {
    CHECK(critical_set_closed_form(k_mu(), k_lam()) == CriticalSet::interval(-1, 0));
    for (const auto& sig : {Q, K, FieldSignature(1, 1), FieldSignature(2, 2)})
        for (int n = 2; n <= 5; ++n) {
            const Weight mu = Weight::parallel(n, sig, Tuple(n, 0));
            const Weight lam = Weight::parallel(n - 1, sig, Tuple(n - 1, 0));
            CHECK(critical_set_closed_form(mu, lam) == CriticalSet::interval(0, 0));
        }
    CHECK_THROWS_AS(critical_set_closed_form(Weight(3, Q, {{0, 0, 0}}), Weight(2, Q, {{1, -1}})), HypothesisError);
}

TEST_CASE("parallel GL2 over totally real fields") {
    for (Int a = -4; a <= 4; ++a)
        for (Int b = -4; b <= a; ++b)
            for (Int l = -6; l <= 6; ++l) {
                const FieldSignature F(2, 0);
                const Weight mu = Weight::parallel(2, F, {a, b});
                const Weight lam = Weight::parallel(1, F, {l});
                const CriticalSet c = compat_set(mu, lam);
                CHECK(c == oracle::compat_by_enumeration(mu, lam));
                CHECK(critical_set_closed_form(mu, lam) == c);
            }
}

TEST_CASE("critical sets are intervals") {
    CHECK_THROWS_AS(CriticalSet::from_members({0, 2}), ConsistencyError);
    CHECK(CriticalSet::from_members({-1, 0, 1}) == CriticalSet::interval(-1, 1));
    CHECK(CriticalSet::interval(2, 1).empty());
}

TEST_CASE("property: compat, closed form, scan and Gamma oracles agree") {
    Rng rng(2024);
    for (int t = 0; t < 300; ++t) {
        const int n = static_cast<int>(uniform(rng, 2, 5));
        const FieldSignature sig = random_signature(rng, 2, 2);
        const auto [mu, lam] = random_compatible_pair(rng, n, sig, 10);
        const CriticalSet c = compat_set(mu, lam);
        REQUIRE(!c.empty());
        CHECK(c == oracle::compat_by_enumeration(mu, lam));
        CHECK(critical_set_closed_form(mu, lam) == c);
        CHECK(critical_set_scan(mu, lam) == c);
        CHECK(oracle::critical_by_gamma(mu, lam) == c);
        if (c.contains(0)) {
            for (const Place& p : sig.places()) {
                const MBounds b =
                    m_pm_place(mu.at(p.embedding), lam.at(p.embedding), *purity_weight(mu), *purity_weight(lam), p.kind);
                CHECK(b.minus <= 0);
                CHECK(0 <= b.plus);
            }
        }
    }
}

TEST_CASE("property: incompatible pure pairs still match the Gamma oracle") {
    Rng rng(99);
    int incompatible = 0;
    for (int t = 0; t < 400; ++t) {
        const int n = static_cast<int>(uniform(rng, 2, 4));
        const FieldSignature sig = random_signature(rng, 2, 1);
        const Weight mu = random_strongly_pure(rng, n, sig, 8);
        const Weight lam = random_strongly_pure(rng, n - 1, sig, 8);
        if (compat_set(mu, lam).empty()) ++incompatible;
        CHECK(critical_set_scan(mu, lam) == oracle::critical_by_gamma(mu, lam));
    }
    CHECK(incompatible > 0);
}

}
