#include <doctest.h>

#include <algorithm>

#include "lcrit/branching.hpp"
#include "lcrit/error.hpp"
#include "lcrit/motivic.hpp"
#include "lcrit/random.hpp"

using namespace lcrit;

namespace {
const FieldSignature K(0, 1);
}

TEST_SUITE("motivic") {

TEST_CASE("Hodge data from GL(2) weights") {
    const HodgeData h = hodge_from_gl2_weight(Weight(2, FieldSignature(1, 0), {{3, 1}}));
    CHECK(h.p(0) == 0);
    CHECK(h.q(0) == -3);
    CHECK(h.weight() == -3);
    const HodgeData par = hodge_from_gl2_weight(Weight::parallel(2, FieldSignature(1, 1), {1, 0}));
    for (int e = 0; e < 3; ++e) {
        CHECK(par.p(e) == 1);
        CHECK(par.q(e) == -1);
    }
    CHECK(par.weight() == 0);
    CHECK_THROWS_AS(HodgeData(K, {{1, 1}, {1, 1}}, 2), InputError);
    CHECK_THROWS_AS(HodgeData(K, {{2, 0}, {2, 1}}, 2), InputError);
}

TEST_CASE("Tate twist") {
    const HodgeData h(K, {{3, 0}, {3, 0}}, 3);
    const HodgeData t = tate_twist(h, 2);
    CHECK(t.p(0) == 1);
    CHECK(t.q(1) == -2);
    CHECK(t.weight() == -1);
}

TEST_CASE("classification examples") {
    const HodgeData h(K, {{3, 0}, {3, 0}}, 3);
    // j_iota = p_iota + 1, j_iotabar = q_iotabar
    const auto a = classify(h, {4, 0});
    REQUIRE(a.has_value());
    CHECK(a->A == std::vector<int>{0});
    CHECK(a->Abar == std::vector<int>{1});
    CHECK(a->T.empty());
    const auto t = classify(h, {1, 1});
    REQUIRE(t.has_value());
    CHECK(t->T == std::vector<int>{0, 1});
    CHECK(!classify(h, {10, 10}).has_value());
    const HodgeData r(FieldSignature(1, 0), {{2, -1}}, 1);
    CHECK(classify(r, {0}).has_value());
    CHECK(!classify(r, {-1}).has_value());
    CHECK(!classify(r, {3}).has_value());
}

TEST_CASE("Gamma shifts") {
    const HodgeData h(K, {{1, -1}, {1, -1}}, 0);
    const auto g = motivic_gamma(h);
    CHECK(g == std::vector<GammaShift>{{0, 1}, {1, 1}});
    const HodgeData r(FieldSignature(1, 0), {{2, -1}}, 1);
    CHECK(motivic_gamma(r) == std::vector<GammaShift>{{0, 1}});
}

TEST_CASE("property: partition law and compatible data") {
    Rng rng(21);
    for (int t = 0; t < 300; ++t) {
        const FieldSignature sig = random_signature(rng, 2, 2);
        const auto [mu, lam] = random_compatible_pair(rng, 2, sig, 10);
        const HodgeData h = tate_twist(hodge_from_gl2_weight(mu), 1);
        for (Int m : compat_set(mu, lam).members()) {
            std::vector<Int> j;
            for (const auto& c : lam.comps()) j.push_back(c[0] + m);
            const auto type = classify(h, j);
            REQUIRE(type.has_value());
            CHECK(type->A.empty());
            CHECK(type->T.size() + type->A.size() + type->Abar.size() == static_cast<std::size_t>(sig.degree()));
        }
        // random infinity types: partition law and conj(A) = Abar
        std::vector<Int> j(sig.degree());
        for (auto& x : j) x = uniform(rng, -12, 12);
        if (const auto type = classify(h, j)) {
            CHECK(type->T.size() + type->A.size() + type->Abar.size() == static_cast<std::size_t>(sig.degree()));
            std::vector<int> conjA;
            for (int e : type->A) conjA.push_back(sig.conjugate(e));
            std::sort(conjA.begin(), conjA.end());
            std::vector<int> abar = type->Abar;
            std::sort(abar.begin(), abar.end());
            CHECK(conjA == abar);
        }
        // d Gamma factors in all, unless some Hodge number sits in the middle
        bool middle = false;
        for (int e = 0; e < sig.degree(); ++e) middle = middle || 2 * h.p(e) == h.weight() || 2 * h.q(e) == h.weight();
        if (!middle) CHECK(motivic_gamma(h).size() == static_cast<std::size_t>(sig.degree()));
    }
}

}
