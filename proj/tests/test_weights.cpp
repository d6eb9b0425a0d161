#include <doctest.h>

#include "lcrit/error.hpp"
#include "lcrit/random.hpp"
#include "lcrit/weights.hpp"

using namespace lcrit;

namespace {
const FieldSignature Q(1, 0);
const FieldSignature K(0, 1);
}

TEST_SUITE("weights") {

TEST_CASE("construction checks") {
    CHECK_THROWS_AS(Weight(2, Q, {{0, 1}}), InputError);  // not dominant
    CHECK_THROWS_AS(Weight(2, Q, {{1, 0, 0}}), InputError);
    CHECK_THROWS_AS(Weight(2, K, {{1, 0}}), InputError);
}

TEST_CASE("purity examples") {
    auto r = purity(Weight(2, Q, {{3, 1}}));
    CHECK(r.is_pure);
    CHECK(*r.w == 4);

    r = purity(Weight(2, K, {{0, 0}, {5, 5}}));
    CHECK(r.is_pure);
    CHECK(*r.w == 5);
    CHECK(r.strongly_pure == Tri::Yes);  // imaginary quadratic fields are CM
    CHECK(!purity(Weight(3, Q, {{1, 0, 0}})).is_pure);
    CHECK_THROWS_AS(require_pure(Weight(3, Q, {{1, 0, 0}})), InputError);
}

TEST_CASE("strong purity is tri-state") {
    const FieldSignature mixed(1, 1);
    // pure but not parallel over a field with both kinds of places
    const Weight mu(2, mixed, {{1, 0}, {1, 0}, {1, 0}});
    CHECK(purity(mu).strongly_pure == Tri::Yes);  // parallel
    const Weight nu(2, mixed, {{1, 0}, {2, -1}, {2, -1}});
    REQUIRE(purity(nu).is_pure);
    CHECK(purity(nu).strongly_pure == Tri::NotVerified);
    // a Galois permutation moving the real embedding into the pair
    const FieldSignature g(1, 1, {{1, 0, 2}});
    const Weight nu_g(2, g, {{1, 0}, {2, -1}, {2, -1}});
    CHECK(purity(nu_g).strongly_pure == Tri::No);
}

TEST_CASE("dual and twist") {
    CHECK(dual(Weight(2, Q, {{3, 1}})).at(0) == Tuple{-1, -3});
    CHECK(dual(Weight(3, Q, {{0, 0, 0}})).at(0) == Tuple{0, 0, 0});
    CHECK(twist(Weight(2, Q, {{1, -1}}), 2).at(0) == Tuple{3, 1});
    CHECK(twist(Weight(1, Q, {{0}}), -3).at(0) == Tuple{-3});
}

TEST_CASE("sheaf condition") {
    const FieldSignature Q2(2, 0);
    CHECK(sheaf_condition(Weight(1, Q2, {{4}, {4}})));
    CHECK(!sheaf_condition(Weight(1, Q2, {{4}, {2}})));
    CHECK(sheaf_condition(Weight(1, K, {{1}, {3}})));
}

TEST_CASE("property: dual, twist and purity") {
    Rng rng(11);
    for (int t = 0; t < 300; ++t) {
        const int n = static_cast<int>(uniform(rng, 1, 6));
        const FieldSignature sig = random_signature(rng, 3, 3);
        const Weight mu = random_strongly_pure(rng, n, sig, 10);
        const Int w = *purity_weight(mu);
        CHECK(dual(dual(mu)) == mu);
        CHECK(*purity_weight(dual(mu)) == -w);
        const Int m = uniform(rng, -7, 7);
        CHECK(twist(twist(mu, m), -m) == mu);
        CHECK(*purity_weight(twist(mu, m)) == w + 2 * m);
        CHECK(sheaf_condition(mu));
        CHECK(purity(mu).strongly_pure != Tri::No);
    }
}

TEST_CASE("pure but not strongly pure can fail the sheaf condition") {
    const Weight mu(1, FieldSignature(1, 1), {{1}, {0}, {2}});
    REQUIRE(purity(mu).is_pure);
    CHECK(!sheaf_condition(mu));
}

}

TEST_SUITE("weights") {
TEST_CASE("without Galois data a non-CM totally imaginary field is not verified") {
    const Weight mu(1, FieldSignature(0, 2), {{0}, {2}, {1}, {1}});
    REQUIRE(purity(mu).is_pure);
    CHECK(purity(mu).strongly_pure == Tri::NotVerified);
    const Weight cm(1, FieldSignature(0, 2, {}, true), {{0}, {2}, {1}, {1}});
    CHECK(purity(cm).strongly_pure == Tri::Yes);
}
}
