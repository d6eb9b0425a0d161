#include <doctest.h>

#include "lcrit/error.hpp"
#include "lcrit/json_io.hpp"
#include "lcrit/random.hpp"
#include "lcrit/symmetric.hpp"

using namespace lcrit;
using io::json;

namespace {
// print, parse the text, read back
json reparse(const json& j) { return json::parse(j.dump()); }
}  // namespace

TEST_SUITE("json") {

TEST_CASE("field signatures") {
    for (const auto& sig : {FieldSignature(1, 0), FieldSignature(0, 2, {}, true), FieldSignature(1, 1, {{1, 0, 2}})})
        CHECK(io::field_from_json(reparse(io::to_json(sig))) == sig);
    CHECK(io::field_from_json(json::parse(R"({"r1": 2, "r2": 0})")) == FieldSignature(2, 0));
    CHECK_THROWS_AS(io::field_from_json(json::parse(R"({"r1": "x", "r2": 0})")), InputError);
    CHECK_THROWS_AS(io::field_from_json(json::parse(R"({"r2": 0})")), InputError);
    CHECK_THROWS_AS(io::field_from_json(json::parse(R"({"r1": 0, "r2": 0})")), InputError);
}

TEST_CASE("weights") {
    Rng rng(1);
    for (int t = 0; t < 100; ++t) {
        const FieldSignature sig = random_signature(rng, 3, 3);
        const Weight mu = random_pure(rng, static_cast<int>(uniform(rng, 1, 5)), sig, 10);
        CHECK(io::weight_from_json(reparse(io::to_json(mu)), sig) == mu);
    }
    const FieldSignature K(0, 1);
    CHECK(io::weight_from_json(json::parse(R"({"n": 2, "parallel": [1, 0]})"), K) ==
          Weight::parallel(2, K, {1, 0}));
    CHECK_THROWS_AS(io::weight_from_json(json::parse(R"({"n": 2, "components": {"0": [1, 0]}})"), K), InputError);
    CHECK_THROWS_AS(io::weight_from_json(json::parse(R"({"n": 2, "components": {"0": [0, 1], "1": [1, 0]}})"), K),
                    InputError);
}

TEST_CASE("critical sets and half integers") {
    for (const auto& c : {CriticalSet::none(), CriticalSet::interval(-3, 2), CriticalSet::interval(0, 0)})
        CHECK(io::critical_set_from_json(reparse(io::to_json(c))) == c);
    for (Int t = -9; t <= 9; ++t) CHECK(io::halfint_from_json(reparse(io::to_json(HalfInt{t}))) == HalfInt{t});
    CHECK(io::to_json(HalfInt{3}) == "3/2");
    CHECK_THROWS_AS(io::halfint_from_json(json("3/4")), InputError);
}

TEST_CASE("parameters") {
    const ArchParameter a = sym_parameter_real(3, 2, 4);
    CHECK(io::parameter_from_json(reparse(io::to_json(a))).summands == a.summands);
    const ArchParameter b = sym_parameter_cplx(4, -1, 3, 3);
    CHECK(io::parameter_from_json(reparse(io::to_json(b))).summands == b.summands);
    const ArchParameter c = tensor(sym_parameter_real(3, 2, 1), sym_parameter_real(3, 2, 1));
    CHECK(io::parameter_from_json(reparse(io::to_json(c))).summands == c.summands);
}

TEST_CASE("degree reports") {
    for (int n = 1; n <= 6; ++n) {
        const DegreeReport d = degrees(n, FieldSignature(2, 3));
        CHECK(io::degrees_from_json(reparse(io::to_json(d))) == d);
    }
}

TEST_CASE("period expressions") {
    const Sym3Derivation d = derive_sym3();
    for (const PeriodExpr* e : {&d.rhs, &d.lhs, &d.gl3_input, &d.gl2_input, &d.gl3_normal})
        CHECK(io::period_expr_from_json(reparse(io::to_json(*e))) == *e);
    for (const auto& s : {SymSign::plus(), SymSign::minus(), -(SymSign::of("a") * SymSign::of("b"))})
        CHECK(io::sign_from_json(reparse(io::to_json(s))) == s);
    for (const auto& [atom, k] : d.gl3_input.terms) CHECK(io::atom_from_json(reparse(io::to_json(atom))) == atom);
    // canonical: printing twice gives the same text
    CHECK(io::to_json(d.rhs).dump() == io::to_json(io::period_expr_from_json(io::to_json(d.rhs))).dump());
}

TEST_CASE("Hodge data and critical types") {
    const FieldSignature K(0, 1);
    const HodgeData h(K, {{3, 0}, {3, 0}}, 3);
    CHECK(io::hodge_from_json(reparse(io::to_json(h)), K) == h);
    const auto t = classify(h, {4, 0});
    CHECK(io::crit_type_from_json(reparse(io::to_json(t))) == t);
    const std::optional<CritType> none;
    CHECK(io::crit_type_from_json(reparse(io::to_json(none))) == none);
}

TEST_CASE("Hecke characters") {
    const FieldSignature F(2, 0);
    const auto chi = io::hecke_from_json(json::parse(R"({"infinity_type": [1, 1], "finite_parities": [1, -1]})"), F);
    CHECK(hecke_signature(chi) == std::vector<int>{-1, 1});
}

}
