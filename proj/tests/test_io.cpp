#include <doctest.h>

#include <random>

#include <padic/config_io.hpp>

#include "support/generators.hpp"

using namespace padic;

TEST_CASE("parse_config: well-formed documents") {
    FrameConfig onb = parse_config(R"({"p": 2, "d": 2, "vectors": [["1","0"],["0","1"]]})");
    CHECK(onb.ctx.p() == 2);
    CHECK(onb.d == 2);
    CHECK(onb.n() == 2);
    CHECK(onb == gen::onb(PrimeContext(2), 2));

    FrameConfig frac = parse_config(R"({"p": 2, "d": 2, "vectors": [["1/2","3"],["1","0"]]})");
    CHECK(frac.vectors[0].coords[0] == make_rational(1, 2));
    CHECK(frac.vectors[0].coords[1] == 3);
}

TEST_CASE("parse_config: diagnostics") {
    CHECK_THROWS_WITH_AS(parse_config(R"({"p": 4, "d": 1, "vectors": [["1"]]})"),
                         doctest::Contains("not prime"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"p": 2, "d": 0, "vectors": [[]]})"),
                         doctest::Contains("\"d\""), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"p": 2, "d": 2, "vectors": []})"),
                         doctest::Contains("vectors"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"p": 2, "d": 2, "vectors": [["1","0"],["1"]]})"),
                         doctest::Contains("vectors[1]"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"p": 2, "d": 1, "vectors": [["x"]]})"),
                         doctest::Contains("vectors[0][0]"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("not json"), doctest::Contains("invalid JSON"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"d": 1, "vectors": [["1"]]})"),
                         doctest::Contains("missing field \"p\""), ConfigError);
}

TEST_CASE("config round-trip is bit-exact on randomized configs") {
    std::mt19937_64 rng(701);
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        PrimeContext ctx(p);
        for (int trial = 0; trial < 40; ++trial) {
            std::uniform_int_distribution<std::size_t> pick_d(1, 5), pick_n(1, 6);
            FrameConfig c = gen::random_config(rng, ctx, pick_d(rng), pick_n(rng), 100);
            FrameConfig back = parse_config(render_config(c));
            CHECK(back == c);
        }
    }
}

TEST_CASE("absolute value strings round-trip") {
    for (long long e : {-12, -1, 0, 3, 40}) {
        AbsValue a = AbsValue::power(5, e);
        CHECK(parse_absvalue(render_absvalue(a), 5) == a);
    }
    CHECK(parse_absvalue("0", 3).is_zero());
    CHECK_THROWS_AS(parse_absvalue("5^2", 3), ConfigError);
    CHECK_THROWS_AS(parse_absvalue("junk", 3), ConfigError);
}

TEST_CASE("search spec documents") {
    SearchSpec spec = parse_search_spec(R"({
        "p": 2, "d": 1, "n": 3, "mode": "q1",
        "entries": ["1", "-1"], "symmetry_pruning": false,
        "limit": 10, "workers": 2, "budget": 500
    })");
    CHECK(spec.p == 2);
    CHECK(spec.n == 3);
    CHECK(spec.mode == SearchMode::Q1);
    CHECK(spec.entries.size() == 2);
    CHECK_FALSE(spec.symmetry_pruning);
    CHECK(spec.limit == 10);
    CHECK(spec.workers == 2);
    CHECK(spec.budget == 500);

    SearchSpec equi = parse_search_spec(R"({
        "p": 2, "d": 1, "n": 2, "mode": "equiangular", "a": "1", "gamma": "2^0"
    })");
    REQUIRE(equi.equi_a.has_value());
    CHECK(*equi.equi_a == 1);
    REQUIRE(equi.equi_gamma.has_value());
    CHECK(*equi.equi_gamma == AbsValue::one(2));

    // spec echo round-trips through JSON
    SearchSpec again = search_spec_from_json(search_spec_to_json(spec));
    CHECK(again.p == spec.p);
    CHECK(again.d == spec.d);
    CHECK(again.n == spec.n);
    CHECK(again.mode == spec.mode);
    CHECK(again.entries == spec.entries);
    CHECK(again.limit == spec.limit);
    CHECK(again.budget == spec.budget);

    CHECK_THROWS_WITH_AS(parse_search_spec(R"({"p": 2, "d": 1, "n": 1, "mode": "nope"})"),
                         doctest::Contains("unknown mode"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_search_spec(R"({"p": 2, "d": 2, "n": 3, "mode": "zauner"})"),
                         doctest::Contains("n = d^2"), ShapeError);
}

TEST_CASE("report serialization keeps every exact quantity as a string") {
    FrameConfig c = parse_config(R"({"p": 3, "d": 3, "vectors": [["1","0","0"],["0","1","0"],["0","0","1"]]})");
    WelchReport r = welch_general(c, 1);
    Json doc = welch_to_json(r);
    CHECK(doc["lhs"] == "3^-1");
    CHECK(doc["rhs"] == "3^-1");
    CHECK(doc["holds"] == true);
    CHECK(doc["equality"] == true);
    CHECK(doc["precondition"]["b"] == "1");
    CHECK(parse_absvalue(doc["lhs"].get<std::string>(), 3) == r.lhs);
    CHECK(parse_rational(doc["precondition"]["b"].get<std::string>()) == r.precondition.b);

    // no JSON number anywhere in the p-adic quantities
    CHECK(doc["diag_term"].is_string());
    CHECK(doc["max_offdiag"]["value"].is_string());
}

TEST_CASE("zauner and equiangular reports serialize their interpretation") {
    FrameConfig c = parse_config(R"({"p": 2, "d": 1, "vectors": [["1"]]})");
    ZaunerReport z = zauner_check(c, false);
    Json doc = zauner_to_json(z);
    CHECK(doc["verdict"] == true);
    CHECK(doc["offdiag_vacuous"] == true);
    CHECK(doc["target_interpretation"] == "|d^2|_p (default reading)");

    EquiangularReport e = equiangular_check(c, Rational(1), AbsValue::one(2));
    Json edoc = equiangular_to_json(e);
    CHECK(edoc["verdict"] == true);
    CHECK(edoc["a"] == "1");
    CHECK(edoc["gamma"] == "2^0");
}
