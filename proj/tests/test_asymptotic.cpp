#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <r110/asymptotic.hpp>
#include <r110/engine.hpp>
#include <r110/ether.hpp>

#include "helpers.hpp"

#include <random>

using namespace r110;

namespace {
constexpr int kWindow = 72;  // >= twice the longest catalogued period (36)
}

TEST_CASE("pure background settles to the empty state") {
    SpacetimeDiagram d = evolve(ether_row(140), 100);
    AsymptoticState s = asymptotic_state(d, repo_catalog(), kWindow);
    CHECK(s.settled);
    CHECK(s.ids.empty());
    CHECK(s.fingerprint() == "ether");
}

TEST_CASE("a lone glider settles to itself, moving or not") {
    const Catalog& cat = repo_catalog();
    LatticeConfig cfg{280, 100};
    for (const char* id : {"g49", "g64", "g01"}) {
        Row r = splice(cfg, cat, {{id, 140, 0}});
        AsymptoticState s = asymptotic_state(evolve(r, 100), cat, kWindow);
        CHECK(s.settled);
        CHECK(s.ids == std::vector<std::string>{id});
        CHECK(s.fingerprint() == id);
    }
}

TEST_CASE("the reference collision settles to its products, but not early") {
    const Catalog& cat = repo_catalog();
    LatticeConfig cfg{560, 420};
    Row r = splice(cfg, cat, {{"g49", 240, 0}, {"g47", 294, 0}});
    REQUIRE(will_collide(cat, {"g49", 240, 0}, {"g47", 294, 0}, cfg));

    SpacetimeDiagram d = evolve(r, 420);
    AsymptoticState s = asymptotic_state(d, cat, kWindow);
    CHECK(s.settled);
    CHECK(s.fingerprint() == "g41+g61");

    // before impact the pair itself is the settled content
    AsymptoticState pre = asymptotic_state(evolve(r, 120), cat, kWindow);
    CHECK(pre.settled);
    CHECK(pre.fingerprint() == "g49+g47");

    // a window ending mid-collision reports unsettled
    SpacetimeDiagram mid = evolve(r, 200);
    AsymptoticState u = asymptotic_state(mid, cat, kWindow);
    CHECK(!u.settled);
    CHECK(u.fingerprint() == "UNSETTLED");
    CHECK(u.ids.empty());
}

TEST_CASE("random soup does not settle") {
    std::mt19937 rng(77);
    Row r(280);
    for (int i = 0; i < 280; ++i)
        r.set(i, static_cast<int>(rng() & 1));
    AsymptoticState s = asymptotic_state(evolve(r, 200), repo_catalog(), kWindow);
    CHECK(!s.settled);
}

TEST_CASE("window preconditions are enforced") {
    const Catalog& cat = repo_catalog();
    SpacetimeDiagram d = evolve(ether_row(140), 100);
    // shorter than twice the longest catalogued period (2 * 30)
    CHECK_THROWS_AS(asymptotic_state(d, cat, 59), std::invalid_argument);
    CHECK_THROWS_AS(asymptotic_state(d, cat, 0), std::invalid_argument);
    CHECK(asymptotic_state(d, cat, 60).settled);
    // diagram shorter than the window
    SpacetimeDiagram tiny = evolve(ether_row(140), 30);
    CHECK_THROWS_AS(asymptotic_state(tiny, cat, kWindow), std::invalid_argument);
}

TEST_CASE("fingerprint strings parse back exactly") {
    AsymptoticState unsettled;
    CHECK(parse_fingerprint("UNSETTLED") == unsettled);

    AsymptoticState empty{true, {}};
    CHECK(parse_fingerprint("ether") == empty);

    AsymptoticState pair{true, {"g15", "g41", "g61"}};
    CHECK(parse_fingerprint("g15+g41+g61") == pair);
    CHECK(parse_fingerprint(pair.fingerprint()) == pair);

    CHECK_THROWS(parse_fingerprint(""));
    CHECK_THROWS(parse_fingerprint("g49+"));
    CHECK_THROWS(parse_fingerprint("+g49"));
    CHECK_THROWS(parse_fingerprint("g49++g50"));
    CHECK_THROWS(parse_fingerprint("g49 g50"));
}

TEST_CASE("equality is structural") {
    AsymptoticState a{true, {"g49"}};
    AsymptoticState b{true, {"g49"}};
    AsymptoticState c{true, {"g50"}};
    CHECK(a == b);
    CHECK(!(a == c));
    CHECK(!(a == AsymptoticState{}));
}
