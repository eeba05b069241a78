#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <r110/error_model.hpp>
#include <r110/errors.hpp>
#include <r110/ether.hpp>

#include "helpers.hpp"

#include <random>
#include <sstream>

using namespace r110;

TEST_CASE("model validation and counts") {
    ErrorModel m;  // defaults p=0.1, M=10
    CHECK_NOTHROW(m.validate());
    CHECK(m.site_count() == 21);
    CHECK(m.event_count() == 22);

    CHECK_NOTHROW((ErrorModel{0.0, 0}).validate());
    CHECK_NOTHROW((ErrorModel{1.0, 3}).validate());
    CHECK_THROWS((ErrorModel{-0.1, 10}).validate());
    CHECK_THROWS((ErrorModel{1.5, 10}).validate());
    CHECK_THROWS((ErrorModel{0.1, -1}).validate());
}

TEST_CASE("event enumeration order and probabilities") {
    ErrorModel m{0.1, 2};
    auto events = enumerate_events(m);
    REQUIRE(events.size() == 6);
    CHECK(!events[0].flip);
    for (int k = 0; k < 5; ++k) {
        CHECK(events[static_cast<size_t>(k + 1)].flip);
        CHECK(events[static_cast<size_t>(k + 1)].offset == k - 2);
    }

    CHECK(base_prob(m, events[0]) == doctest::Approx(0.9).epsilon(1e-15));
    double total = 0.0;
    for (const auto& e : events) {
        if (e.flip)
            CHECK(base_prob(m, e) == doctest::Approx(0.1 / 5).epsilon(1e-15));
        total += base_prob(m, e);
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("offsets map to lattice sites around the midpoint") {
    LatticeConfig c{112, 80};
    CHECK(lattice_site(c, 0) == 56);
    CHECK(lattice_site(c, 10) == 66);
    CHECK(lattice_site(c, -10) == 46);
    // wrap in both directions
    CHECK(lattice_site(c, 60) == 4);
    CHECK(lattice_site(c, -60) == 108);

    ErrorModel m{0.1, 10};
    CHECK(site_label(m, {false, 0}) == "NONE");
    CHECK(site_label(m, {true, -10}) == "1");
    CHECK(site_label(m, {true, 0}) == "11");
    CHECK(site_label(m, {true, 10}) == "21");
}

TEST_CASE("hand-checkable mass identity on a constructed table") {
    // 15 of the 21 flips preserve the initial state; the no-error event
    // always does. The preserved mass must be 1 - p + p K / (2M+1).
    ErrorModel m{0.1, 10};
    OutcomeTable t;
    t.model = m;
    t.initial_state = {true, {"g49"}};
    AsymptoticState other{true, {"g50"}};
    auto events = enumerate_events(m);
    for (size_t i = 0; i < events.size(); ++i) {
        bool preserve = !events[i].flip || i <= 15;  // flips 1..15 preserve
        t.entries.push_back({events[i], base_prob(m, events[i]),
                             preserve ? t.initial_state : other});
    }

    auto dist = outcome_distribution(t);
    double expect = 1.0 - 0.1 + 0.1 * 15.0 / 21.0;
    CHECK(std::abs(dist["g49"] - expect) < 1e-12);
    CHECK(std::abs(dist["g50"] - (0.1 * 6.0 / 21.0)) < 1e-12);
    double sum = 0.0;
    for (const auto& [fp, mass] : dist)
        sum += mass;
    CHECK(std::abs(sum - 1.0) < 1e-12);
}

TEST_CASE("sweep over the bare background") {
    const Catalog& cat = repo_catalog();
    LatticeConfig cfg{112, 80};
    ErrorModel m{0.1, 10};
    Row r0 = ether_row(112);

    OutcomeTable t = sweep(r0, cfg, m, cat, {72, 1});
    CHECK(t.initial_state.fingerprint() == "ether");
    REQUIRE(t.entries.size() == 22);
    CHECK(!t.no_error().event.flip);
    CHECK(t.no_error().state.fingerprint() == "ether");

    // flips at the same tile phase share their fate
    for (const auto& a : t.entries) {
        if (!a.event.flip)
            continue;
        for (const auto& b : t.entries) {
            if (!b.event.flip)
                continue;
            int pa = lattice_site(cfg, a.event.offset) % 14;
            int pb = lattice_site(cfg, b.event.offset) % 14;
            if (pa == pb)
                CHECK(a.state == b.state);
        }
    }

    SUBCASE("worker count does not change the table") {
        for (int jobs : {2, 5, 8}) {
            OutcomeTable tj = sweep(r0, cfg, m, cat, {72, jobs});
            CHECK(outcome_csv(tj) == outcome_csv(t));
        }
    }
}

TEST_CASE("sweep rejects bad input") {
    const Catalog& cat = repo_catalog();
    ErrorModel m{0.1, 10};

    SUBCASE("turbulent initial row") {
        std::mt19937 rng(3);
        Row soup(112);
        for (int i = 0; i < 112; ++i)
            soup.set(i, static_cast<int>(rng() & 1));
        CHECK_THROWS_AS(sweep(soup, LatticeConfig{112, 80}, m, cat, {72, 1}),
                        TurbulentInitial);
    }
    SUBCASE("row width must match the config") {
        CHECK_THROWS(sweep(ether_row(140), LatticeConfig{112, 80}, m, cat, {72, 1}));
    }
    SUBCASE("window wider than the lattice") {
        CHECK_THROWS(sweep(ether_row(112), LatticeConfig{112, 80}, ErrorModel{0.1, 60},
                           cat, {72, 1}));
    }
    SUBCASE("steps outside the evolution bound") {
        CHECK_THROWS(sweep(ether_row(112), LatticeConfig{112, 200}, m, cat, {72, 1}));
    }
}

TEST_CASE("csv layout") {
    ErrorModel m{0.1, 1};
    OutcomeTable t;
    t.model = m;
    t.initial_state = {true, {"g49"}};
    auto events = enumerate_events(m);
    t.entries.push_back({events[0], 0.9, t.initial_state});
    t.entries.push_back({events[1], 0.1 / 3, t.initial_state});
    t.entries.push_back({events[2], 0.1 / 3, AsymptoticState{}});
    t.entries.push_back({events[3], 0.1 / 3, {true, {"g15", "g49"}}});

    std::string csv = outcome_csv(t);
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);
    CHECK(line == "site,base_prob,state_fingerprint,changed,settled");
    std::getline(is, line);
    CHECK(line == "NONE,0.90000000000000002,g49,0,1");
    std::getline(is, line);
    CHECK(line == "1,0.033333333333333333,g49,0,1");
    std::getline(is, line);
    CHECK(line == "2,0.033333333333333333,UNSETTLED,1,0");
    std::getline(is, line);
    CHECK(line == "3,0.033333333333333333,g15+g49,1,1");
    CHECK(!std::getline(is, line));
}
