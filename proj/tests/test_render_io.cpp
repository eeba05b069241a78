#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <r110/engine.hpp>
#include <r110/ether.hpp>
#include <r110/render.hpp>

#include <sstream>

using namespace r110;

namespace {

SpacetimeDiagram tiny() {
    SpacetimeDiagram d;
    d.rows.push_back(Row::from_string("010"));
    d.rows.push_back(Row::from_string("111"));
    return d;
}

}  // namespace

TEST_CASE("pbm output, byte for byte") {
    CHECK(render_pbm(tiny()) == "P1\n3 2\n010\n111\n");
}

TEST_CASE("pbm header counts rows, not steps") {
    SpacetimeDiagram d = evolve(ether_row(14), 28);
    std::string pbm = render_pbm(d);
    CHECK(pbm.substr(0, 9) == "P1\n14 29\n");

    // body parses back to the diagram
    std::istringstream is(pbm);
    std::string magic, line;
    int w = 0, h = 0;
    is >> magic >> w >> h;
    REQUIRE(magic == "P1");
    REQUIRE(w == 14);
    REQUIRE(h == 29);
    std::getline(is, line);  // eat the newline
    for (int t = 0; t < h; ++t) {
        REQUIRE(std::getline(is, line));
        CHECK(line == d.rows[static_cast<size_t>(t)].to_string());
    }
    CHECK(!std::getline(is, line));
}

TEST_CASE("every pbm row is exactly width characters of 0/1") {
    SpacetimeDiagram d = evolve(ether_row(70), 10);
    std::istringstream is(render_pbm(d));
    std::string line;
    std::getline(is, line);
    std::getline(is, line);
    int rows = 0;
    while (std::getline(is, line)) {
        CHECK(line.size() == 70u);
        CHECK(line.find_first_not_of("01") == std::string::npos);
        ++rows;
    }
    CHECK(rows == 11);
}

TEST_CASE("ascii art uses solid blocks and dots") {
    std::string art = render_ascii(tiny());
    CHECK(art == "·█·\n███\n");
}

TEST_CASE("highlight mask overlays upper and lower case marks") {
    SpacetimeDiagram d = tiny();
    SpacetimeDiagram mask;
    mask.rows.push_back(Row::from_string("110"));
    mask.rows.push_back(Row::from_string("001"));
    // masked cells: X where the cell is 1, x where it is 0
    CHECK(render_ascii(d, &mask) == "xX·\n██X\n");
}

TEST_CASE("degenerate inputs are rejected") {
    CHECK_THROWS(render_pbm(SpacetimeDiagram{}));
    CHECK_THROWS(render_ascii(SpacetimeDiagram{}));

    SpacetimeDiagram d = tiny();
    SpacetimeDiagram bad_mask;
    bad_mask.rows.push_back(Row::from_string("11"));
    bad_mask.rows.push_back(Row::from_string("00"));
    CHECK_THROWS(render_ascii(d, &bad_mask));
}
