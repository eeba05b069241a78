#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <r110/config_file.hpp>
#include <r110/errors.hpp>

#include <string>

using namespace r110;

namespace {

const char* kFull = R"(# reference pair, stability rule
[lattice]
width = 1120
steps = 800

[placements]
place = g49 590 0
place = g47 700 0

[error]
p = 0.1
half_width = 10

[rule]
kind = stability

[run]
settle_window = 72
seed = 9
catalog = ../data/catalog.txt

[output]
dir = out/fig7
)";

}  // namespace

TEST_CASE("a full config parses field by field") {
    ExperimentConfig c = parse_config(kFull);
    CHECK(c.lattice.width == 1120);
    CHECK(c.lattice.steps == 800);
    REQUIRE(c.placements.size() == 2);
    CHECK((c.placements[0] == Placement{"g49", 590, 0}));
    CHECK((c.placements[1] == Placement{"g47", 700, 0}));
    CHECK(c.error.p == 0.1);
    CHECK(c.error.half_width == 10);
    CHECK(c.rule.kind == RuleKind::STABILITY);
    CHECK(c.settle_window == 72);
    CHECK(c.seed == 9);
    CHECK(c.catalog_path == "../data/catalog.txt");
    CHECK(c.output_dir == "out/fig7");
}

TEST_CASE("defaults apply when optional keys are absent") {
    ExperimentConfig c = parse_config("[lattice]\nwidth = 140\nsteps = 50\n");
    CHECK(c.placements.empty());
    CHECK(c.error.p == 0.1);
    CHECK(c.error.half_width == 10);
    CHECK(c.rule.kind == RuleKind::STABILITY);
    CHECK(c.settle_window == 72);
    CHECK(c.seed == 1);
    CHECK(c.catalog_path.empty());
    CHECK(c.output_dir.empty());
}

TEST_CASE("serialization round trips and is canonical") {
    ExperimentConfig c = parse_config(kFull);
    std::string canon = serialize_config(c);
    CHECK(parse_config(canon) == c);
    // already-canonical text is a fixed point
    CHECK(serialize_config(parse_config(canon)) == canon);

    // comments, blank lines and section order do not matter
    std::string shuffled = std::string("[run]\nseed = 9\nsettle_window = 72\n") +
                           "catalog = ../data/catalog.txt\n\n# note\n[error]\np = 0.1\n" +
                           "half_width = 10\n[output]\ndir = out/fig7\n" +
                           "[lattice]\nwidth = 1120\nsteps = 800\n" +
                           "[placements]\nplace = g49 590 0\nplace = g47 700 0\n" +
                           "[rule]\nkind = stability\n";
    CHECK(parse_config(shuffled) == c);
    CHECK(config_hash(parse_config(shuffled)) == config_hash(c));
}

TEST_CASE("forcing rules carry their target through serialization") {
    ExperimentConfig c = parse_config(kFull);
    c.rule.kind = RuleKind::FORCING;
    c.rule.target = parse_fingerprint("g15+g41+g61");
    ExperimentConfig back = parse_config(serialize_config(c));
    CHECK(back == c);
    CHECK(back.rule.target.fingerprint() == "g15+g41+g61");
}

TEST_CASE("the frozen reference configs load") {
    std::string dir = std::string(R110_REPO_DIR) + "/configs/";

    ExperimentConfig fig7 = load_config(dir + "fig7.cfg");
    CHECK(fig7.lattice.width == 1120);
    CHECK(fig7.lattice.steps == 800);
    REQUIRE(fig7.placements.size() == 2);
    CHECK(fig7.placements[0].glider_id == "g49");
    CHECK(fig7.placements[1].glider_id == "g47");
    CHECK(fig7.rule.kind == RuleKind::STABILITY);
    // relative catalog paths resolve against the config's directory
    CHECK(fig7.catalog_path.find("configs") != std::string::npos);
    CHECK(fig7.catalog_path.find("data/catalog.txt") != std::string::npos);

    ExperimentConfig fig8 = load_config(dir + "fig8.cfg");
    CHECK(fig8.rule.kind == RuleKind::FORCING);
    CHECK(fig8.rule.target.fingerprint() == "g15+g41+g61");
    CHECK(fig8.lattice == fig7.lattice);
    CHECK(fig8.placements == fig7.placements);

    for (const char* name : {"fig2.cfg", "fig3.cfg", "fig4.cfg", "fig5.cfg", "fig6.cfg"})
        CHECK_NOTHROW(load_config(dir + name));
}

TEST_CASE("parse errors carry enough context") {
    CHECK_THROWS_AS(parse_config("width = 140\n"), ConfigError);      // key before section
    CHECK_THROWS_AS(parse_config("[nope]\nx = 1\n"), ConfigError);    // unknown section
    CHECK_THROWS_AS(parse_config("[lattice]\nwidht = 140\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[lattice]\nwidth = abc\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[lattice]\nwidth = 140\nwidth = 140\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[lattice]\nwidth 140\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[lattice\nwidth = 140\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[placements]\nplace = g49 1a0 0\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[placements]\nplace = g49 100 0 7\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[rule]\nkind = sideways\n"), ConfigError);
    // forcing needs a target, stability must not have one
    CHECK_THROWS_AS(parse_config("[lattice]\nwidth = 140\nsteps = 50\n"
                                 "[rule]\nkind = forcing\n"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config("[lattice]\nwidth = 140\nsteps = 50\n"
                                 "[rule]\nkind = stability\ntarget = g49\n"),
                    ConfigError);
    CHECK_THROWS_AS(load_config("/no/such/file.cfg"), ConfigError);
}

TEST_CASE("structural validation happens at parse time") {
    CHECK_THROWS_AS(parse_config("[lattice]\nwidth = 141\nsteps = 50\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[lattice]\nwidth = 140\nsteps = 0\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[lattice]\nwidth = 140\nsteps = 50\n"
                                 "[error]\np = 1.5\n"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config("[lattice]\nwidth = 140\nsteps = 50\n"
                                 "[run]\nsettle_window = 0\n"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config("[lattice]\nwidth = 140\nsteps = 50\n"
                                 "[placements]\nplace = g49 100 -2\n"),
                    ConfigError);
}

TEST_CASE("config hashes separate distinct experiments") {
    ExperimentConfig a = parse_config(kFull);
    ExperimentConfig b = a;
    b.lattice.steps = 801;
    ExperimentConfig c = a;
    c.seed = 10;
    CHECK(config_hash(a) != config_hash(b));
    CHECK(config_hash(a) != config_hash(c));
    CHECK(config_hash(a) == config_hash(parse_config(serialize_config(a))));
}
