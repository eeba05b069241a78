#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "r110/asymptotic.hpp"
#include "r110/catalog.hpp"
#include "r110/config_file.hpp"
#include "r110/decompose.hpp"
#include "r110/error_model.hpp"
#include "r110/errors.hpp"
#include "r110/render.hpp"
#include "r110/sampler.hpp"
#include "r110/weights.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNormalization = 3;
constexpr int kExitUnsettled = 4;

r110::Catalog obtain_catalog(const std::string& path, int max_width = 30, int max_period = 30,
                             int seed_width = 12) {
    if (path.empty()) {
        r110::CatalogSearchOptions opts;
        opts.seed_width = seed_width;
        return r110::derive_catalog(max_width, max_period, opts);
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw r110::ConfigError("cannot read catalog file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return r110::import_catalog(ss.str());
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << content;
}

std::string render(const r110::SpacetimeDiagram& d, const std::string& format,
                   const r110::SpacetimeDiagram* highlight = nullptr) {
    if (format == "ascii")
        return r110::render_ascii(d, highlight);
    return r110::render_pbm(d);
}

std::string extension(const std::string& format) {
    return format == "ascii" ? ".txt" : ".pbm";
}

struct SweepArtifacts {
    r110::ExperimentConfig config;
    r110::Catalog catalog;
    r110::Row initial{1};
    r110::OutcomeTable table;
};

SweepArtifacts run_sweep(const std::string& config_path, int jobs) {
    SweepArtifacts a;
    a.config = r110::load_config(config_path);
    a.catalog = obtain_catalog(a.config.catalog_path);
    a.initial = r110::splice(a.config.lattice, a.catalog, a.config.placements);
    r110::SweepOptions opts;
    opts.settle_window = a.config.settle_window;
    opts.jobs = jobs;
    a.table = r110::sweep(a.initial, a.config.lattice, a.config.error, a.catalog, opts);
    return a;
}

std::filesystem::path out_dir(const r110::ExperimentConfig& c, const std::string& flag) {
    if (!flag.empty())
        return flag;
    if (!c.output_dir.empty())
        return c.output_dir;
    return ".";
}

std::string config_tag(const r110::ExperimentConfig& c) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(r110::config_hash(c)));
    return buf;
}

bool config_colliding(const r110::ExperimentConfig& c, const r110::Catalog& cat) {
    if (c.placements.size() != 2)
        return false;
    return r110::will_collide(cat, c.placements[0], c.placements[1], c.lattice);
}

r110::ModifiedDistribution run_modify(const SweepArtifacts& a) {
    bool colliding = config_colliding(a.config, a.catalog);
    auto mod = r110::modify(a.table, a.config.rule, colliding);
    if (!mod) {
        std::string want;
        if (a.config.rule.kind == r110::RuleKind::FORCING) {
            want = a.config.rule.target.fingerprint();
        } else {
            auto ids = a.table.initial_state.ids;
            if (ids.size() == 2 && colliding)
                std::swap(ids[0], ids[1]);
            want = r110::AsymptoticState{true, ids}.fingerprint();
        }
        throw r110::NormalizationImpossible(
            "normalization impossible: no event reaches the required state " + want);
    }
    return *mod;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rule 110 ether/glider laboratory"};
    app.require_subcommand(1);

    std::string format = "pbm";
    std::string catalog_path;
    std::string config_path;
    std::string out_path;
    int jobs = 1;

    // --- ether ---
    auto* ether_cmd = app.add_subcommand("ether", "render the background evolution");
    int e_width = 70, e_steps = 40;
    ether_cmd->add_option("--width", e_width, "lattice width (multiple of 14)");
    ether_cmd->add_option("--steps", e_steps, "time steps");
    ether_cmd->add_option("--out", out_path, "output file (default stdout)");
    ether_cmd->add_option("--format", format, "pbm|ascii")
        ->check(CLI::IsMember({"pbm", "ascii"}));

    // --- gliders ---
    auto* gliders_cmd = app.add_subcommand("gliders", "catalog operations");
    gliders_cmd->require_subcommand(1);
    gliders_cmd->fallthrough();
    gliders_cmd->add_option("--catalog", catalog_path, "catalog file (default: derive)");
    int max_width = 30, max_period = 30, seed_width = 12;
    gliders_cmd->add_option("--max-width", max_width, "derive bound: widest residual");
    gliders_cmd->add_option("--max-period", max_period, "derive bound: longest period");
    gliders_cmd->add_option("--seed-width", seed_width, "derive option: widest seed block");
    auto* g_list = gliders_cmd->add_subcommand("list", "list catalogued gliders");
    auto* g_show = gliders_cmd->add_subcommand("show", "render one glider's track");
    std::string show_id;
    int show_steps = 0;
    g_show->add_option("id", show_id, "glider id")->required();
    g_show->add_option("--steps", show_steps, "time steps (default 4 periods)");
    g_show->add_option("--out", out_path, "output file (default stdout)");
    g_show->add_option("--format", format, "pbm|ascii")->check(CLI::IsMember({"pbm", "ascii"}));
    auto* g_export = gliders_cmd->add_subcommand("export", "write the catalog to a file");
    g_export->add_option("--out", out_path, "output file")->required();
    auto* g_import = gliders_cmd->add_subcommand("import", "validate a catalog file");
    std::string import_path;
    g_import->add_option("file", import_path, "catalog file")->required();

    // --- sweep ---
    auto* sweep_cmd = app.add_subcommand("sweep", "exhaustive single-flip sweep");
    bool diagrams = false;
    sweep_cmd->add_option("--config", config_path, "experiment config")->required();
    sweep_cmd->add_option("--out", out_path, "output directory");
    sweep_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    sweep_cmd->add_flag("--diagrams", diagrams, "render every perturbed run");
    sweep_cmd->add_option("--format", format, "pbm|ascii")->check(CLI::IsMember({"pbm", "ascii"}));

    // --- reweight ---
    auto* rew_cmd = app.add_subcommand("reweight", "apply the configured weight rule");
    rew_cmd->add_option("--config", config_path, "experiment config")->required();
    rew_cmd->add_option("--out", out_path, "output directory");
    rew_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    // --- sample ---
    auto* sample_cmd = app.add_subcommand("sample", "draw events from the modified law");
    int count = 10000;
    uint64_t seed = 0;
    bool seed_set = false;
    sample_cmd->add_option("--config", config_path, "experiment config")->required();
    sample_cmd->add_option("--out", out_path, "output directory");
    sample_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    sample_cmd->add_option("-n,--count", count, "number of draws")->check(CLI::PositiveNumber);
    auto* seed_opt = sample_cmd->add_option("--seed", seed, "override the config seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }
    seed_set = seed_opt->count() > 0;

    try {
        if (*ether_cmd) {
            if (e_width <= 0 || e_width % r110::kEtherSpatialPeriod != 0)
                throw r110::ConfigError("width must be a positive multiple of 14");
            if (e_steps <= 0)
                throw r110::ConfigError("steps must be positive");
            r110::SpacetimeDiagram d = r110::evolve(r110::ether_row(e_width), e_steps);
            std::string text = render(d, format);
            if (out_path.empty())
                std::cout << text;
            else
                write_file(out_path, text);
        } else if (*g_list) {
            r110::Catalog cat = obtain_catalog(catalog_path, max_width, max_period, seed_width);
            std::printf("%-5s %6s %12s %9s %6s\n", "id", "period", "displacement", "velocity",
                        "width");
            for (const auto& g : cat.gliders)
                std::printf("%-5s %6d %12d %+9.4f %6d\n", g.id.c_str(), g.period, g.displacement,
                            g.velocity(), g.width());
        } else if (*g_show) {
            r110::Catalog cat = obtain_catalog(catalog_path, max_width, max_period, seed_width);
            const r110::GliderSpec* g = cat.find(show_id);
            if (!g)
                throw r110::ConfigError("unknown glider id " + show_id);
            int steps = show_steps > 0 ? show_steps : 4 * g->period;
            int span = g->width() + 2 * (std::abs(g->displacement) * (steps / g->period + 1)) + 56;
            int width = r110::kEtherSpatialPeriod *
                        (span / r110::kEtherSpatialPeriod + 1);
            r110::LatticeConfig lc{width, steps};
            r110::Row r0 = r110::splice(lc, cat, {{show_id, width / 2, 0}});
            r110::SpacetimeDiagram d = r110::evolve(r0, steps);
            std::string text = render(d, format);
            if (out_path.empty())
                std::cout << text;
            else
                write_file(out_path, text);
        } else if (*g_export) {
            r110::Catalog cat = obtain_catalog(catalog_path, max_width, max_period, seed_width);
            write_file(out_path, r110::export_catalog(cat));
            std::printf("wrote %zu gliders\n", cat.gliders.size());
        } else if (*g_import) {
            r110::Catalog cat = obtain_catalog(import_path);
            std::printf("catalog ok: %zu gliders (width <= %d, period <= %d)\n",
                        cat.gliders.size(), cat.max_width, cat.max_period);
        } else if (*sweep_cmd) {
            SweepArtifacts a = run_sweep(config_path, jobs);
            auto dir = out_dir(a.config, out_path);
            write_file(dir / "outcomes.csv", r110::outcome_csv(a.table));
            int changed = 0, unsettled = 0;
            for (const auto& e : a.table.entries) {
                if (!(e.state == a.table.no_error().state))
                    ++changed;
                if (!e.state.settled)
                    ++unsettled;
            }
            std::printf("initial state: %s\n", a.table.initial_state.fingerprint().c_str());
            std::printf("no-error final: %s\n", a.table.no_error().state.fingerprint().c_str());
            std::printf("%zu events: %d changed, %d unsettled\n", a.table.entries.size(), changed,
                        unsettled);
            if (diagrams) {
                r110::SpacetimeDiagram base = r110::evolve(a.initial, a.config.lattice.steps);
                for (const auto& e : a.table.entries) {
                    std::string label = e.event.flip
                                            ? "site_" + r110::site_label(a.config.error, e.event)
                                            : "noerror";
                    r110::Row r = e.event.flip
                                      ? r110::flip(a.initial, r110::lattice_site(
                                                                  a.config.lattice, e.event.offset))
                                      : a.initial;
                    r110::SpacetimeDiagram d = r110::evolve(r, a.config.lattice.steps);
                    if (format == "ascii" && e.event.flip) {
                        r110::SpacetimeDiagram mask = r110::diff(d, base);
                        write_file(dir / ("sweep_" + label + extension(format)),
                                   r110::render_ascii(d, &mask));
                    } else {
                        write_file(dir / ("sweep_" + label + extension(format)),
                                   render(d, format));
                        if (e.event.flip)
                            write_file(dir / ("sweep_" + label + ".diff" + extension(format)),
                                       render(r110::diff(d, base), format));
                    }
                }
            }
        } else if (*rew_cmd) {
            SweepArtifacts a = run_sweep(config_path, jobs);
            r110::ModifiedDistribution mod = run_modify(a);
            auto dir = out_dir(a.config, out_path);
            write_file(dir / "modified.csv",
                       r110::modified_csv(mod, a.table, a.config.rule, config_tag(a.config)));
            r110::KlReport rep = r110::kl_report(mod, a.table);
            std::printf("rule: %s\n", r110::rule_name(a.config.rule).c_str());
            std::printf("normalization: %.12g\n", mod.normalization);
            std::printf("kl divergence: %.12g\n", rep.divergence);
            for (const auto& [fp, mass] : mod.per_state)
                if (mass > 0.0)
                    std::printf("  state %s -> %.12g\n", fp.c_str(), mass);
        } else if (*sample_cmd) {
            SweepArtifacts a = run_sweep(config_path, jobs);
            r110::ModifiedDistribution mod = run_modify(a);
            uint64_t s = seed_set ? seed : a.config.seed;
            std::vector<r110::ErrorEvent> draws = r110::sample(mod, s, count);
            auto dir = out_dir(a.config, out_path);
            write_file(dir / "samples.csv", r110::samples_csv(a.config.error, draws));
            std::printf("%d draws with seed %llu\n", count,
                        static_cast<unsigned long long>(s));
        }
    } catch (const r110::TurbulentInitial& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return kExitUnsettled;
    } catch (const r110::NormalizationImpossible& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return kExitNormalization;
    } catch (const std::exception& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return kExitConfig;
    }
    return 0;
}
