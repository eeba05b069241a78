#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "r110/catalog.hpp"
#include "r110/engine.hpp"
#include "r110/error_model.hpp"
#include "r110/weights.hpp"

namespace r110 {

/// Everything one experiment needs, gathered from a sectioned key-value
/// file (see parse_config for the grammar).
struct ExperimentConfig {
    LatticeConfig lattice;
    std::vector<Placement> placements;
    ErrorModel error;
    WeightRule rule;
    int settle_window = 72;
    uint64_t seed = 1;
    std::string catalog_path;  // empty: derive at startup
    std::string output_dir;

    /// Structural checks that need no catalog; lattice/placement
    /// validity against a concrete catalog surfaces in splice/sweep.
    void validate() const;

    bool operator==(const ExperimentConfig&) const = default;
};

/// Grammar: "[section]" headers; "key = value" lines; full-line '#'
/// comments; blank lines ignored. Sections: lattice (width, steps),
/// placements (repeated "place = <id> <position> <phase>"), error
/// (p, half_width), rule (kind = stability|forcing, target =
/// <fingerprint>), run (settle_window, seed, catalog), output (dir).
/// Unknown keys and duplicate scalars are errors.
ExperimentConfig parse_config(const std::string& text);

/// Canonical form: fixed section and key order, no comments; parsing it
/// back yields an equal config.
std::string serialize_config(const ExperimentConfig& c);

/// parse_config on the file's contents, with a relative catalog path
/// resolved against the file's directory.
ExperimentConfig load_config(const std::string& path);

/// FNV-1a over the canonical serialization.
uint64_t config_hash(const ExperimentConfig& c);

}  // namespace r110
