#pragma once

#include <r110/catalog.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// The catalog shipped with the repository (derived with bounds 48/36),
/// imported once per test binary.
inline const r110::Catalog& repo_catalog() {
    static r110::Catalog cat = r110::import_catalog(read_file(std::string(R110_REPO_DIR) +
                                                             "/data/catalog.txt"));
    return cat;
}
