#include "r110/config_file.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "fmt17.hpp"
#include "r110/errors.hpp"

namespace r110 {
namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos)
        return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

long long parse_int(const std::string& v, const std::string& key) {
    long long out = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || p != v.data() + v.size())
        throw ConfigError("bad integer for " + key + ": \"" + v + "\"");
    return out;
}

uint64_t parse_u64(const std::string& v, const std::string& key) {
    uint64_t out = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || p != v.data() + v.size())
        throw ConfigError("bad unsigned integer for " + key + ": \"" + v + "\"");
    return out;
}

double parse_real(const std::string& v, const std::string& key) {
    try {
        size_t used = 0;
        double out = std::stod(v, &used);
        if (used != v.size())
            throw std::invalid_argument(v);
        return out;
    } catch (const std::exception&) {
        throw ConfigError("bad number for " + key + ": \"" + v + "\"");
    }
}

}  // namespace

void ExperimentConfig::validate() const {
    if (lattice.width <= 0 || lattice.width % kEtherSpatialPeriod != 0)
        throw ConfigError("lattice width must be a positive multiple of " +
                          std::to_string(kEtherSpatialPeriod));
    if (lattice.steps <= 0)
        throw ConfigError("lattice steps must be positive");
    try {
        error.validate();
    } catch (const std::exception& ex) {
        throw ConfigError(ex.what());
    }
    if (settle_window < 1)
        throw ConfigError("settle window must be positive");
    for (const auto& p : placements) {
        if (p.glider_id.empty())
            throw ConfigError("placement with empty glider id");
        if (p.phase < 0)
            throw ConfigError("placement phase must be non-negative");
    }
    try {
        rule.validate();
    } catch (const std::exception& ex) {
        throw ConfigError(ex.what());
    }
}

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig c;
    std::istringstream is(text);
    std::string raw, section;
    std::set<std::string> seen;
    bool have_target = false;
    int lineno = 0;

    auto once = [&](const std::string& key) {
        if (!seen.insert(section + "." + key).second)
            throw ConfigError("duplicate key " + key + " in [" + section + "]");
    };

    while (std::getline(is, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r')
            raw.pop_back();
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#')
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("line " + std::to_string(lineno) + ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "lattice" && section != "placements" && section != "error" &&
                section != "rule" && section != "run" && section != "output")
                throw ConfigError("unknown section [" + section + "]");
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");

        if (section == "lattice") {
            once(key);
            if (key == "width")
                c.lattice.width = static_cast<int>(parse_int(val, key));
            else if (key == "steps")
                c.lattice.steps = static_cast<int>(parse_int(val, key));
            else
                throw ConfigError("unknown key " + key + " in [lattice]");
        } else if (section == "placements") {
            if (key != "place")
                throw ConfigError("unknown key " + key + " in [placements]");
            std::istringstream ps(val);
            Placement p;
            std::string extra;
            if (!(ps >> p.glider_id >> p.position >> p.phase) || (ps >> extra))
                throw ConfigError("bad placement \"" + val + "\" (want: id position phase)");
            c.placements.push_back(std::move(p));
        } else if (section == "error") {
            once(key);
            if (key == "p")
                c.error.p = parse_real(val, key);
            else if (key == "half_width")
                c.error.half_width = static_cast<int>(parse_int(val, key));
            else
                throw ConfigError("unknown key " + key + " in [error]");
        } else if (section == "rule") {
            once(key);
            if (key == "kind") {
                if (val == "stability")
                    c.rule.kind = RuleKind::STABILITY;
                else if (val == "forcing")
                    c.rule.kind = RuleKind::FORCING;
                else
                    throw ConfigError("unknown rule kind \"" + val + "\"");
            } else if (key == "target") {
                c.rule.target = parse_fingerprint(val);
                have_target = true;
            } else {
                throw ConfigError("unknown key " + key + " in [rule]");
            }
        } else if (section == "run") {
            once(key);
            if (key == "settle_window")
                c.settle_window = static_cast<int>(parse_int(val, key));
            else if (key == "seed")
                c.seed = parse_u64(val, key);
            else if (key == "catalog")
                c.catalog_path = val;
            else
                throw ConfigError("unknown key " + key + " in [run]");
        } else if (section == "output") {
            once(key);
            if (key == "dir")
                c.output_dir = val;
            else
                throw ConfigError("unknown key " + key + " in [output]");
        } else {
            throw ConfigError("line " + std::to_string(lineno) + ": key outside any section");
        }
    }

    if (c.rule.kind == RuleKind::FORCING && !have_target)
        throw ConfigError("forcing rule needs a target fingerprint");
    if (c.rule.kind == RuleKind::STABILITY && have_target)
        throw ConfigError("target is only meaningful for the forcing rule");
    c.validate();
    return c;
}

std::string serialize_config(const ExperimentConfig& c) {
    std::ostringstream os;
    os << "[lattice]\n";
    os << "width = " << c.lattice.width << "\n";
    os << "steps = " << c.lattice.steps << "\n";
    if (!c.placements.empty()) {
        os << "\n[placements]\n";
        for (const auto& p : c.placements)
            os << "place = " << p.glider_id << ' ' << p.position << ' ' << p.phase << "\n";
    }
    os << "\n[error]\n";
    os << "p = " << detail::fmt17(c.error.p) << "\n";
    os << "half_width = " << c.error.half_width << "\n";
    os << "\n[rule]\n";
    os << "kind = " << (c.rule.kind == RuleKind::STABILITY ? "stability" : "forcing") << "\n";
    if (c.rule.kind == RuleKind::FORCING)
        os << "target = " << c.rule.target.fingerprint() << "\n";
    os << "\n[run]\n";
    os << "settle_window = " << c.settle_window << "\n";
    os << "seed = " << c.seed << "\n";
    if (!c.catalog_path.empty())
        os << "catalog = " << c.catalog_path << "\n";
    if (!c.output_dir.empty()) {
        os << "\n[output]\n";
        os << "dir = " << c.output_dir << "\n";
    }
    return os.str();
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot read config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    ExperimentConfig c = parse_config(buf.str());
    if (!c.catalog_path.empty()) {
        std::filesystem::path cp(c.catalog_path);
        if (cp.is_relative())
            c.catalog_path = (std::filesystem::path(path).parent_path() / cp).string();
    }
    return c;
}

uint64_t config_hash(const ExperimentConfig& c) {
    std::string s = serialize_config(c);
    uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace r110
