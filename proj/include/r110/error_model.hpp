#pragma once

#include <map>
#include <string>
#include <vector>

#include "r110/asymptotic.hpp"
#include "r110/catalog.hpp"
#include "r110/engine.hpp"

namespace r110 {

/// Single-error noise law on row 0: no error with probability 1-p,
/// otherwise one bit flip, uniform over the 2M+1 sites centred on the
/// lattice midpoint.
struct ErrorModel {
    double p = 0.1;
    int half_width = 10;  // M

    void validate() const;
    int site_count() const { return 2 * half_width + 1; }
    int event_count() const { return site_count() + 1; }

    bool operator==(const ErrorModel&) const = default;
};

/// NO_ERROR, or FLIP at offset x in [-M, M] (offset 0 names the midpoint).
struct ErrorEvent {
    bool flip = false;
    int offset = 0;

    bool operator==(const ErrorEvent&) const = default;
};

/// Fixed event order: NO_ERROR first, then flips at -M .. M.
std::vector<ErrorEvent> enumerate_events(const ErrorModel& m);

double base_prob(const ErrorModel& m, const ErrorEvent& e);

/// Lattice index of offset x: (N/2 + x) mod N.
int lattice_site(const LatticeConfig& c, int x);

/// "NONE" for NO_ERROR, else the 1-based site number x + M + 1.
std::string site_label(const ErrorModel& m, const ErrorEvent& e);

struct Outcome {
    ErrorEvent event;
    double base_prob = 0.0;
    AsymptoticState state;
};

/// One exhaustive pass over the noise law: every event applied to the
/// same initial row, evolved, and classified.
struct OutcomeTable {
    LatticeConfig config;
    ErrorModel model;
    AsymptoticState initial_state;  // decomposition of the unperturbed row 0
    std::vector<Outcome> entries;   // event order, exactly 2M+2

    const Outcome& no_error() const { return entries.front(); }
};

struct SweepOptions {
    int settle_window = 72;
    int jobs = 1;
};

/// Throws TurbulentInitial unless r0 decomposes cleanly. Worker count
/// does not affect the result; entries are assembled by event index.
OutcomeTable sweep(const Row& r0, const LatticeConfig& config, const ErrorModel& model,
                   const Catalog& catalog, const SweepOptions& opts = {});

/// Base-probability mass by final state, keyed by fingerprint
/// (UNSETTLED kept as its own key); values sum to 1.
std::map<std::string, double> outcome_distribution(const OutcomeTable& t);

/// site,base_prob,state_fingerprint,changed,settled — one row per event;
/// changed means the state differs from the NO_ERROR outcome.
std::string outcome_csv(const OutcomeTable& t);

}  // namespace r110
