#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "r110/asymptotic.hpp"
#include "r110/error_model.hpp"

namespace r110 {

enum class RuleKind { STABILITY, FORCING };

/// A 0/1 weight factor on final glider states. STABILITY keeps the
/// initial gliders (swapped left-right when the pair collides); FORCING
/// demands a chosen target for two-glider initial states and keeps the
/// stability weights for single-glider ones.
struct WeightRule {
    RuleKind kind = RuleKind::STABILITY;
    AsymptoticState target;  // FORCING only

    /// FORCING target must be a settled state with catalogued ids only.
    void validate() const;

    bool operator==(const WeightRule&) const = default;
};

/// Weight of a final state. The collision flag comes from kinematics
/// (will_collide on the initial placements), not from outcomes.
/// Throws UnsupportedCase unless the initial state has 1 or 2 gliders.
double weight(const WeightRule& rule, const AsymptoticState& final_state,
              const AsymptoticState& initial, bool colliding);

/// Event probabilities after reweighting: per_event = C * w * base, with
/// C chosen so the sum is 1; per_state is the pushforward onto
/// fingerprints. Weights are stored as reals though every shipped rule
/// is binary.
struct ModifiedDistribution {
    std::vector<Outcome> entries;  // copied table rows, event order
    std::vector<double> weights;
    std::vector<double> per_event;
    double normalization = 1.0;  // the C (or C') constant
    std::map<std::string, double> per_state;
};

/// nullopt when no weighted event carries base probability: the
/// normalization constant does not exist (the forcing rule's "so long
/// as it is nonzero" condition fails).
std::optional<ModifiedDistribution> modify(const OutcomeTable& t, const WeightRule& rule,
                                           bool colliding);

struct KlRow {
    ErrorEvent event;
    double base = 0.0;
    double modified = 0.0;
};

/// Per-event base vs modified masses and the divergence
/// sum p_mod * ln(p_mod / p_base) over events with p_mod > 0.
struct KlReport {
    std::vector<KlRow> rows;
    double divergence = 0.0;
};

KlReport kl_report(const ModifiedDistribution& d, const OutcomeTable& t);

/// Header "# rule=... normalization=... config=<tag>" followed by
/// event,base_prob,weight,modified_prob rows.
std::string modified_csv(const ModifiedDistribution& d, const OutcomeTable& t,
                         const WeightRule& rule, const std::string& config_tag);

std::string rule_name(const WeightRule& rule);

}  // namespace r110
