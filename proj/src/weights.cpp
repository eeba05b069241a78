#include "r110/weights.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fmt17.hpp"
#include "r110/errors.hpp"

namespace r110 {

void WeightRule::validate() const {
    if (kind != RuleKind::FORCING)
        return;
    if (!target.settled)
        throw std::invalid_argument("forcing target must be a settled state");
    for (const auto& id : target.ids)
        if (id.rfind("U:", 0) == 0)
            throw std::invalid_argument("forcing target contains unrecognized particle " + id);
}

double weight(const WeightRule& rule, const AsymptoticState& final_state,
              const AsymptoticState& initial, bool colliding) {
    if (!initial.settled || initial.ids.empty() || initial.ids.size() > 2)
        throw UnsupportedCase("weights are defined only for 1- or 2-glider initial states");
    if (!final_state.settled)
        return 0.0;
    // single-glider initial states keep the stability weight under both rules
    if (rule.kind == RuleKind::STABILITY || initial.ids.size() == 1) {
        if (initial.ids.size() == 1)
            return final_state.ids == initial.ids ? 1.0 : 0.0;
        std::vector<std::string> want = initial.ids;
        if (colliding)
            std::swap(want[0], want[1]);
        return final_state.ids == want ? 1.0 : 0.0;
    }
    return final_state == rule.target ? 1.0 : 0.0;
}

std::optional<ModifiedDistribution> modify(const OutcomeTable& t, const WeightRule& rule,
                                           bool colliding) {
    rule.validate();
    ModifiedDistribution d;
    d.entries = t.entries;
    d.weights.reserve(t.entries.size());
    double mass = 0.0;
    for (const auto& e : t.entries) {
        double w = weight(rule, e.state, t.initial_state, colliding);
        d.weights.push_back(w);
        mass += w * e.base_prob;
    }
    if (mass <= 0.0)
        return std::nullopt;
    d.normalization = 1.0 / mass;
    d.per_event.reserve(t.entries.size());
    for (size_t i = 0; i < t.entries.size(); ++i) {
        double p = d.normalization * d.weights[i] * t.entries[i].base_prob;
        d.per_event.push_back(p);
        d.per_state[t.entries[i].state.fingerprint()] += p;
    }
    return d;
}

KlReport kl_report(const ModifiedDistribution& d, const OutcomeTable& t) {
    if (d.entries.size() != t.entries.size())
        throw std::invalid_argument("distribution and table cover different events");
    KlReport rep;
    rep.rows.reserve(t.entries.size());
    for (size_t i = 0; i < t.entries.size(); ++i) {
        if (!(d.entries[i].event == t.entries[i].event))
            throw std::invalid_argument("distribution and table cover different events");
        double base = t.entries[i].base_prob;
        double mod = d.per_event[i];
        rep.rows.push_back({t.entries[i].event, base, mod});
        if (mod > 0.0)
            rep.divergence += mod * std::log(mod / base);
    }
    return rep;
}

std::string rule_name(const WeightRule& rule) {
    if (rule.kind == RuleKind::STABILITY)
        return "stability";
    return "forcing(" + rule.target.fingerprint() + ")";
}

std::string modified_csv(const ModifiedDistribution& d, const OutcomeTable& t,
                         const WeightRule& rule, const std::string& config_tag) {
    std::ostringstream os;
    os << "# rule=" << rule_name(rule) << " normalization=" << detail::fmt17(d.normalization)
       << " config=" << config_tag << "\n";
    os << "event,base_prob,weight,modified_prob\n";
    for (size_t i = 0; i < d.entries.size(); ++i) {
        os << site_label(t.model, d.entries[i].event) << ','
           << detail::fmt17(d.entries[i].base_prob) << ',' << detail::fmt17(d.weights[i]) << ','
           << detail::fmt17(d.per_event[i]) << '\n';
    }
    return os.str();
}

}  // namespace r110
