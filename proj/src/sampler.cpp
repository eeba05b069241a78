#include "r110/sampler.hpp"

#include <sstream>
#include <stdexcept>

namespace r110 {

uint64_t child_seed(uint64_t seed, int k) {
    if (k < 0)
        throw std::invalid_argument("task index must be non-negative");
    SplitMix64 g(seed);
    uint64_t out = 0;
    for (int i = 0; i <= k; ++i)
        out = g.next();
    return out;
}

std::vector<ErrorEvent> sample(const ModifiedDistribution& d, uint64_t seed, int n) {
    if (n < 0)
        throw std::invalid_argument("sample count must be non-negative");
    if (d.per_event.empty())
        throw std::invalid_argument("cannot sample an empty distribution");

    std::vector<double> cum(d.per_event.size());
    double acc = 0.0;
    for (size_t i = 0; i < d.per_event.size(); ++i) {
        acc += d.per_event[i];
        cum[i] = acc;
    }

    SplitMix64 g(seed);
    std::vector<ErrorEvent> out;
    out.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        double u = g.next_double() * acc;
        size_t i = 0;
        while (i + 1 < cum.size() && u >= cum[i])
            ++i;
        // float tails may land past the final mass; clamp onto the last
        // event that actually carries probability
        while (i > 0 && d.per_event[i] == 0.0)
            --i;
        out.push_back(d.entries[i].event);
    }
    return out;
}

std::string samples_csv(const ErrorModel& m, const std::vector<ErrorEvent>& events) {
    std::ostringstream os;
    os << "event\n";
    for (const auto& e : events)
        os << site_label(m, e) << '\n';
    return os.str();
}

}  // namespace r110
