#include "r110/error_model.hpp"

#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "fmt17.hpp"
#include "r110/decompose.hpp"
#include "r110/errors.hpp"

namespace r110 {

void ErrorModel::validate() const {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("error probability must lie in [0, 1]");
    if (half_width < 0)
        throw std::invalid_argument("error half width must be non-negative");
}

std::vector<ErrorEvent> enumerate_events(const ErrorModel& m) {
    m.validate();
    std::vector<ErrorEvent> out;
    out.reserve(static_cast<size_t>(m.event_count()));
    out.push_back({false, 0});
    for (int x = -m.half_width; x <= m.half_width; ++x)
        out.push_back({true, x});
    return out;
}

double base_prob(const ErrorModel& m, const ErrorEvent& e) {
    return e.flip ? m.p / m.site_count() : 1.0 - m.p;
}

int lattice_site(const LatticeConfig& c, int x) {
    int i = (c.width / 2 + x) % c.width;
    return i < 0 ? i + c.width : i;
}

std::string site_label(const ErrorModel& m, const ErrorEvent& e) {
    return e.flip ? std::to_string(e.offset + m.half_width + 1) : std::string("NONE");
}

OutcomeTable sweep(const Row& r0, const LatticeConfig& config, const ErrorModel& model,
                   const Catalog& catalog, const SweepOptions& opts) {
    config.validate(catalog.v_max());
    model.validate();
    if (r0.width() != config.width)
        throw std::invalid_argument("row width does not match the lattice config");
    if (model.site_count() > config.width)
        throw std::invalid_argument("error region wider than the lattice");
    if (opts.jobs < 1)
        throw std::invalid_argument("job count must be positive");

    Decomposition d0 = decompose(r0, catalog);
    if (!d0.clean())
        throw TurbulentInitial("initial row does not decompose cleanly");

    OutcomeTable table;
    table.config = config;
    table.model = model;
    table.initial_state = {true, d0.ids()};

    std::vector<ErrorEvent> events = enumerate_events(model);
    table.entries.resize(events.size());

    auto run_event = [&](size_t i) {
        const ErrorEvent& e = events[i];
        Row r = e.flip ? flip(r0, lattice_site(config, e.offset)) : r0;
        SpacetimeDiagram d = evolve(r, config.steps);
        table.entries[i] = {e, base_prob(model, e),
                            asymptotic_state(d, catalog, opts.settle_window)};
    };

    if (opts.jobs == 1) {
        for (size_t i = 0; i < events.size(); ++i)
            run_event(i);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (size_t i = next.fetch_add(1); i < events.size(); i = next.fetch_add(1))
                run_event(i);
        };
        std::vector<std::thread> pool;
        int k = std::min<int>(opts.jobs, static_cast<int>(events.size()));
        pool.reserve(static_cast<size_t>(k));
        for (int j = 0; j < k; ++j)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    return table;
}

std::map<std::string, double> outcome_distribution(const OutcomeTable& t) {
    std::map<std::string, double> out;
    for (const auto& e : t.entries)
        out[e.state.fingerprint()] += e.base_prob;
    return out;
}

std::string outcome_csv(const OutcomeTable& t) {
    std::ostringstream os;
    os << "site,base_prob,state_fingerprint,changed,settled\n";
    const AsymptoticState& unperturbed = t.no_error().state;
    for (const auto& e : t.entries) {
        os << site_label(t.model, e.event) << ',' << detail::fmt17(e.base_prob) << ','
           << e.state.fingerprint() << ',' << (e.state == unperturbed ? 0 : 1) << ','
           << (e.state.settled ? 1 : 0) << '\n';
    }
    return os.str();
}

}  // namespace r110
