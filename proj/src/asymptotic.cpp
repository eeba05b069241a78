#include "r110/asymptotic.hpp"

#include <cctype>
#include <stdexcept>

namespace r110 {

std::string AsymptoticState::fingerprint() const {
    if (!settled)
        return "UNSETTLED";
    if (ids.empty())
        return "ether";
    std::string s;
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i)
            s += '+';
        s += ids[i];
    }
    return s;
}

AsymptoticState parse_fingerprint(const std::string& text) {
    if (text == "UNSETTLED")
        return {};
    AsymptoticState st;
    st.settled = true;
    if (text == "ether")
        return st;
    if (text.empty())
        throw std::invalid_argument("empty state fingerprint");
    size_t from = 0;
    while (true) {
        size_t sep = text.find('+', from);
        std::string id = text.substr(from, sep == std::string::npos ? sep : sep - from);
        bool well_formed = !id.empty();
        for (char ch : id)
            if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != ':')
                well_formed = false;
        if (!well_formed)
            throw std::invalid_argument("malformed state fingerprint \"" + text + "\"");
        st.ids.push_back(std::move(id));
        if (sep == std::string::npos)
            break;
        from = sep + 1;
    }
    return st;
}

AsymptoticState asymptotic_state(const SpacetimeDiagram& d, const Catalog& catalog,
                                 int settle_window) {
    int max_period = 0;
    for (const auto& g : catalog.gliders)
        max_period = std::max(max_period, g.period);
    if (settle_window < std::max(1, 2 * max_period))
        throw std::invalid_argument("settle window shorter than twice the largest period");
    if (static_cast<int>(d.rows.size()) < settle_window)
        throw std::invalid_argument("diagram shorter than the settle window");

    auto backdrops = ether_backdrops(d.width());
    AsymptoticState st;
    const size_t last = d.rows.size() - 1;
    for (int k = 0; k < settle_window; ++k) {
        Decomposition dec = decompose(d.rows[last - static_cast<size_t>(k)], catalog, backdrops);
        if (!dec.clean())
            return {};
        if (k == 0)
            st.ids = dec.ids();
        else if (dec.ids() != st.ids)
            return {};
    }
    st.settled = true;
    return st;
}

}  // namespace r110
