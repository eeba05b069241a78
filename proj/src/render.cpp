#include "r110/render.hpp"

#include <sstream>
#include <stdexcept>

namespace r110 {

std::string render_pbm(const SpacetimeDiagram& d) {
    if (d.rows.empty())
        throw std::invalid_argument("cannot render an empty diagram");
    std::ostringstream os;
    os << "P1\n" << d.width() << ' ' << d.rows.size() << '\n';
    std::string line(static_cast<size_t>(d.width()), '0');
    for (const auto& r : d.rows) {
        for (int i = 0; i < r.width(); ++i)
            line[static_cast<size_t>(i)] = r.cell(i) ? '1' : '0';
        os << line << '\n';
    }
    return os.str();
}

std::string render_ascii(const SpacetimeDiagram& d, const SpacetimeDiagram* highlight) {
    if (d.rows.empty())
        throw std::invalid_argument("cannot render an empty diagram");
    if (highlight &&
        (highlight->rows.size() != d.rows.size() || highlight->width() != d.width()))
        throw std::invalid_argument("highlight dimensions do not match the diagram");
    std::ostringstream os;
    for (size_t t = 0; t < d.rows.size(); ++t) {
        const Row& r = d.rows[t];
        for (int i = 0; i < r.width(); ++i) {
            bool marked = highlight && highlight->rows[t].cell(i);
            if (marked)
                os << (r.cell(i) ? 'X' : 'x');
            else
                os << (r.cell(i) ? "█" : "·");
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace r110
