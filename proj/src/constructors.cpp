#include "specmin/constructors.hpp"

#include <algorithm>
#include <stdexcept>

namespace specmin {

Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph diamond(const DiamondSpec& spec) {
    if (spec.d < 1) throw std::invalid_argument("diamond: need d >= 1");
    std::vector<int> w = spec.attachments;
    std::sort(w.begin(), w.end());
    if (std::adjacent_find(w.begin(), w.end()) != w.end())
        throw std::invalid_argument("diamond: repeated attachment index");
    for (int j : w)
        if (j < 0 || j >= spec.d)
            throw std::invalid_argument("diamond: attachment index outside 0..d-1");
    Graph g(spec.d + 1 + static_cast<int>(w.size()));
    for (int i = 0; i < spec.d; ++i) g.add_edge(i, i + 1);
    for (std::size_t t = 0; t < w.size(); ++t) {
        const int u = spec.d + 1 + static_cast<int>(t);
        g.add_edge(u, w[t]);
        g.add_edge(u, w[t] + 1);
    }
    return g;
}

AdmissibleSet admissible_set(int d) {
    if (d < 7 || d % 3 != 1)
        throw std::invalid_argument("admissible_set: need d >= 7 with d = 1 (mod 3)");
    AdmissibleSet u;
    u.d = d;
    for (int j = 3; j <= d - 4; j += 3) u.positions.push_back(j);
    return u;
}

std::pair<DiamondSpec, Graph> ExtremalDiamondFamily::at(std::uint64_t index) const {
    if (index >= size()) throw std::out_of_range("family index out of range");
    DiamondSpec spec;
    spec.d = u_.d;
    for (std::size_t t = 0; t < u_.positions.size(); ++t)
        if ((index >> t) & 1u) spec.attachments.push_back(u_.positions[t]);
    Graph g = diamond(spec);
    return {std::move(spec), std::move(g)};
}

ExtremalDiamondFamily extremal_diamond_family(int d) { return ExtremalDiamondFamily(d); }

}  // namespace specmin
