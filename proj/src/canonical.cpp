#include "specmin/canonical.hpp"

#include "specmin/spectra.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace specmin {

Partition rho_partition(const Graph& g) {
    Partition p;
    p.class_of.assign(static_cast<std::size_t>(g.n()), -1);
    for (int v = 0; v < g.n(); ++v) {
        if (p.class_of[v] >= 0) continue;
        const int id = static_cast<int>(p.classes.size());
        std::uint64_t members = 0;
        for (int u = v; u < g.n(); ++u)
            if (p.class_of[u] < 0 && g.closed_row(u) == g.closed_row(v)) {
                p.class_of[u] = id;
                members |= std::uint64_t{1} << u;
            }
        p.classes.push_back(members);
    }
    return p;
}

QuotientResult quotient(const Graph& g) {
    Partition p = rho_partition(g);
    const int k = static_cast<int>(p.classes.size());
    Graph q(k);
    // adjacency across classes is all-or-nothing, so representatives decide
    std::vector<int> rep(k);
    for (int c = 0; c < k; ++c) rep[c] = std::countr_zero(p.classes[c]);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (g.adjacent(rep[a], rep[b])) q.add_edge(a, b);
    return {std::move(q), std::move(p)};
}

bool is_canonical(const Graph& g) {
    const Partition p = rho_partition(g);
    return static_cast<int>(p.classes.size()) == g.n();
}

Graph blowup(const BlowupSpec& spec) {
    const Graph& base = spec.base;
    if (static_cast<int>(spec.sizes.size()) != base.n())
        throw std::invalid_argument("blowup: one size per base vertex required");
    long total = 0;
    for (int s : spec.sizes) {
        if (s < 1) throw std::invalid_argument("blowup: sizes must be positive");
        total += s;
    }
    if (total > vertex_cap())
        throw std::invalid_argument("blowup: result exceeds vertex cap");
    std::vector<int> start(static_cast<std::size_t>(base.n()) + 1, 0);
    for (int v = 0; v < base.n(); ++v) start[v + 1] = start[v] + spec.sizes[v];
    Graph g(static_cast<int>(total));
    for (int v = 0; v < base.n(); ++v)
        for (int i = start[v]; i < start[v + 1]; ++i)
            for (int j = i + 1; j < start[v + 1]; ++j) g.add_edge(i, j);
    for (int u = 0; u < base.n(); ++u)
        for (int v = u + 1; v < base.n(); ++v) {
            if (!base.adjacent(u, v)) continue;
            for (int i = start[u]; i < start[u + 1]; ++i)
                for (int j = start[v]; j < start[v + 1]; ++j) g.add_edge(i, j);
        }
    return g;
}

bool diameter_transfer_check(const Graph& g) {
    const std::optional<int> dg = diameter(g);
    if (!dg) throw std::invalid_argument("diameter_transfer_check: disconnected graph");
    const Graph q = quotient(g).graph;
    const std::optional<int> dq = diameter(q);
    if (*dq == 0) return true;
    return *dq == *dg;
}

bool multiplicity_transfer_check(const Graph& g) {
    const std::optional<int> dg = diameter(g);
    if (!dg || *dg < 1)
        throw std::invalid_argument("multiplicity_transfer_check: need connected graph with d >= 1");
    const BigRat minus_one(-1);
    const Graph q = quotient(g).graph;
    const int dq = *diameter(q);
    if (dq == 0) {
        // complete input: peel one duplicate at a time, each must shed exactly 1
        Graph cur = g;
        while (cur.n() > 1) {
            const Partition p = rho_partition(cur);
            int doomed = -1;
            for (const std::uint64_t cls : p.classes)
                if (std::popcount(cls) > 1) {
                    doomed = std::countr_zero(cls);
                    break;
                }
            if (doomed < 0) break;
            const std::uint64_t all =
                cur.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cur.n()) - 1;
            Graph next = induced_subgraph(cur, all & ~(std::uint64_t{1} << doomed));
            if (multiplicity(cur, minus_one) != multiplicity(next, minus_one) + 1) return false;
            cur = std::move(next);
        }
        return true;
    }
    const int mg = multiplicity(g, minus_one);
    const int mq = multiplicity(q, minus_one);
    if (mg != mq + (g.n() - q.n())) return false;
    const bool extremal_g = mg == g.n() - *dg;
    const bool extremal_q = mq == q.n() - dq;
    return extremal_g == extremal_q;
}

}  // namespace specmin
