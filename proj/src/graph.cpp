#include "specmin/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

namespace specmin {

int vertex_cap() {
    static const int cap = [] {
        const char* s = std::getenv("SPECMIN_VERTEX_CAP");
        if (s == nullptr || *s == '\0') return kMaxVertices;
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end == nullptr || *end != '\0' || v < 1 || v > kMaxVertices)
            throw std::runtime_error("SPECMIN_VERTEX_CAP must be an integer in 1..64");
        return static_cast<int>(v);
    }();
    return cap;
}

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > vertex_cap())
        throw std::invalid_argument("vertex count " + std::to_string(n) +
                                    " outside 1.." + std::to_string(vertex_cap()));
    adj_.assign(static_cast<std::size_t>(n), 0);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
        throw std::invalid_argument("bad edge endpoints");
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

namespace {

constexpr char kG6Lo = 63;  // '?'
constexpr char kG6Hi = 126;

// Column-major pair for upper-triangle bit index k: x(0,1),x(0,2),x(1,2),...
std::pair<int, int> edge_bit_pair(int k) {
    int j = 1;
    while (k >= j) k -= j, ++j;
    return {k, j};
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
    if (text.empty()) throw std::invalid_argument("graph6: empty input");
    if (text[0] == ':' || text[0] == ';' || text[0] == '&')
        throw std::invalid_argument("graph6: sparse6/digraph6 not supported");

    const unsigned char c0 = static_cast<unsigned char>(text[0]);
    if (c0 == 126)
        throw std::invalid_argument("graph6: n > 62 not supported");
    if (c0 < kG6Lo || c0 > kG6Hi)
        throw std::invalid_argument("graph6: malformed length field");
    const int n = c0 - kG6Lo;
    if (n < 1) throw std::invalid_argument("graph6: empty graph not supported");
    if (n > vertex_cap())
        throw std::invalid_argument("graph6: n exceeds vertex cap");

    const int nbits = n * (n - 1) / 2;
    const int nbytes = (nbits + 5) / 6;
    if (static_cast<int>(text.size()) != 1 + nbytes)
        throw std::invalid_argument("graph6: body length mismatch");

    Graph g(n);
    for (int b = 0; b < nbytes; ++b) {
        const unsigned char c = static_cast<unsigned char>(text[1 + b]);
        if (c < kG6Lo || c > kG6Hi)
            throw std::invalid_argument("graph6: byte out of range");
        const unsigned bits = c - kG6Lo;
        for (int t = 0; t < 6; ++t) {
            const int k = 6 * b + t;
            const bool set = (bits >> (5 - t)) & 1u;
            if (k >= nbits) {
                if (set) throw std::invalid_argument("graph6: nonzero padding bits");
                continue;
            }
            if (set) {
                auto [i, j] = edge_bit_pair(k);
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    const int n = g.n();
    if (n > 62) throw std::invalid_argument("graph6: n > 62 not supported");
    std::string out;
    out.push_back(static_cast<char>(n + kG6Lo));
    const int nbits = n * (n - 1) / 2;
    unsigned acc = 0;
    int filled = 0;
    for (int k = 0; k < nbits; ++k) {
        auto [i, j] = edge_bit_pair(k);
        acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
        if (++filled == 6) {
            out.push_back(static_cast<char>(acc + kG6Lo));
            acc = 0;
            filled = 0;
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kG6Lo));
    return out;
}

std::uint64_t pack_edge_bits(const Graph& g) {
    const int n = g.n();
    if (n > 11) throw std::invalid_argument("pack_edge_bits: n > 11");
    const int nbits = n * (n - 1) / 2;
    std::uint64_t packed = 0;
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (g.adjacent(i, j)) packed |= std::uint64_t{1} << (nbits - 1 - k);
    return packed;
}

Graph unpack_edge_bits(int n, std::uint64_t bits) {
    Graph g(n);
    const int nbits = n * (n - 1) / 2;
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((bits >> (nbits - 1 - k)) & 1u) g.add_edge(i, j);
    return g;
}

namespace {

// Bitmask of vertices reachable from `start`.
std::uint64_t reach(const Graph& g, int start) {
    std::uint64_t seen = std::uint64_t{1} << start;
    std::uint64_t frontier = seen;
    while (frontier != 0) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f != 0) {
            const int v = std::countr_zero(f);
            f &= f - 1;
            next |= g.row(v);
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

}  // namespace

DistanceTable distances(const Graph& g) {
    const int n = g.n();
    DistanceTable table(n);
    for (int s = 0; s < n; ++s) {
        std::uint64_t seen = std::uint64_t{1} << s;
        std::uint64_t frontier = seen;
        int dist = 0;
        table.set(s, s, 0);
        while (frontier != 0) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f != 0) {
                const int v = std::countr_zero(f);
                f &= f - 1;
                next |= g.row(v);
            }
            frontier = next & ~seen;
            seen |= frontier;
            ++dist;
            std::uint64_t nf = frontier;
            while (nf != 0) {
                const int v = std::countr_zero(nf);
                nf &= nf - 1;
                table.set(s, v, dist);
            }
        }
    }
    return table;
}

std::optional<int> diameter(const Graph& g) {
    if (!is_connected(g)) return std::nullopt;
    const DistanceTable t = distances(g);
    int d = 0;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) d = std::max(d, t.at(u, v));
    return d;
}

bool is_connected(const Graph& g) {
    const std::uint64_t all =
        g.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n()) - 1;
    return reach(g, 0) == all;
}

bool is_path(const Graph& g) {
    if (!is_connected(g)) return false;
    if (g.edge_count() != g.n() - 1) return false;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

bool is_complete(const Graph& g) {
    return g.edge_count() == g.n() * (g.n() - 1) / 2;
}

Graph induced_subgraph(const Graph& g, std::uint64_t keep) {
    if (keep == 0) throw std::invalid_argument("induced_subgraph: empty vertex set");
    if (g.n() < 64 && (keep >> g.n()) != 0)
        throw std::invalid_argument("induced_subgraph: vertex out of range");
    std::vector<int> verts;
    std::uint64_t k = keep;
    while (k != 0) {
        verts.push_back(std::countr_zero(k));
        k &= k - 1;
    }
    Graph h(static_cast<int>(verts.size()));
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            if (g.adjacent(verts[a], verts[b])) h.add_edge(static_cast<int>(a), static_cast<int>(b));
    return h;
}

Graph relabel(const Graph& g, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != g.n())
        throw std::invalid_argument("relabel order must list every vertex exactly once");
    std::uint64_t seen = 0;
    for (int v : order) {
        if (v < 0 || v >= g.n() || ((seen >> v) & 1u))
            throw std::invalid_argument("relabel order must list every vertex exactly once");
        seen |= std::uint64_t{1} << v;
    }
    Graph h(g.n());
    for (int a = 0; a < g.n(); ++a)
        for (int b = a + 1; b < g.n(); ++b)
            if (g.adjacent(order[a], order[b])) h.add_edge(a, b);
    return h;
}

namespace {

// Iterated refinement: each round a vertex's color becomes the rank of
// (old color, sorted neighbor colors) among both graphs' signatures, so the
// palettes stay comparable across g and h.
std::pair<std::vector<int>, std::vector<int>> joint_colors(const Graph& g, const Graph& h) {
    const int n = g.n();
    std::vector<int> cg(n, 0), ch(n, 0);
    for (int round = 0; round < n; ++round) {
        using Sig = std::pair<int, std::vector<int>>;
        auto signature = [](const Graph& gr, const std::vector<int>& col, int v) {
            std::vector<int> nb;
            std::uint64_t r = gr.row(v);
            while (r != 0) {
                nb.push_back(col[std::countr_zero(r)]);
                r &= r - 1;
            }
            std::sort(nb.begin(), nb.end());
            return Sig{col[v], std::move(nb)};
        };
        std::map<Sig, int> palette;
        std::vector<Sig> sg(n), sh(n);
        for (int v = 0; v < n; ++v) {
            sg[v] = signature(g, cg, v);
            sh[v] = signature(h, ch, v);
            palette[sg[v]] = 0;
            palette[sh[v]] = 0;
        }
        int next = 0;
        for (auto& [sig, id] : palette) id = next++;
        std::vector<int> ng(n), nh(n);
        for (int v = 0; v < n; ++v) {
            ng[v] = palette[sg[v]];
            nh[v] = palette[sh[v]];
        }
        if (ng == cg && nh == ch) break;
        cg = std::move(ng);
        ch = std::move(nh);
    }
    return {cg, ch};
}

bool extend_mapping(const Graph& g, const Graph& h, const std::vector<int>& vertex_order,
                    const std::vector<int>& cg, const std::vector<int>& ch,
                    std::vector<int>& map, std::uint64_t& used, std::size_t pos) {
    if (pos == vertex_order.size()) return true;
    const int v = vertex_order[pos];
    for (int w = 0; w < h.n(); ++w) {
        if ((used >> w) & 1u) continue;
        if (ch[w] != cg[v]) continue;
        bool ok = true;
        for (std::size_t p = 0; p < pos; ++p) {
            const int u = vertex_order[p];
            if (g.adjacent(u, v) != h.adjacent(map[u], w)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map[v] = w;
        used |= std::uint64_t{1} << w;
        if (extend_mapping(g, h, vertex_order, cg, ch, map, used, pos + 1)) return true;
        used &= ~(std::uint64_t{1} << w);
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
    const int n = g.n();
    if (n != h.n() || g.edge_count() != h.edge_count()) return std::nullopt;
    auto [cg, ch] = joint_colors(g, h);
    {
        std::vector<int> a = cg, b = ch;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }
    // Assign rare colors first to keep branching low.
    std::vector<int> freq(n + 1, 0);
    for (int v = 0; v < n; ++v) ++freq[cg[v]];
    std::vector<int> vertex_order(n);
    for (int v = 0; v < n; ++v) vertex_order[v] = v;
    std::sort(vertex_order.begin(), vertex_order.end(), [&](int a, int b) {
        if (freq[cg[a]] != freq[cg[b]]) return freq[cg[a]] < freq[cg[b]];
        return a < b;
    });
    std::vector<int> map(n, -1);
    std::uint64_t used = 0;
    if (extend_mapping(g, h, vertex_order, cg, ch, map, used, 0)) return map;
    return std::nullopt;
}

bool are_isomorphic(const Graph& g, const Graph& h) {
    return find_isomorphism(g, h).has_value();
}

std::vector<int> canonical_order(const Graph& g) {
    const int n = g.n();
    if (n == 1) return {0};
    // Search over vertex orderings for the lexicographically least graph6
    // string. Column j of the upper triangle occupies a fixed position in the
    // bit string, so at each level keeping exactly the extensions with the
    // minimal column chunk is an exact filter, not a heuristic. Two surviving
    // prefixes that use the same vertex set and restrict every remaining
    // vertex identically are interchangeable from here on, so one
    // representative per such key suffices; this collapses the frontier for
    // symmetric graphs (K_n stays at C(n, level) states instead of level!).
    struct Prefix {
        std::array<std::int8_t, kMaxVertices> perm;
        std::uint64_t used;
    };
    std::vector<Prefix> frontier;
    frontier.reserve(n);
    for (int v = 0; v < n; ++v) {
        Prefix p{};
        p.perm[0] = static_cast<std::int8_t>(v);
        p.used = std::uint64_t{1} << v;
        frontier.push_back(p);
    }
    std::vector<Prefix> next;
    for (int level = 1; level < n; ++level) {
        auto restriction = [&](const Prefix& p, int v) {
            std::uint64_t chunk = 0;
            for (int i = 0; i < level; ++i)
                chunk = (chunk << 1) | ((g.row(v) >> p.perm[i]) & 1u);
            return chunk;
        };
        std::uint64_t best = ~std::uint64_t{0};
        next.clear();
        for (const Prefix& p : frontier) {
            for (int v = 0; v < n; ++v) {
                if ((p.used >> v) & 1u) continue;
                const std::uint64_t chunk = restriction(p, v);
                if (chunk > best) continue;
                if (chunk < best) {
                    best = chunk;
                    next.clear();
                }
                Prefix q = p;
                q.perm[level] = static_cast<std::int8_t>(v);
                q.used |= std::uint64_t{1} << v;
                next.push_back(q);
            }
        }
        frontier.swap(next);
        if (level + 1 < n) {
            std::set<std::vector<std::uint64_t>> seen;
            std::vector<Prefix> dedup;
            for (const Prefix& q : frontier) {
                std::vector<std::uint64_t> key{q.used};
                for (int v = 0; v < n; ++v) {
                    if ((q.used >> v) & 1u) continue;
                    std::uint64_t chunk = 0;
                    for (int i = 0; i <= level; ++i)
                        chunk = (chunk << 1) | ((g.row(v) >> q.perm[i]) & 1u);
                    key.push_back(chunk);
                }
                if (seen.insert(std::move(key)).second) dedup.push_back(q);
            }
            frontier.swap(dedup);
        }
    }
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = frontier.front().perm[i];
    return order;
}

std::string canonical_form(const Graph& g, int max_n) {
    if (g.n() > max_n)
        throw std::invalid_argument("canonical_form: n exceeds search limit " +
                                    std::to_string(max_n));
    return write_graph6(relabel(g, canonical_order(g)));
}

}  // namespace specmin
