// Simple undirected graphs as bitset adjacency rows, the graph6 codec,
// metric computations, and small-graph isomorphism.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace specmin {

// Hard word limit for one-bitset-row-per-vertex storage.
inline constexpr int kMaxVertices = 64;

// Effective vertex cap: SPECMIN_VERTEX_CAP if set (1..64), else 64.
// Throws std::runtime_error on an unusable override.
int vertex_cap();

class Graph {
public:
    explicit Graph(int n);

    int n() const { return n_; }
    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }
    void add_edge(int u, int v);

    // Open neighborhood N(v) as a bitmask.
    std::uint64_t row(int v) const { return adj_[v]; }
    // Closed neighborhood N[v] = N(v) | {v}.
    std::uint64_t closed_row(int v) const { return adj_[v] | (std::uint64_t{1} << v); }

    int degree(int v) const;
    int edge_count() const;

    bool operator==(const Graph&) const = default;

private:
    int n_;
    std::vector<std::uint64_t> adj_;
};

class DistanceTable {
public:
    static constexpr int kInfinite = -1;

    explicit DistanceTable(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, kInfinite) {}

    int n() const { return n_; }
    int at(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
    void set(int u, int v, int dist) { d_[static_cast<std::size_t>(u) * n_ + v] = dist; }

private:
    int n_;
    std::vector<int> d_;
};

// graph6 codec (n <= 62). parse accepts an optional ">>graph6<<" header and
// rejects malformed length fields, bad body length, and nonzero padding bits.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// Upper-triangle edge bits x(0,1),x(0,2),x(1,2),... packed with the first bit
// most significant, so numeric order of packed values matches graph6 string
// order for equal n. Requires n <= 11 (C(11,2) = 55 bits).
std::uint64_t pack_edge_bits(const Graph& g);
Graph unpack_edge_bits(int n, std::uint64_t bits);

// BFS from every vertex; unreachable pairs get DistanceTable::kInfinite.
DistanceTable distances(const Graph& g);

// nullopt iff g is disconnected; 0 iff n == 1.
std::optional<int> diameter(const Graph& g);

bool is_connected(const Graph& g);
bool is_path(const Graph& g);
bool is_complete(const Graph& g);

// Induced subgraph on the vertices set in `keep`, relabeled 0..k-1 in
// ascending order of original id. Throws on empty keep or stray bits.
Graph induced_subgraph(const Graph& g, std::uint64_t keep);

Graph relabel(const Graph& g, const std::vector<int>& order);

// Edge-preserving bijection from g to h, or nullopt. Backtracking with
// iterated color refinement; intended for n <= ~16.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);
bool are_isomorphic(const Graph& g, const Graph& h);

// Vertex order whose relabeling minimizes the packed edge-bit string.
// Equal canonical forms <=> isomorphic graphs.
std::vector<int> canonical_order(const Graph& g);

// Lexicographically minimal graph6 string over all relabelings.
// Throws when n exceeds max_n (the backtracking search is for small graphs).
std::string canonical_form(const Graph& g, int max_n = 10);

}  // namespace specmin
