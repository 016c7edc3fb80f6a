// Closed-neighborhood equivalence: the partition into duplicate classes, the
// quotient graph obtained by identifying each class, its inverse (clique
// blowup), and checks that diameter and −1-multiplicity move through the
// quotient the way they should.
#pragma once

#include "specmin/graph.hpp"

#include <cstdint>
#include <vector>

namespace specmin {

struct Partition {
    std::vector<std::uint64_t> classes;  // disjoint vertex masks, ordered by least member
    std::vector<int> class_of;           // vertex → index into classes
};

// Equivalence classes of N[u] = N[v]. Every class induces a clique, and
// adjacency between two classes is all-or-nothing.
Partition rho_partition(const Graph& g);

struct QuotientResult {
    Graph graph;          // one vertex per class, in class order
    Partition partition;  // how the input collapsed onto it
};

// Identify each duplicate class to a single vertex. Idempotent: the quotient
// of the quotient is the quotient.
QuotientResult quotient(const Graph& g);

// True iff every duplicate class is a singleton, i.e. the quotient is g itself.
bool is_canonical(const Graph& g);

struct BlowupSpec {
    Graph base;
    std::vector<int> sizes;  // one positive entry per base vertex
};

// Replace base vertex v by a clique of sizes[v] vertices, completely joining
// cliques of adjacent base vertices. Cliques occupy consecutive ids in base
// vertex order. Throws std::invalid_argument when sizes has the wrong length,
// an entry is < 1, or the total exceeds the vertex cap.
Graph blowup(const BlowupSpec& spec);

// The quotient preserves diameter whenever it is not complete: reports
// d(g^c) >= 1 implies d(g^c) == d(g) (vacuously true when the quotient is a
// single class). Throws std::invalid_argument when g is disconnected.
bool diameter_transfer_check(const Graph& g);

// Each identified duplicate contributes exactly one to the −1 multiplicity:
// reports m_g(−1) == m_{g^c}(−1) + (n(g) − n(g^c)) and that extremality
// m(−1) = n − d holds for g iff it holds for the quotient. When the quotient
// is a single vertex (g complete) the diameter identity is unavailable, so
// the check instead peels duplicate vertices one at a time and verifies each
// peel drops m(−1) by exactly one. Requires g connected with d(g) ≥ 1
// (std::invalid_argument otherwise).
bool multiplicity_transfer_check(const Graph& g);

}  // namespace specmin
