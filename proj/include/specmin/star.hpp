// Star sets and star complements for an eigenvalue μ: exhaustive search with
// rank pruning, dominating-set verification, and exact rational checks of the
// eigenprojection identities.
#pragma once

#include "specmin/exact.hpp"
#include "specmin/graph.hpp"

#include <cstdint>
#include <vector>

namespace specmin {

// A vertex set X with |X| = m_G(μ) whose removal eliminates the eigenvalue:
// m_{G−X}(μ) = 0. The remainder G − X is the star complement.
struct StarDecomposition {
    BigRat mu;
    std::uint64_t star_set = 0;
    std::uint64_t complement = 0;
};

// All star sets for μ, in lexicographic order of their ascending vertex
// lists, truncated to `limit` entries (0 = no limit). The search prunes any
// partial set X′ with m_{G−X′}(μ) ≠ m_G(μ) − |X′|, which no star set can
// extend. Throws std::invalid_argument when μ is not an eigenvalue; a genuine
// eigenvalue always yields at least one set.
std::vector<StarDecomposition> find_star_sets(const Graph& g, const BigRat& mu,
                                              std::size_t limit = 0);

// True iff keep's complement X satisfies |X| = m_G(μ) and the graph induced
// on keep lacks the eigenvalue μ. keep may be empty (then X = V, valid iff
// m_G(μ) = n). Throws std::invalid_argument on out-of-range bits.
bool is_star_complement(const Graph& g, const BigRat& mu, std::uint64_t keep);

// True iff every vertex outside s has a neighbor in s. The empty set
// dominates nothing, so s = ∅ fails for every graph (including K_1).
bool dominating_check(const Graph& g, std::uint64_t s);

// With P the exact projection onto the μ-eigenspace, every vertex v satisfies
// μ·P e_v = Σ_{u∼v} P e_u; reports whether that holds exactly in rationals
// (vacuously true when μ is not an eigenvalue, since P = 0).
bool projection_identity_check(const Graph& g, const BigRat& mu);

// The projected unit vectors {P e_i : i ∈ X} of a star set X form a basis of
// the eigenspace; reports whether their exact rational rank equals |X|.
// Throws std::invalid_argument when dec is not a valid decomposition for g.
bool star_set_basis_check(const Graph& g, const StarDecomposition& dec);

// Removing a nonempty proper subset U ⊊ X of a star set leaves X \ U a star
// set for μ in G − U; reports whether that holds. Throws
// std::invalid_argument when X is not a star set for μ or U is not a
// nonempty proper subset of X.
bool star_subset_check(const Graph& g, const BigRat& mu, std::uint64_t star_set,
                       std::uint64_t removed);

}  // namespace specmin
