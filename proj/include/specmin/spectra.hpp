// Spectral quantities of a graph, all exact: eigenvalue multiplicities via
// fraction-free rank, distinct-eigenvalue counts via squarefree degrees, the
// maximal multiplicity with its attaining factors, and the minimality /
// extremality predicates tying multiplicity to the diameter.
#pragma once

#include "specmin/exact.hpp"
#include "specmin/graph.hpp"

#include <optional>
#include <vector>

namespace specmin {

IntMatrix adjacency_matrix(const Graph& g);

// m_G(μ) = n − rank(A − μI), exact for any rational μ; 0 when μ is not an
// eigenvalue. Accepts disconnected graphs.
int multiplicity(const Graph& g, const BigRat& mu);

// Number of distinct (real algebraic) eigenvalues: degree of the squarefree
// part of the characteristic polynomial.
int distinct_eigenvalue_count(const Graph& g);

struct MaxMultiplicity {
    int value = 0;
    std::vector<IntPolynomial> factors;  // primitive factors whose roots attain it
};

// Largest multiplicity over all eigenvalues, with every squarefree factor
// whose roots attain it. A single vertex yields (1, [x]).
MaxMultiplicity max_multiplicity(const Graph& g);

// True iff the distinct-eigenvalue count equals diameter + 1, the least value
// possible for a connected graph. Throws std::invalid_argument when g is
// disconnected.
bool is_minimal(const Graph& g);

// True iff m_G(μ) = n − d, the largest value any eigenvalue multiplicity can
// take on a connected graph of diameter d. Throws std::invalid_argument when
// g is disconnected.
bool extremality_check(const Graph& g, const BigRat& mu);

// Deleting one vertex moves any multiplicity by at most one; reports whether
// |m_G(μ) − m_{G−v}(μ)| ≤ 1 holds (false would expose a kernel bug). Requires
// n ≥ 2.
bool interlacing_check(const Graph& g, int v, const BigRat& mu);

// For a pendant vertex x with neighbor y, the nullity is unchanged by
// deleting both: reports m_G(0) == m_{G−x−y}(0). Requires n ≥ 3 and
// deg(x) = 1 (std::invalid_argument otherwise).
bool pendant_nullity_check(const Graph& g, int x);

struct SpectralSummary {
    int n = 0;
    std::optional<int> d;  // empty iff disconnected
    int mult0 = 0;         // m_G(0)
    int multm1 = 0;        // m_G(−1)
    int distinct = 0;      // number of distinct eigenvalues
    int maxmult = 0;
    std::vector<IntPolynomial> maxmult_factors;
};

SpectralSummary summarize(const Graph& g);

}  // namespace specmin
