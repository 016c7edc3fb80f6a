#include "specmin/spectra.hpp"

#include <stdexcept>

namespace specmin {

IntMatrix adjacency_matrix(const Graph& g) {
    IntMatrix a(g.n(), g.n());
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j)
            if (g.adjacent(i, j)) a.at(i, j) = 1;
    return a;
}

int multiplicity(const Graph& g, const BigRat& mu) {
    const BigInt p = boost::multiprecision::numerator(mu);
    const BigInt q = boost::multiprecision::denominator(mu);
    IntMatrix m = adjacency_matrix(g);
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j) {
            m.at(i, j) *= q;
            if (i == j) m.at(i, j) -= p;
        }
    return g.n() - rank_exact(std::move(m));
}

int distinct_eigenvalue_count(const Graph& g) {
    int total = 0;
    for (const auto& [factor, mult] : squarefree_decomposition(char_poly(adjacency_matrix(g))))
        total += factor.degree();
    return total;
}

MaxMultiplicity max_multiplicity(const Graph& g) {
    MaxMultiplicity out;
    for (auto& [factor, mult] : squarefree_decomposition(char_poly(adjacency_matrix(g)))) {
        if (mult > out.value) {
            out.value = mult;
            out.factors.clear();
        }
        if (mult == out.value) out.factors.push_back(std::move(factor));
    }
    return out;
}

namespace {

int require_diameter(const Graph& g, const char* op) {
    const std::optional<int> d = diameter(g);
    if (!d) throw std::invalid_argument(std::string(op) + ": disconnected graph");
    return *d;
}

}  // namespace

bool is_minimal(const Graph& g) {
    return distinct_eigenvalue_count(g) == require_diameter(g, "is_minimal") + 1;
}

bool extremality_check(const Graph& g, const BigRat& mu) {
    const int d = require_diameter(g, "extremality_check");
    return multiplicity(g, mu) == g.n() - d;
}

bool interlacing_check(const Graph& g, int v, const BigRat& mu) {
    if (g.n() < 2) throw std::invalid_argument("interlacing_check: need n >= 2");
    if (v < 0 || v >= g.n()) throw std::invalid_argument("interlacing_check: bad vertex");
    const std::uint64_t all =
        g.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n()) - 1;
    const int whole = multiplicity(g, mu);
    const int deleted = multiplicity(induced_subgraph(g, all & ~(std::uint64_t{1} << v)), mu);
    const int diff = whole - deleted;
    return diff >= -1 && diff <= 1;
}

bool pendant_nullity_check(const Graph& g, int x) {
    if (g.n() < 3) throw std::invalid_argument("pendant_nullity_check: need n >= 3");
    if (x < 0 || x >= g.n() || g.degree(x) != 1)
        throw std::invalid_argument("pendant_nullity_check: vertex is not pendant");
    const std::uint64_t all =
        g.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n()) - 1;
    const std::uint64_t xy = g.row(x) | (std::uint64_t{1} << x);  // x and its neighbor
    return multiplicity(g, BigRat(0)) == multiplicity(induced_subgraph(g, all & ~xy), BigRat(0));
}

SpectralSummary summarize(const Graph& g) {
    SpectralSummary s;
    s.n = g.n();
    s.d = diameter(g);
    s.mult0 = multiplicity(g, BigRat(0));
    s.multm1 = multiplicity(g, BigRat(-1));
    s.distinct = distinct_eigenvalue_count(g);
    MaxMultiplicity mm = max_multiplicity(g);
    s.maxmult = mm.value;
    s.maxmult_factors = std::move(mm.factors);
    return s;
}

}  // namespace specmin
