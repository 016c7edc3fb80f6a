#include "specmin/star.hpp"

#include "specmin/spectra.hpp"

#include <bit>
#include <stdexcept>

namespace specmin {

namespace {

std::uint64_t full_mask(const Graph& g) {
    return g.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n()) - 1;
}

void require_subset(const Graph& g, std::uint64_t s, const char* op) {
    if ((s & ~full_mask(g)) != 0)
        throw std::invalid_argument(std::string(op) + ": vertex out of range");
}

// m of the graph induced on `keep`; an empty remainder has no spectrum.
int remainder_multiplicity(const Graph& g, const BigRat& mu, std::uint64_t keep) {
    if (keep == 0) return 0;
    return multiplicity(induced_subgraph(g, keep), mu);
}

void search_star_sets(const Graph& g, const BigRat& mu, int m, int first, std::uint64_t chosen,
                      int chosen_count, std::size_t limit,
                      std::vector<StarDecomposition>& out) {
    if (limit != 0 && out.size() >= limit) return;
    if (chosen_count == m) {
        out.push_back({mu, chosen, full_mask(g) & ~chosen});
        return;
    }
    for (int v = first; v <= g.n() - (m - chosen_count); ++v) {
        const std::uint64_t next = chosen | (std::uint64_t{1} << v);
        // a star set X ⊇ X′ needs m − |X′| of slack exactly: each further
        // deletion sheds at most one from the multiplicity
        if (remainder_multiplicity(g, mu, full_mask(g) & ~next) != m - chosen_count - 1)
            continue;
        search_star_sets(g, mu, m, v + 1, next, chosen_count + 1, limit, out);
        if (limit != 0 && out.size() >= limit) return;
    }
}

}  // namespace

std::vector<StarDecomposition> find_star_sets(const Graph& g, const BigRat& mu,
                                              std::size_t limit) {
    const int m = multiplicity(g, mu);
    if (m == 0) throw std::invalid_argument("find_star_sets: not an eigenvalue");
    std::vector<StarDecomposition> out;
    search_star_sets(g, mu, m, 0, 0, 0, limit, out);
    return out;
}

bool is_star_complement(const Graph& g, const BigRat& mu, std::uint64_t keep) {
    require_subset(g, keep, "is_star_complement");
    const int removed = g.n() - std::popcount(keep);
    if (removed != multiplicity(g, mu)) return false;
    return remainder_multiplicity(g, mu, keep) == 0;
}

bool dominating_check(const Graph& g, std::uint64_t s) {
    require_subset(g, s, "dominating_check");
    for (int v = 0; v < g.n(); ++v) {
        if ((s >> v) & 1u) continue;
        if ((g.row(v) & s) == 0) return false;
    }
    return true;
}

bool projection_identity_check(const Graph& g, const BigRat& mu) {
    const RatMatrix p = eigenprojection(adjacency_matrix(g), mu);
    for (int v = 0; v < g.n(); ++v)
        for (int i = 0; i < g.n(); ++i) {
            BigRat nbr_sum = 0;
            for (int u = 0; u < g.n(); ++u)
                if (g.adjacent(u, v)) nbr_sum += p.at(i, u);
            if (mu * p.at(i, v) != nbr_sum) return false;
        }
    return true;
}

namespace {

void require_star_set(const Graph& g, const BigRat& mu, std::uint64_t star_set,
                      const char* op) {
    require_subset(g, star_set, op);
    if (std::popcount(star_set) != multiplicity(g, mu) ||
        remainder_multiplicity(g, mu, full_mask(g) & ~star_set) != 0)
        throw std::invalid_argument(std::string(op) + ": not a star set");
}

}  // namespace

bool star_set_basis_check(const Graph& g, const StarDecomposition& dec) {
    require_star_set(g, dec.mu, dec.star_set, "star_set_basis_check");
    if ((dec.star_set & dec.complement) != 0 ||
        (dec.star_set | dec.complement) != full_mask(g))
        throw std::invalid_argument("star_set_basis_check: set and complement do not partition");
    const RatMatrix p = eigenprojection(adjacency_matrix(g), dec.mu);
    const int k = std::popcount(dec.star_set);
    RatMatrix cols(g.n(), k);
    int c = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (!((dec.star_set >> v) & 1u)) continue;
        for (int i = 0; i < g.n(); ++i) cols.at(i, c) = p.at(i, v);
        ++c;
    }
    return rank_rational(std::move(cols)) == k;
}

bool star_subset_check(const Graph& g, const BigRat& mu, std::uint64_t star_set,
                       std::uint64_t removed) {
    require_star_set(g, mu, star_set, "star_subset_check");
    if (removed == 0 || (removed & ~star_set) != 0 || removed == star_set)
        throw std::invalid_argument("star_subset_check: need nonempty proper subset of the star set");
    const std::uint64_t rest_vertices = full_mask(g) & ~removed;
    const Graph h = induced_subgraph(g, rest_vertices);
    // translate the surviving star vertices into h's compact labels
    std::uint64_t rest_star = 0;
    int new_id = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (!((rest_vertices >> v) & 1u)) continue;
        if ((star_set >> v) & 1u) rest_star |= std::uint64_t{1} << new_id;
        ++new_id;
    }
    const std::uint64_t keep = (h.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << h.n()) - 1) & ~rest_star;
    return std::popcount(rest_star) == multiplicity(h, mu) &&
           remainder_multiplicity(h, mu, keep) == 0;
}

}  // namespace specmin
