#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "specmin/constructors.hpp"
#include "specmin/graph.hpp"
#include "specmin/spectra.hpp"
#include "specmin/star.hpp"

#include <bit>
#include <random>
#include <stdexcept>
#include <vector>

using namespace specmin;

namespace {

std::vector<Graph> connected_census(int n) {
    std::vector<Graph> out;
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        Graph g = unpack_edge_bits(n, mask);
        if (is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace

TEST_CASE("star sets of the reference graphs") {
    const auto k3 = find_star_sets(complete(3), BigRat(-1));
    REQUIRE(k3.size() == 3);
    CHECK(k3[0].star_set == 0b011);
    CHECK(k3[1].star_set == 0b101);
    CHECK(k3[2].star_set == 0b110);
    for (const auto& dec : k3) {
        CHECK(dec.complement == (0b111 & ~dec.star_set));
        CHECK(dec.mu == BigRat(-1));
    }

    const auto p5 = find_star_sets(path(5), BigRat(-1));
    REQUIRE(!p5.empty());
    CHECK(p5[0].star_set == 0b00001);  // lexicographically first: {v_0}
    for (const auto& dec : p5) CHECK(std::popcount(dec.star_set) == 1);

    const auto limited = find_star_sets(complete(3), BigRat(-1), 2);
    CHECK(limited.size() == 2);
    CHECK(limited[0].star_set == 0b011);

    CHECK_THROWS_AS(find_star_sets(path(5), BigRat(7)), std::invalid_argument);
    CHECK_THROWS_AS(find_star_sets(path(4), BigRat(0)), std::invalid_argument);
}

TEST_CASE("star complements") {
    CHECK(is_star_complement(complete(3), BigRat(-1), 0b001));
    CHECK_FALSE(is_star_complement(complete(3), BigRat(-1), 0b011));
    CHECK(is_star_complement(path(5), BigRat(-1), 0b11110));
    CHECK(is_star_complement(Graph(1), BigRat(0), 0));  // X = V valid: m = n = 1
    CHECK_FALSE(is_star_complement(complete(2), BigRat(-1), 0));
    CHECK_THROWS_AS(is_star_complement(path(3), BigRat(0), 0b1000), std::invalid_argument);
}

TEST_CASE("domination") {
    for (int n = 2; n <= 6; ++n)
        for (int v = 0; v < n; ++v) CHECK(dominating_check(complete(n), std::uint64_t{1} << v));
    CHECK(dominating_check(path(5), 0b01010));
    CHECK_FALSE(dominating_check(path(5), 0b00001));
    CHECK_FALSE(dominating_check(path(5), 0));
    CHECK_FALSE(dominating_check(Graph(1), 0));  // the empty set dominates nothing
    CHECK(dominating_check(Graph(1), 0b1));
}

TEST_CASE("star complements are dominating sets") {
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : connected_census(n))
            for (int mu = -2; mu <= 2; ++mu) {
                if (multiplicity(g, BigRat(mu)) == 0) continue;
                for (const auto& dec : find_star_sets(g, BigRat(mu), 5))
                    CHECK(dominating_check(g, dec.complement));
            }
}

TEST_CASE("projection identity holds exactly") {
    CHECK(projection_identity_check(complete(2), BigRat(-1)));
    CHECK(projection_identity_check(complete(2), BigRat(1)));
    CHECK(projection_identity_check(cycle(3), BigRat(-1)));
    CHECK(projection_identity_check(path(5), BigRat(0)));
    CHECK(projection_identity_check(path(5), BigRat(100)));  // vacuous: P = 0

    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : connected_census(n))
            for (int mu = -2; mu <= 2; ++mu)
                CHECK(projection_identity_check(g, BigRat(mu)));
}

TEST_CASE("projected star-set columns form an eigenspace basis") {
    for (const auto& dec : find_star_sets(complete(3), BigRat(-1)))
        CHECK(star_set_basis_check(complete(3), dec));

    const auto p5 = find_star_sets(path(5), BigRat(-1), 1);
    REQUIRE(p5.size() == 1);
    CHECK(star_set_basis_check(path(5), p5[0]));

    StarDecomposition bogus;
    bogus.mu = BigRat(-1);
    bogus.star_set = 0b001;  // wrong size for K_3 (m = 2)
    bogus.complement = 0b110;
    CHECK_THROWS_AS(star_set_basis_check(complete(3), bogus), std::invalid_argument);

    StarDecomposition overlapping;
    overlapping.mu = BigRat(-1);
    overlapping.star_set = 0b011;
    overlapping.complement = 0b011;  // not a partition
    CHECK_THROWS_AS(star_set_basis_check(complete(3), overlapping), std::invalid_argument);
}

TEST_CASE("subsets of star sets remain star sets after removal") {
    CHECK(star_subset_check(complete(4), BigRat(-1), 0b1110, 0b0010));
    CHECK(star_subset_check(complete(4), BigRat(-1), 0b1110, 0b1100));
    CHECK(star_subset_check(complete(3), BigRat(-1), 0b011, 0b001));

    const Graph g = diamond({7, {3}});
    const auto sets = find_star_sets(g, BigRat(-1), 1);
    REQUIRE(sets.size() == 1);
    REQUIRE(std::popcount(sets[0].star_set) == 2);
    const std::uint64_t one = sets[0].star_set & (~sets[0].star_set + 1);  // lowest bit
    CHECK(star_subset_check(g, BigRat(-1), sets[0].star_set, one));

    CHECK_THROWS_AS(star_subset_check(complete(3), BigRat(-1), 0b011, 0), std::invalid_argument);
    CHECK_THROWS_AS(star_subset_check(complete(3), BigRat(-1), 0b011, 0b011),
                    std::invalid_argument);
    CHECK_THROWS_AS(star_subset_check(complete(3), BigRat(-1), 0b011, 0b100),
                    std::invalid_argument);
    CHECK_THROWS_AS(star_subset_check(complete(3), BigRat(-1), 0b111, 0b001),
                    std::invalid_argument);  // 0b111 is not a star set
}

TEST_CASE("star-set search is exhaustive and every result verifies") {
    std::mt19937 rng(4001);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = oracles::rand_int(rng, 2, 6);
        const Graph g = oracles::random_connected_graph(rng, n, oracles::rand_int(rng, 10, 80));
        for (int mu = -2; mu <= 2; ++mu) {
            const int m = multiplicity(g, BigRat(mu));
            if (m == 0) continue;
            const auto sets = find_star_sets(g, BigRat(mu));
            CHECK(!sets.empty());
            // against a brute-force scan of all subsets of size m
            std::size_t brute = 0;
            for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
                if (std::popcount(x) != m) continue;
                const std::uint64_t keep = ((std::uint64_t{1} << n) - 1) & ~x;
                const bool ok = keep == 0 ? m == n
                                          : multiplicity(induced_subgraph(g, keep),
                                                         BigRat(mu)) == 0;
                if (ok) ++brute;
            }
            CHECK(sets.size() == brute);
            for (const auto& dec : sets) {
                CHECK(std::popcount(dec.star_set) == m);
                CHECK(is_star_complement(g, BigRat(mu), dec.complement));
                CHECK(star_set_basis_check(g, dec));
            }
            // lexicographic order of the ascending vertex lists
            const auto as_list = [n](std::uint64_t mask) {
                std::vector<int> out;
                for (int v = 0; v < n; ++v)
                    if ((mask >> v) & 1u) out.push_back(v);
                return out;
            };
            for (std::size_t i = 1; i < sets.size(); ++i)
                CHECK(as_list(sets[i - 1].star_set) < as_list(sets[i].star_set));
        }
    }
}
