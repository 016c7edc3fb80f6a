#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "specmin/canonical.hpp"
#include "specmin/constructors.hpp"
#include "specmin/graph.hpp"
#include "specmin/spectra.hpp"

#include <random>
#include <stdexcept>

using namespace specmin;

TEST_CASE("paths, cycles, complete graphs") {
    CHECK(path(1) == Graph(1));
    CHECK(path(2) == complete(2));
    CHECK(path(4).edge_count() == 3);
    CHECK(is_path(path(9)));
    CHECK_THROWS_AS(path(0), std::invalid_argument);

    CHECK(are_isomorphic(cycle(3), complete(3)));
    CHECK(cycle(6).edge_count() == 6);
    for (int v = 0; v < 6; ++v) CHECK(cycle(6).degree(v) == 2);
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);

    CHECK(complete(1) == Graph(1));
    CHECK(complete(5).edge_count() == 10);
    CHECK(is_complete(complete(7)));
    CHECK_THROWS_AS(complete(0), std::invalid_argument);
}

TEST_CASE("attachment graphs have the documented shape") {
    // d = 7, W = {2, 3, 5}: 11 vertices, 13 edges
    const Graph fig = diamond({7, {2, 3, 5}});
    CHECK(fig.n() == 11);
    CHECK(fig.edge_count() == 13);
    // path spine
    for (int i = 0; i < 7; ++i) CHECK(fig.adjacent(i, i + 1));
    // u_2 = vertex 8, u_3 = 9, u_5 = 10 (ascending attachment order)
    CHECK(fig.adjacent(8, 2));
    CHECK(fig.adjacent(8, 3));
    CHECK(fig.adjacent(9, 3));
    CHECK(fig.adjacent(9, 4));
    CHECK(fig.adjacent(10, 5));
    CHECK(fig.adjacent(10, 6));
    CHECK(fig.degree(8) == 2);
    CHECK(fig.degree(9) == 2);
    CHECK(fig.degree(10) == 2);
    CHECK_FALSE(fig.adjacent(8, 9));
    CHECK_FALSE(fig.adjacent(8, 10));
    CHECK_FALSE(fig.adjacent(9, 10));

    // attachments may be listed in any order
    CHECK(diamond({7, {5, 2, 3}}) == fig);

    CHECK(diamond({4, {}}) == path(5));

    const Graph one = diamond({7, {3}});
    CHECK(one.n() == 9);
    CHECK(one.edge_count() == 9);
    CHECK(diameter(one) == 7);
    CHECK(multiplicity(one, BigRat(-1)) == 2);

    CHECK_THROWS_AS(diamond({5, {5}}), std::invalid_argument);
    CHECK_THROWS_AS(diamond({5, {-1}}), std::invalid_argument);
    CHECK_THROWS_AS(diamond({5, {2, 2}}), std::invalid_argument);
}

TEST_CASE("attachment graph with empty W is the plain path") {
    for (int d = 1; d <= 20; ++d) CHECK(diamond({d, {}}) == path(d + 1));
}

TEST_CASE("admissible positions are every third interior index") {
    const AdmissibleSet u7 = admissible_set(7);
    CHECK(u7.d == 7);
    CHECK(u7.positions == std::vector<int>{3});

    CHECK(admissible_set(10).positions == std::vector<int>{3, 6});
    CHECK(admissible_set(13).positions == std::vector<int>{3, 6, 9});
    CHECK(admissible_set(16).positions == std::vector<int>{3, 6, 9, 12});

    for (int d : {1, 2, 3, 4, 5, 6, 8, 9, 11, 12})
        CHECK_THROWS_AS(admissible_set(d), std::invalid_argument);
}

TEST_CASE("the extremal family enumerates subsets of the admissible set") {
    const ExtremalDiamondFamily f7 = extremal_diamond_family(7);
    CHECK(f7.size() == 2);
    CHECK(f7.at(0).first.attachments.empty());
    CHECK(f7.at(0).second == path(8));
    CHECK(f7.at(1).first.attachments == std::vector<int>{3});
    CHECK(f7.at(1).second == diamond({7, {3}}));
    CHECK_THROWS_AS(f7.at(2), std::out_of_range);

    CHECK(extremal_diamond_family(10).size() == 4);
    CHECK(extremal_diamond_family(13).size() == 8);

    // bit t of the index selects positions[t]
    const ExtremalDiamondFamily f13 = extremal_diamond_family(13);
    CHECK(f13.at(0b101).first.attachments == std::vector<int>{3, 9});
    CHECK(f13.at(0b110).first.attachments == std::vector<int>{6, 9});

    CHECK_THROWS_AS(extremal_diamond_family(9), std::invalid_argument);
}

TEST_CASE("every family member attains the extremal -1 multiplicity") {
    for (int d : {7, 10, 13}) {
        const ExtremalDiamondFamily fam = extremal_diamond_family(d);
        for (std::uint64_t i = 0; i < fam.size(); ++i) {
            const auto [spec, g] = fam.at(i);
            CHECK(is_connected(g));
            CHECK(is_canonical(g));
            CHECK(diameter(g) == d);
            CHECK(multiplicity(g, BigRat(-1)) == g.n() - d);
            CHECK(extremality_check(g, BigRat(-1)));
            CHECK(g.n() == d + 1 + static_cast<int>(spec.attachments.size()));
        }
    }
}

TEST_CASE("attachments outside the admissible pattern break extremality") {
    // W = {2} is not a subset of {3}: diameter stays 7 but m(-1) falls short
    const Graph off = diamond({7, {2}});
    CHECK(diameter(off) == 7);
    CHECK_FALSE(extremality_check(off, BigRat(-1)));

    // adjacent attachment positions also fail
    const Graph pair = diamond({7, {3, 4}});
    CHECK_FALSE(extremality_check(pair, BigRat(-1)));

    // the documented 11-vertex example with W = {2, 3, 5}
    const Graph fig = diamond({7, {2, 3, 5}});
    CHECK(diameter(fig) == 7);
    CHECK(multiplicity(fig, BigRat(-1)) < fig.n() - 7);
}

TEST_CASE("random clique blowups of family members stay extremal") {
    std::mt19937 rng(3001);
    for (int d : {7, 10}) {
        const ExtremalDiamondFamily fam = extremal_diamond_family(d);
        for (std::uint64_t i = 0; i < fam.size(); ++i) {
            const Graph base = fam.at(i).second;
            for (int trial = 0; trial < 5; ++trial) {
                std::vector<int> sizes(static_cast<std::size_t>(base.n()), 1);
                for (int extra = oracles::rand_int(rng, 1, 6); extra > 0; --extra)
                    sizes[static_cast<std::size_t>(
                        oracles::rand_int(rng, 0, base.n() - 1))] += 1;
                const Graph g = blowup({base, sizes});
                CHECK(diameter(g) == d);
                CHECK(multiplicity(g, BigRat(-1)) == g.n() - d);
            }
        }
    }
}
