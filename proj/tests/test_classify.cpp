#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "specmin/canonical.hpp"
#include "specmin/classify.hpp"
#include "specmin/constructors.hpp"
#include "specmin/graph.hpp"
#include "specmin/spectra.hpp"

#include <random>
#include <stdexcept>

using namespace specmin;

TEST_CASE("complete graphs classify as complete") {
    const Classification c = classify_minus_one(complete(7));
    CHECK(c.kind == GraphClass::Complete);
    CHECK(c.n == 7);
    CHECK(classify_minus_one(complete(2)).kind == GraphClass::Complete);
    CHECK(classify_minus_one(cycle(3)).kind == GraphClass::Complete);
}

TEST_CASE("blowups of the 5-path classify with a re-blowable certificate") {
    const Graph g = blowup({path(5), {2, 1, 1, 1, 1}});
    const Classification c = classify_minus_one(g);
    CHECK(c.kind == GraphClass::QuotientP5);
    REQUIRE(c.blowup_sizes.size() == 5);
    CHECK(are_isomorphic(blowup({path(5), c.blowup_sizes}), g));

    // certificate must align sizes to path labels even if the input labels don't
    std::mt19937 rng(5001);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<int> sizes(5);
        int total = 0;
        for (auto& s : sizes) total += (s = oracles::rand_int(rng, 1, 3));
        Graph blown = blowup({path(5), sizes});
        std::vector<int> perm(static_cast<std::size_t>(total));
        for (int i = 0; i < total; ++i) perm[static_cast<std::size_t>(i)] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        blown = relabel(blown, perm);
        const Classification cc = classify_minus_one(blown);
        CHECK(cc.kind == GraphClass::QuotientP5);
        REQUIRE(cc.blowup_sizes.size() == 5);
        CHECK(are_isomorphic(blowup({path(5), cc.blowup_sizes}), blown));
    }

    CHECK(classify_minus_one(path(5)).kind == GraphClass::QuotientP5);
}

TEST_CASE("admissible attachment graphs classify into the diamond family") {
    const Graph g = diamond({7, {3}});
    const Classification c = classify_minus_one(g);
    CHECK(c.kind == GraphClass::DiamondFamily);
    CHECK(c.d == 7);
    CHECK(c.attachments == std::vector<int>{3});
    CHECK(are_isomorphic(blowup({diamond({c.d, c.attachments}), c.blowup_sizes}), g));

    const Classification p8 = classify_minus_one(path(8));
    CHECK(p8.kind == GraphClass::DiamondFamily);
    CHECK(p8.d == 7);
    CHECK(p8.attachments.empty());

    // a blowup of a d = 10 family member, relabeled
    std::mt19937 rng(5002);
    const Graph base = diamond({10, {3, 6}});
    std::vector<int> sizes(static_cast<std::size_t>(base.n()), 1);
    sizes[0] = 2;
    sizes[5] = 3;
    Graph blown = blowup({base, sizes});
    std::vector<int> perm(static_cast<std::size_t>(blown.n()));
    for (int i = 0; i < blown.n(); ++i) perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    blown = relabel(blown, perm);
    const Classification cb = classify_minus_one(blown);
    CHECK(cb.kind == GraphClass::DiamondFamily);
    CHECK(cb.d == 10);
    CHECK(cb.attachments == std::vector<int>{3, 6});
    CHECK(are_isomorphic(blowup({diamond({cb.d, cb.attachments}), cb.blowup_sizes}), blown));
}

TEST_CASE("non-extremal graphs get the right reason") {
    const Classification p7 = classify_minus_one(path(7));
    CHECK(p7.kind == GraphClass::NotExtremal);
    CHECK(p7.reason == NotExtremalReason::FailsMod3);

    CHECK(classify_minus_one(path(9)).reason == NotExtremalReason::FailsMod3);
    CHECK(classify_minus_one(cycle(6)).reason == NotExtremalReason::FailsMod3);

    // d = 4 ≡ 1 (mod 3) but too small, and not complete / P_5-quotient shaped
    Graph spider(6);  // paths of lengths 2,2,1 glued at a center
    spider.add_edge(0, 1);
    spider.add_edge(1, 2);
    spider.add_edge(2, 3);
    spider.add_edge(3, 4);
    spider.add_edge(2, 5);
    REQUIRE(diameter(spider) == 4);
    const Classification sp = classify_minus_one(spider);
    CHECK(sp.kind == GraphClass::NotExtremal);
    CHECK(sp.reason == NotExtremalReason::DiameterTooSmall);

    // attachment shape with W outside the admissible set
    const Classification fig = classify_minus_one(diamond({7, {2, 3, 5}}));
    CHECK(fig.kind == GraphClass::NotExtremal);
    CHECK(fig.reason == NotExtremalReason::SpacingViolation);
    CHECK(classify_minus_one(diamond({7, {2}})).reason ==
          NotExtremalReason::SpacingViolation);

    // d = 7 tree that is not a path with attachments at all
    Graph tee = path(8);
    {
        Graph t(9);
        for (int i = 0; i < 7; ++i) t.add_edge(i, i + 1);
        t.add_edge(8, 3);
        tee = t;
    }
    REQUIRE(diameter(tee) == 7);
    const Classification tc = classify_minus_one(tee);
    CHECK(tc.kind == GraphClass::NotExtremal);
    CHECK(tc.reason == NotExtremalReason::QuotientMismatch);

    CHECK_THROWS_AS(classify_minus_one(Graph(1)), std::invalid_argument);
    CHECK_THROWS_AS(classify_minus_one(Graph(2)), std::invalid_argument);
}

TEST_CASE("classification agrees with the spectral test everywhere") {
    CHECK(characterization_crosscheck(complete(4)));
    CHECK(characterization_crosscheck(path(8)));
    CHECK(characterization_crosscheck(path(7)));
    CHECK(characterization_crosscheck(cycle(6)));
    CHECK(characterization_crosscheck(diamond({7, {3}})));
    CHECK(characterization_crosscheck(diamond({7, {2, 3, 5}})));

    for (int d : {7, 10, 13}) {
        const ExtremalDiamondFamily fam = extremal_diamond_family(d);
        for (std::uint64_t i = 0; i < fam.size(); ++i)
            CHECK(characterization_crosscheck(fam.at(i).second));
    }

    std::mt19937 rng(5003);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = oracles::rand_int(rng, 2, 8);
        const Graph g = oracles::random_connected_graph(rng, n, oracles::rand_int(rng, 0, 60));
        CHECK(characterization_crosscheck(g));
    }
}

TEST_CASE("multiplicities attaining n - d belong to 0 or -1") {
    CHECK(extremal_eigenvalue_check(complete(5)));
    CHECK(extremal_eigenvalue_check(cycle(6)));
    Graph claw(4);
    for (int i = 1; i < 4; ++i) claw.add_edge(0, i);
    CHECK(extremal_eigenvalue_check(claw));  // m(0) = 2 = n - d
    CHECK(extremal_eigenvalue_check(diamond({7, {3}})));
    CHECK_THROWS_AS(extremal_eigenvalue_check(path(5)), std::invalid_argument);
    CHECK_THROWS_AS(extremal_eigenvalue_check(Graph(2)), std::invalid_argument);
}

TEST_CASE("census of connected graphs up to isomorphism") {
    const int expected[] = {0, 1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n)
        CHECK(connected_graphs(n).size() == static_cast<std::size_t>(expected[n]));

    const auto three = connected_graphs(3);
    REQUIRE(three.size() == 2);
    CHECK(write_graph6(three[0]) != write_graph6(three[1]));
    for (const Graph& g : three) {
        CHECK(is_connected(g));
        CHECK((are_isomorphic(g, path(3)) || are_isomorphic(g, complete(3))));
    }

    // deterministic order and no isomorphic duplicates
    const auto five_a = connected_graphs(5);
    const auto five_b = connected_graphs(5);
    REQUIRE(five_a.size() == five_b.size());
    for (std::size_t i = 0; i < five_a.size(); ++i) CHECK(five_a[i] == five_b[i]);
    for (std::size_t i = 0; i < five_a.size(); ++i)
        for (std::size_t j = i + 1; j < five_a.size(); ++j)
            CHECK_FALSE(are_isomorphic(five_a[i], five_a[j]));

    CHECK_THROWS_AS(connected_graphs(9), std::invalid_argument);
    CHECK_THROWS_AS(connected_graphs(8), std::invalid_argument);  // needs allow_large
    CHECK_THROWS_AS(connected_graphs(0), std::invalid_argument);
}

TEST_CASE("verification campaign on small orders") {
    const CampaignChecks all;
    const VerificationReport r = run_campaign(4, all);
    CHECK(r.n_max == 4);
    CHECK(r.graphs_scanned == 10);  // 1 + 1 + 2 + 6
    CHECK(r.counterexamples.empty());
    CHECK(r.counts.at("complete") == 3);
    CHECK(r.counts.at("quotient_p5") == 0);
    CHECK(r.counts.at("diamond_family") == 0);
    CHECK(r.counts.at("not_extremal") == 6);

    const VerificationReport r1 = run_campaign(1, all);
    CHECK(r1.graphs_scanned == 1);
    CHECK(r1.counterexamples.empty());

    const VerificationReport r5 = run_campaign(5, all);
    CHECK(r5.graphs_scanned == 31);
    CHECK(r5.counterexamples.empty());
    CHECK(r5.counts.at("complete") == 4);
    CHECK(r5.counts.at("quotient_p5") == 1);  // exactly P_5 itself at n = 5
}

TEST_CASE("campaign reports are deterministic and job-count independent") {
    const CampaignChecks all;
    const std::string a = report_to_json(run_campaign(4, all));
    const std::string b = report_to_json(run_campaign(4, all));
    CHECK(a == b);
    const std::string c = report_to_json(run_campaign(4, all, 3));
    CHECK(a == c);
    const std::string d = report_to_json(run_campaign(4, all, 7));
    CHECK(a == d);

    CHECK(a.find("\"n\":4") != std::string::npos);
    CHECK(a.find("\"counterexamples\":[]") != std::string::npos);
    CHECK(a.find("\"counts\"") != std::string::npos);
    CHECK(a.find("wall") == std::string::npos);
    CHECK(a.find("seconds") == std::string::npos);

    CHECK_THROWS_AS(run_campaign(0, all), std::invalid_argument);
    CHECK_THROWS_AS(run_campaign(9, all), std::invalid_argument);
}

TEST_CASE("campaign honors the check selection") {
    CampaignChecks only;
    only.roundtrip = true;
    only.bounds = only.witness = only.crosscheck = only.interlacing = false;
    only.pendant = only.rankmono = only.starset = only.canonical = false;
    const VerificationReport r = run_campaign(5, only);
    CHECK(r.graphs_scanned == 31);
    CHECK(r.counterexamples.empty());
    // classification counts are produced regardless of which checks run
    CHECK(r.counts.at("complete") == 4);
}
