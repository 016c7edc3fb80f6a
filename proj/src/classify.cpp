#include "specmin/classify.hpp"

#include "specmin/canonical.hpp"
#include "specmin/constructors.hpp"
#include "specmin/spectra.hpp"
#include "specmin/star.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <chrono>
#include <iostream>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace specmin {

namespace {

std::uint64_t full_mask(const Graph& g) {
    return g.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n()) - 1;
}

// Blowup sizes indexed by the base labeling: class c of the partition maps to
// base vertex map[c].
std::vector<int> aligned_sizes(const Partition& part, const std::vector<int>& map, int base_n) {
    std::vector<int> sizes(static_cast<std::size_t>(base_n), 0);
    for (std::size_t c = 0; c < part.classes.size(); ++c)
        sizes[static_cast<std::size_t>(map[c])] = std::popcount(part.classes[c]);
    return sizes;
}

// Is q a path of length d plus degree-2 attachment vertices on distinct
// consecutive pairs, for ANY attachment positions? Only used to tell "right
// shape, wrong spacing" from "wrong shape entirely", so a bounded search that
// gives up (returning false) on absurdly branchy inputs is acceptable.
bool attachment_shape_rec(const Graph& q, const std::vector<int>& cands, std::size_t from,
                          std::uint64_t chosen, int need, long& budget) {
    if (--budget <= 0) return false;
    if (need == 0) {
        const Graph rest = induced_subgraph(q, full_mask(q) & ~chosen);
        return is_path(rest);
    }
    for (std::size_t i = from; i + static_cast<std::size_t>(need) <= cands.size(); ++i) {
        const int s = cands[i];
        if ((q.row(s) & chosen) != 0) continue;  // attachments are pairwise non-adjacent
        bool dup = false;  // two attachments may not share a consecutive pair
        std::uint64_t c = chosen;
        while (c != 0) {
            const int t = std::countr_zero(c);
            c &= c - 1;
            if (q.row(t) == q.row(s)) {
                dup = true;
                break;
            }
        }
        if (dup) continue;
        if (attachment_shape_rec(q, cands, i + 1, chosen | (std::uint64_t{1} << s), need - 1,
                                 budget))
            return true;
    }
    return false;
}

bool attachment_shape(const Graph& q, int d) {
    const int k = q.n() - (d + 1);
    if (k < 0) return false;
    if (k == 0) return is_path(q);
    std::vector<int> cands;
    for (int v = 0; v < q.n(); ++v) {
        if (q.degree(v) != 2) continue;
        const std::uint64_t row = q.row(v);
        const int a = std::countr_zero(row);
        const int b = std::countr_zero(row & (row - 1));
        if (q.adjacent(a, b)) cands.push_back(v);
    }
    if (static_cast<int>(cands.size()) < k) return false;
    long budget = 200000;
    return attachment_shape_rec(q, cands, 0, 0, k, budget);
}

}  // namespace

Classification classify_minus_one(const Graph& g) {
    const std::optional<int> dg = diameter(g);
    if (!dg) throw std::invalid_argument("classify_minus_one: disconnected graph");
    if (g.n() < 2) throw std::invalid_argument("classify_minus_one: need n >= 2");
    Classification out;
    if (is_complete(g)) {
        out.kind = GraphClass::Complete;
        out.n = g.n();
        return out;
    }
    const QuotientResult q = quotient(g);
    if (q.graph.n() == 5) {
        if (const auto map = find_isomorphism(q.graph, path(5))) {
            out.kind = GraphClass::QuotientP5;
            out.blowup_sizes = aligned_sizes(q.partition, *map, 5);
            return out;
        }
    }
    const int d = *dg;
    out.kind = GraphClass::NotExtremal;
    if (d % 3 != 1) {
        out.reason = NotExtremalReason::FailsMod3;
        return out;
    }
    if (d < 7) {
        out.reason = NotExtremalReason::DiameterTooSmall;
        return out;
    }
    const ExtremalDiamondFamily family(d);
    const int want = q.graph.n() - (d + 1);  // attachment count the sizes force
    if (want >= 0 && want <= static_cast<int>(family.positions().size())) {
        for (std::uint64_t i = 0; i < family.size(); ++i) {
            if (std::popcount(i) != want) continue;
            auto [spec, target] = family.at(i);
            if (const auto map = find_isomorphism(q.graph, target)) {
                out.kind = GraphClass::DiamondFamily;
                out.d = d;
                out.attachments = spec.attachments;
                out.blowup_sizes = aligned_sizes(q.partition, *map, target.n());
                return out;
            }
        }
    }
    out.reason = attachment_shape(q.graph, d) ? NotExtremalReason::SpacingViolation
                                              : NotExtremalReason::QuotientMismatch;
    return out;
}

bool characterization_crosscheck(const Graph& g) {
    const Classification c = classify_minus_one(g);
    const bool structural = c.kind != GraphClass::NotExtremal;
    return structural == extremality_check(g, BigRat(-1));
}

bool extremal_eigenvalue_check(const Graph& g) {
    const std::optional<int> dg = diameter(g);
    if (!dg) throw std::invalid_argument("extremal_eigenvalue_check: disconnected graph");
    if (is_path(g)) throw std::invalid_argument("extremal_eigenvalue_check: paths are excluded");
    const int target = g.n() - *dg;
    const IntPolynomial x{0, 1}, x1{1, 1}, xx1{0, 1, 1};
    for (const auto& [factor, exponent] :
         squarefree_decomposition(char_poly(adjacency_matrix(g))))
        if (exponent == target && !(factor == x || factor == x1 || factor == xx1)) return false;
    return true;
}

namespace {

std::vector<Graph> enumerate_connected(int n, int jobs) {
    if (n == 1) return {Graph(1)};
    const int bits = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << bits;
    const int workers = std::max(1, jobs);
    std::vector<std::unordered_set<std::uint64_t>> found(static_cast<std::size_t>(workers));
    auto scan = [&](int w) {
        for (std::uint64_t mask = static_cast<std::uint64_t>(w); mask < total;
             mask += static_cast<std::uint64_t>(workers)) {
            const Graph g = unpack_edge_bits(n, mask);
            if (!is_connected(g)) continue;
            found[static_cast<std::size_t>(w)].insert(
                pack_edge_bits(relabel(g, canonical_order(g))));
        }
    };
    if (workers == 1) {
        scan(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(scan, w);
        for (auto& t : pool) t.join();
    }
    std::set<std::uint64_t> keys;
    for (const auto& s : found) keys.insert(s.begin(), s.end());
    std::vector<Graph> out;
    out.reserve(keys.size());
    for (const std::uint64_t k : keys) out.push_back(unpack_edge_bits(n, k));
    return out;
}

std::mutex census_mutex;
std::map<int, std::vector<Graph>> census_cache;

const std::vector<Graph>& census(int n, int jobs) {
    std::lock_guard<std::mutex> lock(census_mutex);
    auto it = census_cache.find(n);
    if (it == census_cache.end()) it = census_cache.emplace(n, enumerate_connected(n, jobs)).first;
    return it->second;
}

}  // namespace

std::vector<Graph> connected_graphs(int n, bool allow_large) {
    if (n < 1) throw std::invalid_argument("connected_graphs: need n >= 1");
    if (n > 8)
        throw std::invalid_argument("connected_graphs: the census stops at n = 8");
    if (n == 8) {
        if (!allow_large)
            throw std::invalid_argument(
                "connected_graphs: n = 8 sweeps 2^28 labeled graphs; pass the override to proceed");
        std::cerr << "connected_graphs: sweeping 2^28 labeled graphs; this takes a while\n";
    }
    return census(n, 1);
}

namespace {

struct GraphVerdict {
    std::string kind_key;
    std::string reason_key;
    std::vector<Counterexample> problems;
};

void add_problem(GraphVerdict& v, const Graph& g, const char* check, std::string detail) {
    v.problems.push_back({write_graph6(g), check, std::move(detail)});
}

const char* kind_count_key(GraphClass kind) {
    switch (kind) {
        case GraphClass::Complete: return "complete";
        case GraphClass::QuotientP5: return "quotient_p5";
        case GraphClass::DiamondFamily: return "diamond_family";
        case GraphClass::NotExtremal: return "not_extremal";
    }
    return "";
}

const char* reason_count_key(NotExtremalReason reason) {
    switch (reason) {
        case NotExtremalReason::FailsMod3: return "not_extremal:fails-mod-3";
        case NotExtremalReason::DiameterTooSmall: return "not_extremal:diameter-too-small";
        case NotExtremalReason::SpacingViolation: return "not_extremal:spacing-violation";
        case NotExtremalReason::QuotientMismatch: return "not_extremal:quotient-mismatch";
        case NotExtremalReason::None: return "";
    }
    return "";
}

void check_certificate(GraphVerdict& v, const Graph& g, const Classification& c) {
    switch (c.kind) {
        case GraphClass::Complete:
            if (!is_complete(g) || c.n != g.n())
                add_problem(v, g, "crosscheck", "complete certificate does not match");
            break;
        case GraphClass::QuotientP5:
            if (!are_isomorphic(blowup({path(5), c.blowup_sizes}), g))
                add_problem(v, g, "crosscheck", "path-quotient certificate does not re-blow");
            break;
        case GraphClass::DiamondFamily:
            if (!are_isomorphic(blowup({diamond({c.d, c.attachments}), c.blowup_sizes}), g))
                add_problem(v, g, "crosscheck", "attachment certificate does not re-blow");
            break;
        case GraphClass::NotExtremal:
            break;
    }
}

void verify_starsets(GraphVerdict& v, const Graph& g) {
    for (int mu_i = -2; mu_i <= 2; ++mu_i) {
        const BigRat mu(mu_i);
        if (multiplicity(g, mu) == 0) continue;
        const std::string tag = " at mu=" + std::to_string(mu_i);
        if (!projection_identity_check(g, mu))
            add_problem(v, g, "starset", "projection identity failed" + tag);
        const auto sets = find_star_sets(g, mu, 10);
        if (sets.empty()) {
            add_problem(v, g, "starset", "no star set found" + tag);
            continue;
        }
        for (const auto& dec : sets) {
            if (!is_star_complement(g, mu, dec.complement))
                add_problem(v, g, "starset", "complement fails the defining test" + tag);
            // an empty complement (star set = V) dominates nothing by
            // definition; the domination guarantee presupposes a remainder
            if (dec.complement != 0 && !dominating_check(g, dec.complement))
                add_problem(v, g, "starset", "complement not dominating" + tag);
            if (!star_set_basis_check(g, dec))
                add_problem(v, g, "starset", "projected columns are dependent" + tag);
            if (std::popcount(dec.star_set) >= 2)
                for (int u = 0; u < g.n(); ++u)
                    if ((dec.star_set >> u) & 1u &&
                        !star_subset_check(g, mu, dec.star_set, std::uint64_t{1} << u))
                        add_problem(v, g, "starset", "removal broke the star set" + tag);
        }
    }
}

void verify_quotient(GraphVerdict& v, const Graph& g) {
    const QuotientResult q = quotient(g);
    if (!(quotient(q.graph).graph == q.graph))
        add_problem(v, g, "canonical", "quotient is not idempotent");
    if (!diameter_transfer_check(g))
        add_problem(v, g, "canonical", "quotient changed the diameter");
    if (g.n() >= 2 && !multiplicity_transfer_check(g))
        add_problem(v, g, "canonical", "m(-1) ledger mismatch through the quotient");
    const BigRat minus_one(-1);
    const int mg = multiplicity(g, minus_one);
    for (const std::uint64_t cls : q.partition.classes) {
        if (std::popcount(cls) < 2) continue;
        for (int u = 0; u < g.n(); ++u) {
            if (!((cls >> u) & 1u)) continue;
            const Graph rest = induced_subgraph(g, full_mask(g) & ~(std::uint64_t{1} << u));
            if (multiplicity(rest, minus_one) + 1 != mg)
                add_problem(v, g, "canonical",
                            "peeling duplicate " + std::to_string(u) +
                                " did not shed exactly one from m(-1)");
        }
    }
}

GraphVerdict verify_one(const Graph& g, const CampaignChecks& checks) {
    GraphVerdict v;
    const int n = g.n();
    const int d = *diameter(g);
    const std::uint64_t all = full_mask(g);

    if (n >= 2) {
        const Classification c = classify_minus_one(g);
        v.kind_key = kind_count_key(c.kind);
        v.reason_key = reason_count_key(c.reason);
        if (checks.crosscheck) {
            const bool structural = c.kind != GraphClass::NotExtremal;
            const bool spectral = multiplicity(g, BigRat(-1)) == n - d;
            if (structural != spectral)
                add_problem(v, g, "crosscheck",
                            structural ? "classified extremal but m(-1) != n-d"
                                       : "m(-1) = n-d but classified not extremal");
            check_certificate(v, g, c);
        }
    }
    if (checks.roundtrip) {
        if (!(parse_graph6(write_graph6(g)) == g))
            add_problem(v, g, "roundtrip", "decode(encode) changed the graph");
    }
    if (checks.bounds) {
        if (distinct_eigenvalue_count(g) < d + 1)
            add_problem(v, g, "bounds", "fewer distinct eigenvalues than d+1");
        if (max_multiplicity(g).value > n - d)
            add_problem(v, g, "bounds", "a multiplicity exceeds n-d");
    }
    if (checks.witness && !is_path(g)) {
        if (!extremal_eigenvalue_check(g))
            add_problem(v, g, "witness", "factor attaining n-d does not divide x(x+1)");
    }
    if (checks.interlacing && n >= 2) {
        for (int mu = -2; mu <= 2; ++mu)
            for (int vert = 0; vert < n; ++vert)
                if (!interlacing_check(g, vert, BigRat(mu)))
                    add_problem(v, g, "interlacing",
                                "deleting vertex " + std::to_string(vert) + " moved m(" +
                                    std::to_string(mu) + ") by more than one");
    }
    if (checks.pendant && n >= 3) {
        for (int x = 0; x < n; ++x)
            if (g.degree(x) == 1 && !pendant_nullity_check(g, x))
                add_problem(v, g, "pendant",
                            "deleting pendant " + std::to_string(x) +
                                " and its neighbor changed the nullity");
    }
    if (checks.rankmono) {
        for (int mu = -2; mu <= 2; ++mu) {
            IntMatrix a = adjacency_matrix(g);
            for (int i = 0; i < n; ++i) a.at(i, i) -= mu;
            const int whole = rank_exact(std::move(a));
            auto exceeds = [&](std::uint64_t keep) {
                IntMatrix b = adjacency_matrix(induced_subgraph(g, keep));
                for (int i = 0; i < std::popcount(keep); ++i) b.at(i, i) -= mu;
                return rank_exact(std::move(b)) > whole;
            };
            bool bad = false;
            if (n <= 6) {
                for (std::uint64_t keep = 1; keep < all && !bad; ++keep) bad = exceeds(keep);
            } else {
                for (int vert = 0; vert < n && !bad; ++vert)
                    bad = exceeds(all & ~(std::uint64_t{1} << vert));
            }
            if (bad)
                add_problem(v, g, "rankmono",
                            "an induced subgraph raised rank(A - " + std::to_string(mu) + "I)");
        }
    }
    if (checks.starset) verify_starsets(v, g);
    if (checks.canonical) verify_quotient(v, g);
    return v;
}

}  // namespace

VerificationReport run_campaign(int n_max, const CampaignChecks& checks, int jobs) {
    if (n_max < 1 || n_max > 8)
        throw std::invalid_argument("run_campaign: n_max must be between 1 and 8");
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport report;
    report.n_max = n_max;
    for (const char* key :
         {"complete", "quotient_p5", "diamond_family", "not_extremal",
          "not_extremal:fails-mod-3", "not_extremal:diameter-too-small",
          "not_extremal:spacing-violation", "not_extremal:quotient-mismatch"})
        report.counts[key] = 0;
    const int workers = std::max(1, jobs);
    for (int n = 1; n <= n_max; ++n) {
        const std::vector<Graph>& graphs = census(n, workers);
        report.graphs_scanned += static_cast<long>(graphs.size());
        std::vector<GraphVerdict> verdicts(graphs.size());
        auto work = [&](int w) {
            for (std::size_t i = static_cast<std::size_t>(w); i < graphs.size();
                 i += static_cast<std::size_t>(workers))
                verdicts[i] = verify_one(graphs[i], checks);
        };
        if (workers == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(workers));
            for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
            for (auto& t : pool) t.join();
        }
        for (auto& verdict : verdicts) {
            if (!verdict.kind_key.empty()) ++report.counts[verdict.kind_key];
            if (!verdict.reason_key.empty()) ++report.counts[verdict.reason_key];
            for (auto& p : verdict.problems) report.counterexamples.push_back(std::move(p));
        }
    }
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

std::string report_to_json(const VerificationReport& report) {
    nlohmann::json j;
    j["n"] = report.n_max;
    j["counts"] = nlohmann::json::object();
    for (const auto& [key, count] : report.counts) j["counts"][key] = count;
    j["counterexamples"] = nlohmann::json::array();
    for (const auto& ce : report.counterexamples)
        j["counterexamples"].push_back(
            {{"graph6", ce.graph6}, {"check", ce.check}, {"detail", ce.detail}});
    return j.dump();
}

}  // namespace specmin
