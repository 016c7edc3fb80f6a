// Command-line front end. Subcommands: check, classify, canonical, construct,
// starset, enumerate. Graphs travel as graph6 (inline, file, or stdin);
// structured results leave as one JSON object per line on stdout; diagnostics
// go to stderr. Exit 0 on success, 1 when a verification run finds
// counterexamples, 2 on usage or input errors.
#include "specmin/canonical.hpp"
#include "specmin/classify.hpp"
#include "specmin/constructors.hpp"
#include "specmin/graph.hpp"
#include "specmin/spectra.hpp"
#include "specmin/star.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <bit>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using nlohmann::json;
using namespace specmin;

BigRat parse_mu(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return BigRat(BigInt(text));
        return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("--mu wants an integer or p/q fraction, got '" + text + "'");
    }
}

// "-" reads stdin; an existing file is read line by line; anything else is
// taken as inline graph6. Blank lines are skipped.
std::vector<std::string> graph_lines(const std::string& source) {
    std::vector<std::string> lines;
    auto drain = [&lines](std::istream& in) {
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
            if (!line.empty()) lines.push_back(line);
        }
    };
    if (source == "-") {
        drain(std::cin);
    } else if (std::ifstream file(source); file.good()) {
        drain(file);
    } else {
        lines.push_back(source);
    }
    if (lines.empty()) throw std::invalid_argument("no graphs in input");
    return lines;
}

std::vector<int> vertex_list(std::uint64_t mask) {
    std::vector<int> out;
    while (mask != 0) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

int run_check(const std::string& source, const std::string& mu_text) {
    const BigRat mu = parse_mu(mu_text);
    for (const std::string& line : graph_lines(source)) {
        const Graph g = parse_graph6(line);
        const int m = multiplicity(g, mu);
        const std::optional<int> d = diameter(g);
        json rec;
        rec["n"] = g.n();
        rec["multiplicity"] = m;
        if (d) {
            rec["d"] = *d;
            rec["extremal"] = m == g.n() - *d;
        } else {
            rec["d"] = "infinite";
            rec["extremal"] = nullptr;
        }
        std::cout << rec.dump() << "\n";
    }
    return 0;
}

int run_classify(const std::string& source) {
    for (const std::string& line : graph_lines(source)) {
        const Classification c = classify_minus_one(parse_graph6(line));
        json rec;
        switch (c.kind) {
            case GraphClass::Complete:
                rec["kind"] = "complete";
                rec["n"] = c.n;
                break;
            case GraphClass::QuotientP5:
                rec["kind"] = "quotient_p5";
                rec["sizes"] = c.blowup_sizes;
                break;
            case GraphClass::DiamondFamily:
                rec["kind"] = "diamond_family";
                rec["d"] = c.d;
                rec["attachments"] = c.attachments;
                rec["sizes"] = c.blowup_sizes;
                break;
            case GraphClass::NotExtremal:
                rec["kind"] = "not_extremal";
                switch (c.reason) {
                    case NotExtremalReason::FailsMod3: rec["reason"] = "fails-mod-3"; break;
                    case NotExtremalReason::DiameterTooSmall:
                        rec["reason"] = "diameter-too-small";
                        break;
                    case NotExtremalReason::SpacingViolation:
                        rec["reason"] = "spacing-violation";
                        break;
                    case NotExtremalReason::QuotientMismatch:
                        rec["reason"] = "quotient-mismatch";
                        break;
                    case NotExtremalReason::None: break;
                }
                break;
        }
        std::cout << rec.dump() << "\n";
    }
    return 0;
}

int run_canonical(const std::string& source) {
    for (const std::string& line : graph_lines(source))
        std::cout << canonical_form(parse_graph6(line)) << "\n";
    return 0;
}

int run_construct(const std::string& family, int n, int d, const std::string& w_text,
                  long limit) {
    std::vector<int> w;
    if (!w_text.empty()) {
        std::istringstream in(w_text);
        std::string item;
        while (std::getline(in, item, ','))
            w.push_back(std::stoi(item));
    }
    auto need_n = [&] {
        if (n < 1) throw std::invalid_argument("construct " + family + ": pass --n");
    };
    auto need_d = [&] {
        if (d < 1) throw std::invalid_argument("construct " + family + ": pass --d");
    };
    if (family == "path") {
        need_n();
        std::cout << write_graph6(path(n)) << "\n";
    } else if (family == "cycle") {
        need_n();
        std::cout << write_graph6(cycle(n)) << "\n";
    } else if (family == "complete") {
        need_n();
        std::cout << write_graph6(complete(n)) << "\n";
    } else if (family == "diamond") {
        need_d();
        std::cout << write_graph6(diamond({d, w})) << "\n";
    } else if (family == "family") {
        need_d();
        const ExtremalDiamondFamily fam(d);
        std::uint64_t count = fam.size();
        if (limit > 0 && static_cast<std::uint64_t>(limit) < count)
            count = static_cast<std::uint64_t>(limit);
        for (std::uint64_t i = 0; i < count; ++i)
            std::cout << write_graph6(fam.at(i).second) << "\n";
    }
    return 0;
}

int run_starset(const std::string& source, const std::string& mu_text, long limit) {
    const BigRat mu = parse_mu(mu_text);
    for (const std::string& line : graph_lines(source)) {
        const Graph g = parse_graph6(line);
        const auto sets =
            find_star_sets(g, mu, limit > 0 ? static_cast<std::size_t>(limit) : 0);
        json rec;
        rec["mu"] = mu.str();
        rec["star_sets"] = json::array();
        for (const StarDecomposition& dec : sets)
            rec["star_sets"].push_back(vertex_list(dec.star_set));
        std::cout << rec.dump() << "\n";
    }
    return 0;
}

CampaignChecks parse_checks(const std::string& text) {
    CampaignChecks checks;
    if (text == "all" || text.empty()) return checks;
    checks = {false, false, false, false, false, false, false, false, false};
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item == "roundtrip") checks.roundtrip = true;
        else if (item == "bounds") checks.bounds = true;
        else if (item == "witness") checks.witness = true;
        else if (item == "crosscheck") checks.crosscheck = true;
        else if (item == "interlacing") checks.interlacing = true;
        else if (item == "pendant") checks.pendant = true;
        else if (item == "rankmono") checks.rankmono = true;
        else if (item == "starset") checks.starset = true;
        else if (item == "canonical") checks.canonical = true;
        else if (item == "all") checks = CampaignChecks{};
        else throw std::invalid_argument("unknown check '" + item + "'");
    }
    return checks;
}

int run_enumerate(int n, const std::string& checks_text, int jobs) {
    const CampaignChecks checks = parse_checks(checks_text);
    const VerificationReport report = run_campaign(n, checks, jobs);
    std::cerr << "scanned " << report.graphs_scanned << " graphs in " << report.wall_seconds
              << "s\n";
    std::cout << report_to_json(report) << "\n";
    return report.counterexamples.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "specmin: exact spectral structure of graphs whose eigenvalue multiplicity m(-1) "
        "attains the diameter bound n - d"};
    app.require_subcommand(1);

    std::string source, mu_text = "-1", w_text, checks_text = "all";
    int n = 0, d = 0;
    long limit = 0;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;

    auto* check = app.add_subcommand(
        "check", "Exact multiplicity m(mu) = n - rank(A - mu I), the diameter, and whether "
                 "m(mu) attains n - d");
    check->add_option("--mu", mu_text, "eigenvalue as integer or p/q")->required();
    check->add_option("source", source, "graph6 string, file of graph6 lines, or - for stdin")
        ->required();

    auto* classify = app.add_subcommand(
        "classify", "Structural form of a connected graph with m(-1) = n - d: complete, a "
                    "blowup of the 5-vertex path, or a blowup of a path with admissibly "
                    "spaced triangle attachments; otherwise the reason none applies");
    classify->add_option("source", source, "graph6 string, file, or - for stdin")->required();

    auto* canonical = app.add_subcommand(
        "canonical", "Canonical form: the relabeling whose graph6 string is lexicographically "
                     "least (n <= 10)");
    canonical->add_option("source", source, "graph6 string, file, or - for stdin")->required();

    auto* construct = app.add_subcommand(
        "construct", "Emit graph families as graph6: path, cycle, complete, a path with "
                     "triangle attachments (diamond), or the whole attachment family whose "
                     "m(-1) attains n - d for a given diameter (family)");
    std::string family;
    construct->add_option("family", family, "path | cycle | complete | diamond | family")
        ->required()
        ->check(CLI::IsMember({"path", "cycle", "complete", "diamond", "family"}));
    construct->add_option("--n", n, "vertex count for path/cycle/complete");
    construct->add_option("--d", d, "path length for diamond/family (family: d >= 7, d = 1 mod 3)");
    construct->add_option("--w", w_text, "comma-separated attachment indices for diamond");
    construct->add_option("--limit", limit, "emit at most this many family members (0 = all)");

    auto* starset = app.add_subcommand(
        "starset", "Star sets: vertex sets X with |X| = m(mu) such that the graph minus X no "
                   "longer has the eigenvalue mu; the projected unit vectors of X span the "
                   "eigenspace");
    starset->add_option("--mu", mu_text, "eigenvalue as integer or p/q")->required();
    starset->add_option("--limit", limit, "stop after this many star sets (default 10, 0 = all)")
        ->default_val(10);
    starset->add_option("source", source, "graph6 string, file, or - for stdin")->required();

    auto* enumerate = app.add_subcommand(
        "enumerate", "Sweep every connected graph on up to n vertices (one per isomorphism "
                     "class) through the verification checks: graph6 round-trip, eigenvalue "
                     "count/multiplicity bounds, attaining-eigenvalue membership in {0,-1}, "
                     "structure-vs-spectrum agreement, deletion interlacing, pendant nullity, "
                     "rank monotonicity, star-set identities, quotient transfers");
    enumerate->add_option("--n", n, "largest vertex count (1..8; 8 sweeps 2^28 labeled graphs)")
        ->required();
    enumerate->add_option("--checks", checks_text,
                          "comma-separated subset of roundtrip,bounds,witness,crosscheck,"
                          "interlacing,pendant,rankmono,starset,canonical (default all)");
    enumerate->add_option("--jobs", jobs, "worker threads (default: available parallelism)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (check->parsed()) return run_check(source, mu_text);
        if (classify->parsed()) return run_classify(source);
        if (canonical->parsed()) return run_canonical(source);
        if (construct->parsed()) return run_construct(family, n, d, w_text, limit);
        if (starset->parsed()) return run_starset(source, mu_text, limit);
        if (enumerate->parsed()) return run_enumerate(n, checks_text, jobs);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
