// Structural classification of connected graphs by whether m(−1) = n − d,
// with re-blowable certificates; the census of connected graphs up to
// isomorphism; and the verification campaign cross-checking structure against
// exact spectra.
#pragma once

#include "specmin/graph.hpp"

#include <map>
#include <string>
#include <vector>

namespace specmin {

enum class GraphClass {
    Complete,       // complete on n ≥ 2 vertices
    QuotientP5,     // quotient is the 5-vertex path: a blowup of P_5
    DiamondFamily,  // quotient is P_{d+1} ◇ W, W inside the admissible set
    NotExtremal,    // m(−1) < n − d
};

enum class NotExtremalReason {
    None,
    FailsMod3,         // d ≢ 1 (mod 3)
    DiameterTooSmall,  // d ≡ 1 (mod 3) but d < 7 (and not complete / P_5 quotient)
    SpacingViolation,  // quotient is a path with triangle attachments, but W ⊄ U
    QuotientMismatch,  // quotient is not of the attachment form at all
};

struct Classification {
    GraphClass kind = GraphClass::NotExtremal;
    NotExtremalReason reason = NotExtremalReason::None;  // set iff NotExtremal
    int n = 0;                      // Complete: the order
    int d = 0;                      // DiamondFamily: the diameter
    std::vector<int> attachments;   // DiamondFamily: W
    std::vector<int> blowup_sizes;  // QuotientP5 / DiamondFamily: sizes aligned
                                    // to path(5) / diamond(d, W) labels, so the
                                    // certificate re-blows to the input
};

// Decide which of the four shapes g has: complete, blowup of P_5, blowup of
// an admissible attachment graph, or none (with a reason). The first three
// are exactly the connected graphs with m(−1) = n − d. Throws
// std::invalid_argument when g is disconnected or n < 2.
Classification classify_minus_one(const Graph& g);

// True iff the structural classification and the exact spectral test agree:
// classify_minus_one(g) ≠ NotExtremal ⇔ m_g(−1) = n − d. Preconditions as
// classify_minus_one.
bool characterization_crosscheck(const Graph& g);

// For a connected non-path, any eigenvalue whose multiplicity attains n − d
// must be 0 or −1: every squarefree factor of the characteristic polynomial
// at exponent n − d must divide x(x+1). Vacuously true when nothing attains
// it. Throws std::invalid_argument for paths or disconnected input.
bool extremal_eigenvalue_check(const Graph& g);

// One representative per isomorphism class of connected graphs on n
// vertices, ordered by canonical edge bits (labeled enumeration of all
// 2^C(n,2) graphs, deduplicated by canonical form). n ≤ 7 runs freely;
// n = 8 only with allow_large (a cost warning goes to stderr); larger n
// throws std::invalid_argument.
std::vector<Graph> connected_graphs(int n, bool allow_large = false);

struct CampaignChecks {
    bool roundtrip = true;    // graph6 encode/decode is the identity
    bool bounds = true;       // e(g) ≥ d+1 and max multiplicity ≤ n − d
    bool witness = true;      // attaining eigenvalues of non-paths lie in {0, −1}
    bool crosscheck = true;   // classification agrees with m(−1) = n − d
    bool interlacing = true;  // vertex deletion moves multiplicities by ≤ 1
    bool pendant = true;      // pendant+neighbor deletion preserves nullity
    bool rankmono = true;     // induced subgraphs never raise rank(A − μI)
    bool starset = true;      // star sets exist and pass all identities
    bool canonical = true;    // quotient idempotence, transfers, duplicate peeling
};

struct Counterexample {
    std::string graph6;
    std::string check;
    std::string detail;
};

struct VerificationReport {
    int n_max = 0;
    std::map<std::string, long> counts;  // census size per classification kind
    std::vector<Counterexample> counterexamples;
    long graphs_scanned = 0;
    double wall_seconds = 0;  // diagnostic only; never serialized
};

// Sweep every connected graph on 1..n_max vertices (one per isomorphism
// class) through the selected checks. Failures become counterexamples, not
// errors. Deterministic: two runs produce identical reports regardless of
// `jobs` (workers partition the labeled enumeration and the census by fixed
// stripes and merge in order).
VerificationReport run_campaign(int n_max, const CampaignChecks& checks, int jobs = 1);

// {"n": …, "counts": {…}, "counterexamples": [{graph6, check, detail}…]} —
// stable key order, no timing data, byte-identical across runs.
std::string report_to_json(const VerificationReport& report);

}  // namespace specmin
