// Named graph families: paths, cycles, complete graphs, paths with triangle
// attachments (P_{d+1} ◇ W), and the family of such graphs whose −1
// multiplicity attains n − d.
#pragma once

#include "specmin/graph.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace specmin {

Graph path(int n);      // vertices 0..n−1 in path order; n ≥ 1
Graph cycle(int n);     // n ≥ 3 (std::invalid_argument otherwise)
Graph complete(int n);  // n ≥ 1

// A path v_0..v_d plus one extra vertex u_j per attachment index j, adjacent
// to exactly {v_j, v_{j+1}}. Attachment indices are distinct and lie in
// [0, d−1]; attached vertices are pairwise non-adjacent.
struct DiamondSpec {
    int d = 1;
    std::vector<int> attachments;  // the index set W
};

// Path vertices take ids 0..d; attachment vertices follow in ascending index
// order. n = d+1+|W|, edge count d+2|W|. Throws std::invalid_argument on
// out-of-range or repeated attachment indices.
Graph diamond(const DiamondSpec& spec);

// The attachment positions {3, 6, …, d−4} (every third index, ends excluded)
// from which subsets keep the diameter at d and each contribute one extra
// −1 eigenvector. Defined only for d ≥ 7 with d ≡ 1 (mod 3);
// std::invalid_argument otherwise.
struct AdmissibleSet {
    int d = 0;
    std::vector<int> positions;
};

AdmissibleSet admissible_set(int d);

// All 2^|U| graphs P_{d+1} ◇ W with W ⊆ U over the admissible set U: exactly
// the attachment graphs of diameter d whose −1 multiplicity is n − d.
// Restartable: subsets are addressed by index, bit t selecting positions[t].
class ExtremalDiamondFamily {
public:
    explicit ExtremalDiamondFamily(int d) : u_(admissible_set(d)) {}

    int d() const { return u_.d; }
    const std::vector<int>& positions() const { return u_.positions; }
    std::uint64_t size() const { return std::uint64_t{1} << u_.positions.size(); }
    std::pair<DiamondSpec, Graph> at(std::uint64_t index) const;

private:
    AdmissibleSet u_;
};

ExtremalDiamondFamily extremal_diamond_family(int d);

}  // namespace specmin
