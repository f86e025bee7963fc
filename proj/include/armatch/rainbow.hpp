#pragma once

#include <optional>
#include <vector>

#include "armatch/core.hpp"
#include "armatch/matching.hpp"

namespace armatch {

struct SliceAxis {
    int a = 1;
    int b = 2;
};

// One shift class of the cyclic decomposition along two equal-size parts:
// the member edges whose coordinates in parts (a, b) satisfy
// coord_a - coord_b = shift - 1 (mod m). Deleting coordinate b is a
// disjointness-preserving bijection onto a complete (r-1)-partite host.
class SliceView {
public:
    SliceAxis axis;
    int shift = 1; // 1..m
    PartProfile host_profile;
    PartProfile projected_profile;
    EdgeSet host_members;    // this slice's member edges, as host ranks
    SubHypergraph projected; // their image under the coordinate-b deletion
    std::optional<EdgeColoring> inherited; // set when sliced from a coloring
    std::vector<int> host_color_of;        // inherited color -> host color (index 1..q_i)

    Edge project(const Edge& host_edge) const;
    Edge lift(const Edge& projected_edge) const;
    EdgeId project_rank(EdgeId host_id) const;
    EdgeId lift_rank(EdgeId projected_id) const;
};

// The m slices along `axis`; they partition the member edges. Requires
// n_a = n_b and at least three parts (the projection must remain a valid
// multipartite host).
std::vector<SliceView> cyclic_slices(const SubHypergraph& host, SliceAxis axis = {});
// Same, with each slice carrying the coloring inherited through the
// bijection (colors compacted to 1..q_i; host_color_of maps them back, and
// the slice's host color set equals the inherited color set).
std::vector<SliceView> cyclic_slices(const EdgeColoring& host, SliceAxis axis = {});

struct MaxRainbowResult {
    Matching best;
    bool optimal = false;
    SearchStats stats;
};

// Exact maximum matching among edges with pairwise distinct colors. Same
// branch order as the matching solver; the bound additionally caps by the
// number of distinct unused colors among the candidates.
MaxRainbowResult max_rainbow_matching(const EdgeColoring& coloring, const SearchBudget& budget = {});

enum class RainbowStrategy { generic, slice_guided };

// Rainbow k-matching witness, completed-search `absent`, or `indeterminate`
// on budget exhaustion. slice_guided first looks for a rainbow
// (k-1)-matching inside the color-richest slices and tries to extend it by a
// disjoint edge of an unused color, then falls back to the complete generic
// search, so exactness is unaffected.
KMatchingResult find_rainbow_k(const EdgeColoring& coloring, int k,
                               RainbowStrategy strategy = RainbowStrategy::generic,
                               const SearchBudget& budget = {});

} // namespace armatch
