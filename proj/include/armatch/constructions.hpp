#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "armatch/core.hpp"

namespace armatch {

// All edges whose part-1 coordinate is at most k-1: the (k-1)n_2...n_r-edge
// subhypergraph with no k-matching. Requires 2 <= k <= n_1 + 1.
SubHypergraph build_turan_extremal(const PartProfile& profile, int k);

// Edges through the k-2 lowest-indexed vertices of part 1 get pairwise
// distinct colors (in rank order); every remaining edge shares one extra
// color, which is the last color id. q = (k-2)n_2...n_r + 1.
// Requires k >= 2 and k-2 < n_1.
EdgeColoring build_phi_r(const PartProfile& profile, int k);

// For n_1 = 2: pairs {alpha, complement(alpha)} of prefixes over the size-2
// parts. Prefix codes are mixed-radix over the first t coordinates, part 1
// most significant, zero-based.
struct QClassFamily {
    int t = 0;                                                 // largest index with n_t = 2
    std::vector<std::pair<std::uint32_t, std::uint32_t>> classes; // (min code, complement code)
};

QClassFamily qclass_family(const PartProfile& profile);

// Two edges share a color iff their t-prefixes are complementary or equal;
// q = 2^(t-1). Requires n_1 = 2.
EdgeColoring build_qclass_coloring(const PartProfile& profile);

enum class RepresentativeSelector { min_rank, seeded_random };

// One member edge per color class.
SubHypergraph representing_subhypergraph(const EdgeColoring& coloring,
                                         RepresentativeSelector selector = RepresentativeSelector::min_rank,
                                         std::uint64_t seed = 0);

} // namespace armatch
