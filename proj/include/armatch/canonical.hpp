#pragma once

#include <compare>
#include <string>
#include <vector>

#include "armatch/core.hpp"

namespace armatch {

// Lexicographically minimal serialization over the host automorphism group
// (within-part vertex permutations plus permutations of equal-size parts;
// colorings are additionally quotiented by color relabeling). Equal labels
// iff the objects are isomorphic.
struct CanonicalLabel {
    std::vector<std::uint8_t> bytes;
    std::string hex() const;
    auto operator<=>(const CanonicalLabel&) const = default;
};

// |G| = prod n_i! * prod (multiplicity of each part size)!, saturating.
std::uint64_t automorphism_group_order(const PartProfile& profile);

// Throw "canonicalization budget exceeded" when the group order passes the cap.
CanonicalLabel canonical_form(const SubHypergraph& sub, std::uint64_t group_cap = 10'000'000);
CanonicalLabel canonical_form(const EdgeColoring& coloring, std::uint64_t group_cap = 10'000'000);

// The subhypergraph on its non-isolated vertices: per-part support counts
// become the (re-sorted) reduced profile and coordinates are renumbered.
// The empty hypergraph reduces to the empty subhypergraph of the 1x1 host.
SubHypergraph restrict_to_support(const SubHypergraph& sub);

// Pseudorandom group element applied to the object; label-preserving by
// construction (colorings also get their color ids permuted).
SubHypergraph apply_random_automorphism(const SubHypergraph& sub, std::uint64_t seed);
EdgeColoring apply_random_automorphism(const EdgeColoring& coloring, std::uint64_t seed);

} // namespace armatch
