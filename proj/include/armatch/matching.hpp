#pragma once

#include <optional>
#include <vector>

#include "armatch/core.hpp"

namespace armatch {

struct SearchBudget {
    std::uint64_t node_cap = 1'000'000'000'000ull;
    std::int64_t time_cap_ms = 0; // 0 disables the wall-clock cap
    std::uint64_t seed = 0;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    bool completed = true;
};

struct MaxMatchingResult {
    Matching best;
    bool optimal = false; // true iff the search completed; the incumbent is returned either way
    SearchStats stats;
};

enum class WitnessStatus { found, absent, indeterminate };

struct KMatchingResult {
    WitnessStatus status = WitnessStatus::indeterminate;
    std::optional<Matching> witness;
    SearchStats stats;
};

// Exact maximum matching by branch and bound over edge ranks: branch on the
// lowest-ranked candidate edge in/out, bound by the per-part count of
// distinct uncovered vertices among the candidates. Deterministic.
MaxMatchingResult max_matching(const SubHypergraph& sub, const SearchBudget& budget = {});

// Witness of a k-matching, or a completed-search proof that none exists.
// Budget exhaustion yields `indeterminate`, never a silent `absent`.
KMatchingResult has_k_matching(const SubHypergraph& sub, int k, const SearchBudget& budget = {});

// Connected components of the graph on member edges whose adjacency is
// vertex-disjointness. Classes are ordered by smallest member rank.
struct ComponentPartition {
    std::vector<std::vector<std::uint32_t>> classes;
};

ComponentPartition disjointness_components(const SubHypergraph& sub);

} // namespace armatch
