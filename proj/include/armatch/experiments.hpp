#pragma once

#include <cstdint>
#include <vector>

#include "armatch/core.hpp"
#include "armatch/matching.hpp"
#include "armatch/rainbow.hpp"

namespace armatch {

// Uniform colors per edge from the counter-based generator, then surjectivity
// repair: missing colors are written over the lowest-ranked edges, advancing
// one slot per written color until every color appears. Deterministic in
// (seed, trial). Requires 1 <= q <= edge count.
EdgeColoring random_surjective_coloring(const PartProfile& profile, int q, std::uint64_t seed,
                                        std::uint64_t trial);

struct FuzzTrial {
    std::uint64_t trial = 0;
    WitnessStatus status = WitnessStatus::indeterminate;
    std::uint64_t nodes = 0;
};

struct FuzzSummary {
    std::uint64_t trials = 0;
    std::uint64_t found = 0;
    std::uint64_t absent = 0;
    std::uint64_t indeterminate = 0;
    std::vector<std::uint64_t> absent_trials;        // reproduction indices
    std::vector<std::uint64_t> indeterminate_trials;
};

// Runs `trials` independent colorings and the complete rainbow k-matching
// finder on each; trial i is reproducible from (seed, i) alone.
FuzzSummary run_fuzz(const PartProfile& profile, int k, int q, std::uint64_t trials,
                     std::uint64_t seed, const SearchBudget& budget = {}, int workers = 1);

} // namespace armatch
