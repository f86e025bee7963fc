#include "armatch/experiments.hpp"

#include <stdexcept>

#include "armatch/parallel.hpp"
#include "armatch/prng.hpp"

namespace armatch {

EdgeColoring random_surjective_coloring(const PartProfile& profile, int q, std::uint64_t seed,
                                        std::uint64_t trial) {
    const std::uint64_t total = profile.edge_count();
    if (q < 1 || static_cast<std::uint64_t>(q) > total)
        throw std::invalid_argument("color count must be between 1 and the edge count");

    std::vector<int> colors(total);
    for (std::uint32_t rank = 0; rank < total; ++rank)
        colors[rank] = 1 + static_cast<int>(rng_below(seed, trial, rank, static_cast<std::uint64_t>(q)));

    std::vector<char> present(static_cast<std::size_t>(q) + 1, 0);
    std::uint32_t slot = 0;
    while (true) {
        std::fill(present.begin(), present.end(), 0);
        for (std::uint32_t rank = 0; rank < total; ++rank) present[static_cast<std::size_t>(colors[rank])] = 1;
        std::vector<int> missing;
        for (int c = 1; c <= q; ++c)
            if (!present[static_cast<std::size_t>(c)]) missing.push_back(c);
        if (missing.empty()) break;
        for (int c : missing) colors[slot++] = c; // slots only advance, so placed colors persist
    }
    return EdgeColoring(SubHypergraph::complete(profile), std::move(colors));
}

FuzzSummary run_fuzz(const PartProfile& profile, int k, int q, std::uint64_t trials,
                     std::uint64_t seed, const SearchBudget& budget, int workers) {
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    if (k < 1) throw std::invalid_argument("k must be positive");

    std::vector<FuzzTrial> results(trials);
    parallel_for_index(static_cast<std::size_t>(trials), workers, [&](std::size_t i) {
        const EdgeColoring coloring = random_surjective_coloring(profile, q, seed, i);
        const auto res = find_rainbow_k(coloring, k, RainbowStrategy::generic, budget);
        results[i] = FuzzTrial{i, res.status, res.stats.nodes};
    });

    FuzzSummary summary;
    summary.trials = trials;
    for (const FuzzTrial& t : results) {
        switch (t.status) {
            case WitnessStatus::found: ++summary.found; break;
            case WitnessStatus::absent:
                ++summary.absent;
                summary.absent_trials.push_back(t.trial);
                break;
            case WitnessStatus::indeterminate:
                ++summary.indeterminate;
                summary.indeterminate_trials.push_back(t.trial);
                break;
        }
    }
    return summary;
}

} // namespace armatch
