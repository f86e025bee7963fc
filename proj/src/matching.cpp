#include "armatch/matching.hpp"

#include <algorithm>
#include <numeric>

#include "search_internal.hpp"

namespace armatch {

namespace detail {

std::vector<EdgeSet> compat_masks(const PartProfile& profile, const EdgeSet& members) {
    const auto ranks = members.to_vector();
    const auto coords = coord_table(profile);
    const int r = profile.part_count();
    std::vector<EdgeSet> masks(profile.edge_count());
    for (std::uint32_t e : ranks) masks[e] = EdgeSet(profile.edge_count());
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        const int* ci = coords.data() + static_cast<std::size_t>(ranks[i]) * static_cast<std::size_t>(r);
        for (std::size_t j = i + 1; j < ranks.size(); ++j) {
            const int* cj = coords.data() + static_cast<std::size_t>(ranks[j]) * static_cast<std::size_t>(r);
            bool disjoint = true;
            for (int s = 0; s < r; ++s)
                if (ci[s] == cj[s]) {
                    disjoint = false;
                    break;
                }
            if (disjoint) {
                masks[ranks[i]].set(ranks[j]);
                masks[ranks[j]].set(ranks[i]);
            }
        }
    }
    return masks;
}

} // namespace detail

namespace {

struct MatchSearch {
    const PartProfile& profile;
    std::vector<int> coords;
    std::vector<EdgeSet> compat;
    detail::PartBound bound;
    detail::BudgetMeter meter;
    std::vector<std::uint32_t> chosen;
    std::vector<std::uint32_t> best;
    int target; // -1 maximizes; otherwise stop at the first matching of this size
    bool found_target = false;

    MatchSearch(const SubHypergraph& sub, const SearchBudget& budget, int target_size)
        : profile(sub.profile()),
          coords(coord_table(profile)),
          compat(detail::compat_masks(profile, sub.members())),
          bound(profile, coords),
          meter(budget),
          target(target_size) {}

    void run(EdgeSet cand, int depth) {
        if (target < 0 && depth > static_cast<int>(best.size())) best = chosen;
        if (target >= 0 && depth >= target) {
            best = chosen;
            found_target = true;
            return;
        }
        while (true) {
            if (meter.tick()) return;
            std::int64_t e = cand.next(0);
            if (e < 0) return;
            int ub = depth + bound.min_distinct(cand);
            if (target < 0 ? ub <= static_cast<int>(best.size()) : ub < target) return;
            EdgeSet cand_in = cand;
            cand_in &= compat[static_cast<std::uint32_t>(e)];
            chosen.push_back(static_cast<std::uint32_t>(e));
            run(std::move(cand_in), depth + 1);
            chosen.pop_back();
            if (found_target || meter.exhausted()) return;
            cand.reset(static_cast<std::uint32_t>(e));
        }
    }
};

} // namespace

MaxMatchingResult max_matching(const SubHypergraph& sub, const SearchBudget& budget) {
    MatchSearch s(sub, budget, -1);
    s.run(sub.members(), 0);
    MaxMatchingResult out;
    out.best = Matching(sub.profile(), {s.best.begin(), s.best.end()});
    out.optimal = !s.meter.exhausted();
    out.stats = {s.meter.nodes(), !s.meter.exhausted()};
    return out;
}

KMatchingResult has_k_matching(const SubHypergraph& sub, int k, const SearchBudget& budget) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    MatchSearch s(sub, budget, k);
    s.run(sub.members(), 0);
    KMatchingResult out;
    out.stats = {s.meter.nodes(), !s.meter.exhausted()};
    if (s.found_target) {
        out.status = WitnessStatus::found;
        out.witness = Matching(sub.profile(), {s.best.begin(), s.best.end()});
    } else {
        out.status = s.meter.exhausted() ? WitnessStatus::indeterminate : WitnessStatus::absent;
    }
    return out;
}

ComponentPartition disjointness_components(const SubHypergraph& sub) {
    const auto ranks = sub.members().to_vector();
    const auto coords = coord_table(sub.profile());
    const int r = sub.profile().part_count();
    const std::size_t m = ranks.size();

    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };

    for (std::size_t i = 0; i < m; ++i) {
        const int* ci = coords.data() + static_cast<std::size_t>(ranks[i]) * static_cast<std::size_t>(r);
        for (std::size_t j = i + 1; j < m; ++j) {
            const int* cj = coords.data() + static_cast<std::size_t>(ranks[j]) * static_cast<std::size_t>(r);
            bool disjoint = true;
            for (int s = 0; s < r; ++s)
                if (ci[s] == cj[s]) {
                    disjoint = false;
                    break;
                }
            if (disjoint) parent[find(i)] = find(j);
        }
    }

    std::vector<std::vector<std::uint32_t>> by_root(m);
    for (std::size_t i = 0; i < m; ++i) by_root[find(i)].push_back(ranks[i]);

    ComponentPartition out;
    for (auto& cls : by_root)
        if (!cls.empty()) out.classes.push_back(std::move(cls)); // already rank-sorted; roots scanned in rank order keep min-rank order
    std::sort(out.classes.begin(), out.classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

} // namespace armatch
