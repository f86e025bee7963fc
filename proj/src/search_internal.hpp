#pragma once

#include <chrono>
#include <stdexcept>
#include <vector>

#include "armatch/core.hpp"
#include "armatch/matching.hpp"

namespace armatch::detail {

class BudgetMeter {
public:
    explicit BudgetMeter(const SearchBudget& b)
        : node_cap_(b.node_cap), deadline_set_(b.time_cap_ms > 0) {
        if (b.node_cap == 0) throw std::invalid_argument("node cap must be positive");
        if (b.time_cap_ms < 0) throw std::invalid_argument("time cap must be positive");
        if (deadline_set_)
            deadline_ = std::chrono::steady_clock::now() + std::chrono::milliseconds(b.time_cap_ms);
    }

    // True once the budget is exhausted; callers unwind without recording.
    bool tick() {
        if (exhausted_) return true;
        if (++nodes_ > node_cap_) {
            exhausted_ = true;
            return true;
        }
        if (deadline_set_ && (nodes_ & 0x3ff) == 0 &&
            std::chrono::steady_clock::now() > deadline_) {
            exhausted_ = true;
            return true;
        }
        return false;
    }

    std::uint64_t nodes() const { return nodes_; }
    bool exhausted() const { return exhausted_; }

private:
    std::uint64_t node_cap_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    bool deadline_set_;
    std::chrono::steady_clock::time_point deadline_{};
};

// compat[e] = member edges vertex-disjoint from member edge e.
std::vector<EdgeSet> compat_masks(const PartProfile& profile, const EdgeSet& members);

// Reusable scratch for the candidate-set bound: min over parts of the number
// of distinct within-part indices occurring among candidate edges (each
// further matching edge consumes one fresh vertex per part).
class PartBound {
public:
    PartBound(const PartProfile& profile, const std::vector<int>& coords)
        : r_(profile.part_count()), coords_(coords) {
        int max_n = 0;
        for (int n : profile.sizes()) max_n = std::max(max_n, n);
        width_ = max_n;
        stamp_.assign(static_cast<std::size_t>(r_) * static_cast<std::size_t>(width_), 0);
        distinct_.assign(static_cast<std::size_t>(r_), 0);
    }

    int min_distinct(const EdgeSet& cand) {
        ++gen_;
        std::fill(distinct_.begin(), distinct_.end(), 0);
        cand.for_each([&](std::uint32_t rank) {
            const int* c = coords_.data() + static_cast<std::size_t>(rank) * static_cast<std::size_t>(r_);
            for (int s = 0; s < r_; ++s) {
                int& st = stamp_[static_cast<std::size_t>(s) * static_cast<std::size_t>(width_) +
                                 static_cast<std::size_t>(c[s] - 1)];
                if (st != gen_) {
                    st = gen_;
                    ++distinct_[static_cast<std::size_t>(s)];
                }
            }
        });
        int best = 0;
        for (int s = 0; s < r_; ++s) best = s == 0 ? distinct_[0] : std::min(best, distinct_[static_cast<std::size_t>(s)]);
        return best;
    }

private:
    int r_;
    int width_;
    const std::vector<int>& coords_;
    std::vector<int> stamp_;
    std::vector<int> distinct_;
    int gen_ = 0;
};

} // namespace armatch::detail
