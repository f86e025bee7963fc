#include "armatch/rainbow.hpp"

#include <algorithm>
#include <stdexcept>

#include "search_internal.hpp"

namespace armatch {

namespace {

int slice_count_for(const PartProfile& profile, SliceAxis axis) {
    const int r = profile.part_count();
    if (axis.a < 1 || axis.a > r || axis.b < 1 || axis.b > r || axis.a == axis.b)
        throw std::invalid_argument("invalid slice axis");
    if (profile.size_of(axis.a) != profile.size_of(axis.b))
        throw std::invalid_argument("axis parts must have equal size");
    if (r < 3) throw std::invalid_argument("slice projection needs at least 3 parts");
    return profile.size_of(axis.a);
}

PartProfile delete_part(const PartProfile& profile, int part) {
    std::vector<int> sizes;
    for (int s = 1; s <= profile.part_count(); ++s)
        if (s != part) sizes.push_back(profile.size_of(s));
    return make_profile(std::move(sizes));
}

int shift_of(const PartProfile& profile, std::uint32_t rank, SliceAxis axis, int m) {
    int l = coord_of(profile, EdgeId{rank}, axis.a);
    int lp = coord_of(profile, EdgeId{rank}, axis.b);
    return ((l - lp + m) % m) + 1;
}

} // namespace

Edge SliceView::project(const Edge& host_edge) const {
    Edge out;
    for (int s = 1; s <= host_profile.part_count(); ++s)
        if (s != axis.b) out.coords.push_back(host_edge.coords[static_cast<std::size_t>(s - 1)]);
    return out;
}

Edge SliceView::lift(const Edge& projected_edge) const {
    const int m = host_profile.size_of(axis.a);
    const int pos_a = axis.a < axis.b ? axis.a : axis.a - 1; // position of part a in the projection
    const int l = projected_edge.coords[static_cast<std::size_t>(pos_a - 1)];
    const int lp = ((l - shift + m) % m) + 1;
    Edge out;
    int src = 0;
    for (int s = 1; s <= host_profile.part_count(); ++s)
        out.coords.push_back(s == axis.b ? lp : projected_edge.coords[static_cast<std::size_t>(src++)]);
    return out;
}

EdgeId SliceView::project_rank(EdgeId host_id) const {
    return edge_rank(projected_profile, project(edge_unrank(host_profile, host_id)));
}

EdgeId SliceView::lift_rank(EdgeId projected_id) const {
    return edge_rank(host_profile, lift(edge_unrank(projected_profile, projected_id)));
}

std::vector<SliceView> cyclic_slices(const SubHypergraph& host, SliceAxis axis) {
    const PartProfile& profile = host.profile();
    const int m = slice_count_for(profile, axis);
    const PartProfile proj = delete_part(profile, axis.b);

    std::vector<SliceView> slices(static_cast<std::size_t>(m));
    std::vector<EdgeSet> proj_members(static_cast<std::size_t>(m), EdgeSet(proj.edge_count()));
    for (int i = 0; i < m; ++i) {
        SliceView& sv = slices[static_cast<std::size_t>(i)];
        sv.axis = axis;
        sv.shift = i + 1;
        sv.host_profile = profile;
        sv.projected_profile = proj;
        sv.host_members = EdgeSet(profile.edge_count());
    }
    host.members().for_each([&](std::uint32_t rank) {
        const int i = shift_of(profile, rank, axis, m);
        SliceView& sv = slices[static_cast<std::size_t>(i - 1)];
        sv.host_members.set(rank);
        proj_members[static_cast<std::size_t>(i - 1)].set(sv.project_rank(EdgeId{rank}).rank);
    });
    for (int i = 0; i < m; ++i)
        slices[static_cast<std::size_t>(i)].projected =
            SubHypergraph(proj, std::move(proj_members[static_cast<std::size_t>(i)]));
    return slices;
}

std::vector<SliceView> cyclic_slices(const EdgeColoring& host, SliceAxis axis) {
    auto slices = cyclic_slices(host.domain(), axis);
    for (SliceView& sv : slices) {
        std::vector<int> proj_colors(sv.projected_profile.edge_count(), 0);
        std::vector<int> compact(static_cast<std::size_t>(host.color_count()) + 1, 0);
        sv.host_color_of.assign(1, 0); // slot 0 unused
        sv.projected.members().for_each([&](std::uint32_t prank) {
            const int host_color = host.color_of(sv.lift_rank(EdgeId{prank}));
            int& id = compact[static_cast<std::size_t>(host_color)];
            if (id == 0) {
                id = static_cast<int>(sv.host_color_of.size());
                sv.host_color_of.push_back(host_color);
            }
            proj_colors[prank] = id;
        });
        sv.inherited = EdgeColoring(sv.projected, std::move(proj_colors));
    }
    return slices;
}

namespace {

struct RainbowSearch {
    const EdgeColoring& coloring;
    const PartProfile& profile;
    std::vector<int> coords;
    std::vector<EdgeSet> compat;
    detail::PartBound bound;
    detail::BudgetMeter& meter;
    std::vector<int> color_stamp; // per color, generation marker for the bound
    int color_gen = 0;
    std::vector<std::uint32_t> chosen;
    std::vector<std::uint32_t> best;
    int target;
    bool found_target = false;

    RainbowSearch(const EdgeColoring& c, detail::BudgetMeter& m, int target_size)
        : coloring(c),
          profile(c.profile()),
          coords(coord_table(profile)),
          compat(detail::compat_masks(profile, c.domain().members())),
          bound(profile, coords),
          meter(m),
          color_stamp(static_cast<std::size_t>(c.color_count()) + 1, 0),
          target(target_size) {}

    int distinct_colors(const EdgeSet& cand) {
        ++color_gen;
        int n = 0;
        cand.for_each([&](std::uint32_t rank) {
            int& st = color_stamp[static_cast<std::size_t>(coloring.color_of(EdgeId{rank}))];
            if (st != color_gen) {
                st = color_gen;
                ++n;
            }
        });
        return n;
    }

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
            int ub = depth + std::min(bound.min_distinct(cand), distinct_colors(cand));
            if (target < 0 ? ub <= static_cast<int>(best.size()) : ub < target) return;
            EdgeSet cand_in = cand;
            cand_in &= compat[static_cast<std::uint32_t>(e)];
            cand_in.and_not(coloring.color_class(coloring.color_of(EdgeId{static_cast<std::uint32_t>(e)})));
            chosen.push_back(static_cast<std::uint32_t>(e));
            run(std::move(cand_in), depth + 1);
            chosen.pop_back();
            if (found_target || meter.exhausted()) return;
            cand.reset(static_cast<std::uint32_t>(e));
        }
    }
};

// Proof-shaped heuristic: pick a color-rich slice, find a rainbow
// (k-1)-matching inside it, then extend by any disjoint edge whose host
// color is unused.
std::optional<std::vector<std::uint32_t>> slice_guided_probe(const EdgeColoring& coloring, int k,
                                                             detail::BudgetMeter& meter) {
    const PartProfile& profile = coloring.profile();
    if (profile.part_count() < 3 || profile.size_of(1) != profile.size_of(2)) return std::nullopt;

    auto slices = cyclic_slices(coloring, SliceAxis{1, 2});
    std::stable_sort(slices.begin(), slices.end(), [](const SliceView& x, const SliceView& y) {
        return x.inherited->color_count() > y.inherited->color_count();
    });

    for (const SliceView& sv : slices) {
        if (meter.exhausted()) return std::nullopt;
        RainbowSearch inner(*sv.inherited, meter, k - 1);
        inner.run(sv.inherited->domain().members(), 0);
        if (!inner.found_target) continue;

        std::vector<std::uint32_t> host_ranks;
        std::vector<char> used(static_cast<std::size_t>(coloring.color_count()) + 1, 0);
        for (std::uint32_t prank : inner.best) {
            const std::uint32_t hrank = sv.lift_rank(EdgeId{prank}).rank;
            host_ranks.push_back(hrank);
            used[static_cast<std::size_t>(coloring.color_of(EdgeId{hrank}))] = 1;
        }

        const auto coords = coord_table(profile);
        const int r = profile.part_count();
        std::int64_t found = -1;
        coloring.domain().members().for_each([&](std::uint32_t e) {
            if (found >= 0 || used[static_cast<std::size_t>(coloring.color_of(EdgeId{e}))]) return;
            const int* ce = coords.data() + static_cast<std::size_t>(e) * static_cast<std::size_t>(r);
            for (std::uint32_t h : host_ranks) {
                const int* ch = coords.data() + static_cast<std::size_t>(h) * static_cast<std::size_t>(r);
                for (int s = 0; s < r; ++s)
                    if (ce[s] == ch[s]) return;
            }
            found = e;
        });
        if (found >= 0) {
            host_ranks.push_back(static_cast<std::uint32_t>(found));
            return host_ranks;
        }
    }
    return std::nullopt;
}

} // namespace

MaxRainbowResult max_rainbow_matching(const EdgeColoring& coloring, const SearchBudget& budget) {
    detail::BudgetMeter meter(budget);
    RainbowSearch s(coloring, meter, -1);
    s.run(coloring.domain().members(), 0);
    MaxRainbowResult out;
    out.best = Matching(coloring.profile(), {s.best.begin(), s.best.end()});
    out.optimal = !meter.exhausted();
    out.stats = {meter.nodes(), !meter.exhausted()};
    return out;
}

KMatchingResult find_rainbow_k(const EdgeColoring& coloring, int k, RainbowStrategy strategy,
                               const SearchBudget& budget) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    detail::BudgetMeter meter(budget);
    KMatchingResult out;

    if (strategy == RainbowStrategy::slice_guided && k >= 2) {
        if (auto witness = slice_guided_probe(coloring, k, meter)) {
            out.status = WitnessStatus::found;
            out.witness = Matching(coloring.profile(), {witness->begin(), witness->end()});
            out.stats = {meter.nodes(), true};
            return out;
        }
    }

    RainbowSearch s(coloring, meter, k);
    s.run(coloring.domain().members(), 0);
    out.stats = {meter.nodes(), !meter.exhausted()};
    if (s.found_target) {
        out.status = WitnessStatus::found;
        out.witness = Matching(coloring.profile(), {s.best.begin(), s.best.end()});
    } else {
        out.status = meter.exhausted() ? WitnessStatus::indeterminate : WitnessStatus::absent;
    }
    return out;
}

} // namespace armatch
