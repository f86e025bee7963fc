#include "armatch/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "armatch/constructions.hpp"
#include "armatch/parallel.hpp"
#include "armatch/rainbow.hpp"
#include "search_internal.hpp"

namespace armatch {

namespace {

constexpr std::size_t kCollectCap = 1 << 16;

// Partition searches are refused up front only when the raw space dwarfs any
// plausible pruning win; otherwise the node cap is the real budget.
constexpr double kPruneHopeFactor = 1e5;

double bell_estimate(int n) {
    // Bell triangle in doubles; +inf on overflow is fine for the budget test.
    std::vector<double> row{1.0};
    for (int i = 1; i <= n; ++i) {
        std::vector<double> next(static_cast<std::size_t>(i) + 1);
        next[0] = row.back();
        for (std::size_t j = 1; j < next.size(); ++j) next[j] = next[j - 1] + row[j - 1];
        row = std::move(next);
    }
    return row[0];
}

double stirling2_estimate(int n, int q) {
    if (q < 0 || q > n) return 0.0;
    std::vector<double> row(static_cast<std::size_t>(q) + 1, 0.0);
    row[0] = 1.0;
    for (int i = 1; i <= n; ++i)
        for (int j = std::min(i, q); j >= 1; --j)
            row[static_cast<std::size_t>(j)] =
                static_cast<double>(j) * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j - 1)];
    return row[static_cast<std::size_t>(q)];
}

// Completed-search matching existence over a candidate mask; conservatively
// answers true once the meter is exhausted so callers never under-prune.
bool exists_matching_within(const std::vector<EdgeSet>& compat, EdgeSet cand, int need,
                            detail::BudgetMeter& meter) {
    if (need == 0) return true;
    while (true) {
        if (meter.tick()) return true;
        if (static_cast<int>(cand.count()) < need) return false;
        std::int64_t e = cand.next(0);
        if (e < 0) return false;
        EdgeSet inner = cand;
        inner &= compat[static_cast<std::uint32_t>(e)];
        if (exists_matching_within(compat, std::move(inner), need - 1, meter)) return true;
        cand.reset(static_cast<std::uint32_t>(e));
    }
}

bool exists_rainbow_within(const std::vector<EdgeSet>& compat, const std::vector<EdgeSet>& classes,
                           const std::vector<int>& colors, EdgeSet cand, int need,
                           detail::BudgetMeter& meter) {
    if (need == 0) return true;
    while (true) {
        if (meter.tick()) return true;
        if (static_cast<int>(cand.count()) < need) return false;
        std::int64_t e = cand.next(0);
        if (e < 0) return false;
        EdgeSet inner = cand;
        inner &= compat[static_cast<std::uint32_t>(e)];
        inner.and_not(classes[static_cast<std::size_t>(colors[static_cast<std::uint32_t>(e)])]);
        if (exists_rainbow_within(compat, classes, colors, std::move(inner), need - 1, meter)) return true;
        cand.reset(static_cast<std::uint32_t>(e));
    }
}

std::vector<CanonicalLabel> dedupe(std::vector<CanonicalLabel> labels) {
    std::set<CanonicalLabel> s(labels.begin(), labels.end());
    return {s.begin(), s.end()};
}

// All maximum-size M_2-free families via maximal-clique enumeration on the
// intersection graph (edges adjacent iff they share a vertex).
struct CliqueSearch {
    const std::uint64_t total;
    std::vector<EdgeSet> adj;
    detail::BudgetMeter& meter;
    std::int64_t best;
    std::vector<EdgeSet> collected;
    std::uint64_t raw = 0;
    std::vector<std::uint32_t> current;

    CliqueSearch(const PartProfile& profile, detail::BudgetMeter& m, std::int64_t seed_size)
        : total(profile.edge_count()), meter(m), best(seed_size) {
        const auto compat = detail::compat_masks(profile, EdgeSet::full(total));
        adj.resize(total);
        for (std::uint32_t e = 0; e < total; ++e) {
            adj[e] = EdgeSet::full(total);
            adj[e].and_not(compat[e]);
            adj[e].reset(e);
        }
    }

    void record() {
        const std::int64_t size = static_cast<std::int64_t>(current.size());
        if (size < best) return;
        if (size > best) {
            best = size;
            collected.clear();
            raw = 0;
        }
        ++raw;
        if (collected.size() < kCollectCap) {
            EdgeSet s(total);
            for (std::uint32_t v : current) s.set(v);
            collected.push_back(std::move(s));
        }
    }

    void run(EdgeSet p, EdgeSet x) {
        if (meter.tick()) return;
        if (static_cast<std::int64_t>(current.size() + p.count()) < best) return;
        if (p.empty()) {
            if (x.empty()) record();
            return;
        }
        // pivot on the vertex covering most of P
        std::uint32_t pivot = 0;
        std::uint64_t pivot_cover = 0;
        bool have_pivot = false;
        auto consider = [&](std::uint32_t u) {
            const std::uint64_t cover = p.count_and(adj[u]);
            if (!have_pivot || cover > pivot_cover) {
                have_pivot = true;
                pivot = u;
                pivot_cover = cover;
            }
        };
        p.for_each(consider);
        x.for_each(consider);

        EdgeSet ext = p;
        ext.and_not(adj[pivot]);
        for (std::int64_t v = ext.next(0); v >= 0; v = ext.next(static_cast<std::uint32_t>(v) + 1)) {
            const auto vu = static_cast<std::uint32_t>(v);
            EdgeSet p2 = p;
            p2 &= adj[vu];
            EdgeSet x2 = x;
            x2 &= adj[vu];
            current.push_back(vu);
            run(std::move(p2), std::move(x2));
            current.pop_back();
            if (meter.exhausted()) return;
            p.reset(vu);
            x.set(vu);
        }
    }
};

struct ExSearch {
    const PartProfile& profile;
    const std::uint64_t total;
    const int k;
    std::vector<EdgeSet> compat;
    detail::BudgetMeter& meter;
    EdgeSet current;
    std::int64_t best;
    std::vector<EdgeSet> collected;
    std::uint64_t raw = 0;

    ExSearch(const PartProfile& p, int kk, detail::BudgetMeter& m, std::int64_t seed_size)
        : profile(p),
          total(p.edge_count()),
          k(kk),
          compat(detail::compat_masks(p, EdgeSet::full(p.edge_count()))),
          meter(m),
          current(p.edge_count()),
          best(seed_size) {}

    void run(std::uint32_t i, std::int64_t size) {
        if (meter.exhausted()) return;
        if (size + static_cast<std::int64_t>(total - i) < best) return;
        if (i == total) {
            if (size > best) {
                best = size;
                collected.clear();
                raw = 0;
            }
            if (size == best) {
                ++raw;
                if (collected.size() < kCollectCap) collected.push_back(current);
            }
            return;
        }
        if (meter.tick()) return;
        EdgeSet cand = current;
        cand &= compat[i];
        if (!exists_matching_within(compat, std::move(cand), k - 1, meter) && !meter.exhausted()) {
            current.set(i);
            run(i + 1, size + 1);
            current.reset(i);
            if (meter.exhausted()) return;
        }
        run(i + 1, size);
    }
};

std::int64_t best_known_coloring(const PartProfile& profile, int k) {
    std::int64_t best = 1;
    if (profile.size_of(1) == 2)
        best = std::max(best, static_cast<std::int64_t>(qclass_family(profile).classes.size()));
    if (k >= 2 && k - 2 < profile.size_of(1))
        best = std::max(best, static_cast<std::int64_t>(k - 2) * static_cast<std::int64_t>(profile.stride(1)) + 1);
    return best;
}

struct PartitionSearch {
    const PartProfile& profile;
    const std::uint64_t total;
    const int k;
    std::vector<EdgeSet> compat;
    detail::BudgetMeter& meter;
    std::vector<int> colors;
    std::vector<EdgeSet> classes;
    EdgeSet prefix;
    std::int64_t best;            // maximized when exact_q < 0
    int exact_q;                  // >= 1: collect only leaves with exactly this many colors
    std::vector<std::vector<int>> collected;
    std::uint64_t raw = 0;

    PartitionSearch(const PartProfile& p, int kk, detail::BudgetMeter& m, std::int64_t seed, int exact)
        : profile(p),
          total(p.edge_count()),
          k(kk),
          compat(detail::compat_masks(p, EdgeSet::full(p.edge_count()))),
          meter(m),
          colors(p.edge_count(), 0),
          classes(p.edge_count() + 1, EdgeSet(p.edge_count())),
          prefix(p.edge_count()),
          best(seed),
          exact_q(exact) {}

    bool creates_rainbow(std::uint32_t i, int c) {
        EdgeSet cand = prefix;
        cand &= compat[i];
        cand.and_not(classes[static_cast<std::size_t>(c)]);
        return exists_rainbow_within(compat, classes, colors, std::move(cand), k - 1, meter);
    }

    void leaf(int q_used) {
        if (exact_q >= 0) {
            if (q_used != exact_q) return;
        } else {
            if (q_used < best) return;
            if (q_used > best) {
                best = q_used;
                collected.clear();
                raw = 0;
            }
        }
        ++raw;
        if (collected.size() < kCollectCap) collected.push_back(colors);
    }

    void run(std::uint32_t i, int q_used) {
        if (meter.exhausted()) return;
        const std::int64_t target = exact_q >= 0 ? exact_q : best;
        if (q_used + static_cast<std::int64_t>(total - i) < target) return;
        if (exact_q >= 0 && q_used > exact_q) return;
        if (i == total) {
            leaf(q_used);
            return;
        }
        const int limit = q_used + 1; // a new color comes from the lowest uncolored edge
        for (int c = limit; c >= 1; --c) {
            if (meter.tick()) return;
            if (creates_rainbow(i, c)) continue;
            if (meter.exhausted()) return;
            colors[i] = c;
            classes[static_cast<std::size_t>(c)].set(i);
            prefix.set(i);
            run(i + 1, std::max(q_used, c));
            colors[i] = 0;
            classes[static_cast<std::size_t>(c)].reset(i);
            prefix.reset(i);
            if (meter.exhausted()) return;
        }
    }
};

// Deduped labels plus one concrete representative per class.
std::vector<CanonicalLabel> labels_of_subsets(const PartProfile& profile, const std::vector<EdgeSet>& sets,
                                              std::uint64_t group_cap, bool& ok,
                                              std::vector<std::vector<std::uint32_t>>* samples = nullptr) {
    std::map<CanonicalLabel, std::vector<std::uint32_t>> by_label;
    try {
        for (const EdgeSet& s : sets)
            by_label.emplace(canonical_form(restrict_to_support(SubHypergraph(profile, s)), group_cap),
                             s.to_vector());
        ok = true;
    } catch (const std::runtime_error&) {
        ok = false;
        by_label.clear();
    }
    std::vector<CanonicalLabel> labels;
    for (auto& [label, sample] : by_label) {
        labels.push_back(label);
        if (samples) samples->push_back(std::move(sample));
    }
    return labels;
}

std::vector<CanonicalLabel> labels_of_colorings(const PartProfile& profile,
                                                const std::vector<std::vector<int>>& colorings,
                                                std::uint64_t group_cap, bool& ok) {
    std::vector<CanonicalLabel> labels;
    try {
        for (const auto& colors : colorings)
            labels.push_back(canonical_form(EdgeColoring(SubHypergraph::complete(profile), colors), group_cap));
        ok = true;
    } catch (const std::runtime_error&) {
        ok = false;
        labels.clear();
    }
    return dedupe(std::move(labels));
}

} // namespace

ExResult ex_exact(const PartProfile& profile, int k, const OracleBudget& budget) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    const std::uint64_t total = profile.edge_count();
    ExResult out;

    if (k == 1) {
        // Every edge is a 1-matching, so only the empty subhypergraph qualifies.
        out.value = 0;
        out.extremal_labels = {canonical_form(restrict_to_support(SubHypergraph::empty(profile)), budget.group_cap)};
        out.raw_extremal_count = 1;
        out.labels_complete = true;
        return out;
    }
    if (k > profile.size_of(1)) {
        // No k-matching fits through part 1; the whole host is extremal.
        out.value = static_cast<std::int64_t>(total);
        out.lower = out.upper = out.value.value();
        bool ok = false;
        out.extremal_labels =
            labels_of_subsets(profile, {EdgeSet::full(total)}, budget.group_cap, ok, &out.extremal_samples);
        out.labels_complete = ok;
        out.raw_extremal_count = 1;
        return out;
    }

    const std::int64_t seed =
        static_cast<std::int64_t>(k - 1) * static_cast<std::int64_t>(profile.stride(1));
    detail::BudgetMeter meter(SearchBudget{budget.subset_node_cap, 0, 0});

    std::vector<EdgeSet> maximizers;
    std::int64_t best = seed;
    std::uint64_t raw = 0;
    if (k == 2 && total > 20) {
        CliqueSearch cs(profile, meter, seed);
        cs.run(EdgeSet::full(total), EdgeSet(total));
        best = cs.best;
        maximizers = std::move(cs.collected);
        raw = cs.raw;
    } else {
        ExSearch es(profile, k, meter, seed);
        es.run(0, 0);
        best = es.best;
        maximizers = std::move(es.collected);
        raw = es.raw;
    }

    out.nodes = meter.nodes();
    out.lower = best;
    out.upper = meter.exhausted() ? static_cast<std::int64_t>(total) : best;
    if (!meter.exhausted()) {
        out.value = best;
        out.raw_extremal_count = raw;
        bool ok = false;
        out.extremal_labels =
            labels_of_subsets(profile, maximizers, budget.group_cap, ok, &out.extremal_samples);
        out.labels_complete = ok && raw == maximizers.size();
    }
    return out;
}

ArResult ar_exact(const PartProfile& profile, int k, const OracleBudget& budget) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    const std::uint64_t total = profile.edge_count();
    ArResult out;
    out.lower = best_known_coloring(profile, k);
    out.upper = static_cast<std::int64_t>(total);

    if (bell_estimate(static_cast<int>(total)) >
        kPruneHopeFactor * static_cast<double>(budget.partition_node_cap))
        return out; // partition space beyond any pruning hope; bracket only

    detail::BudgetMeter meter(SearchBudget{budget.partition_node_cap, 0, 0});
    PartitionSearch ps(profile, k, meter, out.lower, -1);
    ps.run(0, 0);

    out.nodes = meter.nodes();
    out.lower = ps.best;
    if (!meter.exhausted()) {
        out.value = ps.best;
        out.upper = ps.best;
        out.raw_witness_count = ps.raw;
        bool ok = false;
        out.witness_labels = labels_of_colorings(profile, ps.collected, budget.group_cap, ok);
        out.labels_complete = ok && ps.raw == ps.collected.size();
    }
    return out;
}

std::int64_t ar_m2_closed(const PartProfile& profile) {
    return static_cast<std::int64_t>(disjointness_components(SubHypergraph::complete(profile)).classes.size());
}

const char* to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::verified_exact: return "verified-exact";
        case ClaimStatus::verified_construction_only: return "verified-construction-only";
        case ClaimStatus::out_of_hypothesis: return "out-of-hypothesis";
        case ClaimStatus::failed: return "failed";
        case ClaimStatus::budget_exhausted: return "budget-exhausted";
        case ClaimStatus::not_applicable: return "not-applicable";
    }
    return "unknown";
}

ClosedForms closed_forms(const PartProfile& profile, int k) {
    ClosedForms f;
    const int r = profile.part_count();
    const int n1 = profile.size_of(1);
    const auto rest = static_cast<std::int64_t>(profile.stride(1)); // n_2 ... n_r

    if (k >= 1 && n1 >= k) f.ex_formula = static_cast<std::int64_t>(k - 1) * rest;
    f.turan_uniqueness = k >= 2 && n1 >= k;

    if (k == 2) {
        if (n1 >= 3) {
            f.ar_formula = 1;
        } else if (n1 == 2) {
            int t = 0;
            while (t < r && profile.size_of(t + 1) == 2) ++t;
            f.ar_formula = std::int64_t{1} << (t - 1);
        }
        f.coloring_uniqueness = n1 >= 2;
    } else if (k >= 3) {
        const bool hyp = (r == 2 && n1 >= k) || n1 >= 2 * k - 1;
        if (hyp) f.ar_formula = static_cast<std::int64_t>(k - 2) * rest + 1;
        f.coloring_uniqueness = hyp;
        f.corollary = hyp && (r == 2 ? n1 >= k : true);
    }
    return f;
}

UniquenessReport check_uniqueness_coloring(const PartProfile& profile, int k, const OracleBudget& budget) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    UniquenessReport rep;
    rep.profile = profile;
    rep.k = k;

    const ClosedForms forms = closed_forms(profile, k);
    const std::uint64_t total = profile.edge_count();
    rep.colors = k == 2 ? ar_m2_closed(profile)
                        : static_cast<std::int64_t>(k - 2) * static_cast<std::int64_t>(profile.stride(1)) + 1;

    if (forms.coloring_uniqueness) {
        if (k >= 3) {
            rep.expected_label = canonical_form(build_phi_r(profile, k), budget.group_cap);
        } else if (profile.size_of(1) == 2) {
            rep.expected_label = canonical_form(build_qclass_coloring(profile), budget.group_cap);
        } else {
            rep.expected_label = canonical_form(
                EdgeColoring(SubHypergraph::complete(profile), std::vector<int>(total, 1)), budget.group_cap);
        }
    }

    if (rep.colors > static_cast<std::int64_t>(total) ||
        stirling2_estimate(static_cast<int>(total), static_cast<int>(rep.colors)) >
            kPruneHopeFactor * static_cast<double>(budget.partition_node_cap)) {
        rep.status = ClaimStatus::budget_exhausted;
        rep.detail = "partition enumeration over budget";
        return rep;
    }

    detail::BudgetMeter meter(SearchBudget{budget.partition_node_cap, 0, 0});
    PartitionSearch ps(profile, k, meter, rep.colors, static_cast<int>(rep.colors));
    ps.run(0, 0);
    rep.nodes = meter.nodes();
    rep.completed = !meter.exhausted();
    if (!rep.completed) {
        rep.status = ClaimStatus::budget_exhausted;
        rep.detail = "search node cap reached";
        return rep;
    }

    rep.raw_count = ps.raw;
    bool ok = false;
    rep.witness_labels = labels_of_colorings(profile, ps.collected, budget.group_cap, ok);
    if (!ok || ps.raw != ps.collected.size()) {
        rep.status = ClaimStatus::budget_exhausted;
        rep.detail = ok ? "witness collection truncated" : "canonicalization budget exceeded";
        return rep;
    }

    if (!forms.coloring_uniqueness) {
        rep.status = ClaimStatus::out_of_hypothesis;
        rep.detail = "no paper claim for these parameters; witnesses reported";
        return rep;
    }

    if (rep.witness_labels.size() == 1 && rep.witness_labels.front() == *rep.expected_label) {
        rep.status = ClaimStatus::verified_exact;
    } else {
        rep.status = ClaimStatus::failed;
        std::ostringstream os;
        os << "expected exactly the extremal coloring label " << rep.expected_label->hex() << "; found "
           << rep.witness_labels.size() << " label(s) over " << rep.raw_count << " colorings";
        for (const auto& colors : ps.collected) {
            if (canonical_form(EdgeColoring(SubHypergraph::complete(profile), colors), budget.group_cap) ==
                *rep.expected_label)
                continue;
            os << "; counterexample colors by rank:";
            for (std::uint32_t r = 0; r < total; ++r) os << ' ' << colors[r];
            break;
        }
        rep.detail = os.str();
    }
    return rep;
}

bool VerificationReport::failed() const {
    for (const auto& [name, claim] : claims)
        if (claim.status == ClaimStatus::failed) return true;
    return false;
}

ClaimStatus VerificationReport::aggregate() const {
    bool construction_only = false, exhausted = false, any_exact = false;
    for (const auto& [name, claim] : claims) {
        switch (claim.status) {
            case ClaimStatus::failed: return ClaimStatus::failed;
            case ClaimStatus::verified_construction_only: construction_only = true; break;
            case ClaimStatus::budget_exhausted: exhausted = true; break;
            case ClaimStatus::verified_exact: any_exact = true; break;
            default: break;
        }
    }
    if (construction_only) return ClaimStatus::verified_construction_only;
    if (exhausted) return ClaimStatus::budget_exhausted;
    if (any_exact) return ClaimStatus::verified_exact;
    return ClaimStatus::out_of_hypothesis;
}

namespace {

std::string join_values(std::initializer_list<std::pair<const char*, std::int64_t>> vals) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, v] : vals) {
        if (!first) os << ", ";
        first = false;
        os << name << "=" << v;
    }
    return os.str();
}

} // namespace

VerificationReport verify_cell(const GridCell& cell, const OracleBudget& budget) {
    const PartProfile& profile = cell.profile;
    const int k = cell.k;
    if (k < 2) throw std::invalid_argument("grid cells need k >= 2");

    VerificationReport rep;
    rep.profile = profile;
    rep.k = k;

    const ClosedForms forms = closed_forms(profile, k);
    rep.ex_formula = forms.ex_formula;
    rep.ar_formula = forms.ar_formula;

    const ExResult ex_k = ex_exact(profile, k, budget);
    const ExResult ex_prev = ex_exact(profile, k - 1, budget);
    const ArResult ar_k = ar_exact(profile, k, budget);
    rep.ex_oracle = ex_k.value;
    rep.ex_prev_oracle = ex_prev.value;
    rep.ar_oracle = ar_k.value;
    // at k = 2 the component identity pins ar exactly even when partition
    // exhaustion is out of budget
    std::optional<std::int64_t> ar_value = ar_k.value;
    if (k == 2 && !ar_value) ar_value = ar_m2_closed(profile);
    if (!rep.ar_oracle) rep.ar_oracle = ar_value;
    for (const auto& l : ex_k.extremal_labels) rep.witness_hex.push_back(l.hex());
    for (const auto& l : ar_k.witness_labels) rep.witness_hex.push_back(l.hex());

    // Turan construction: right edge count and completed-search proof that no
    // k-matching exists. Valid even when the oracle is out of budget.
    bool turan_ok = false;
    if (k - 1 <= profile.size_of(1)) {
        const SubHypergraph turan = build_turan_extremal(profile, k);
        const auto expect_edges =
            static_cast<std::int64_t>(k - 1) * static_cast<std::int64_t>(profile.stride(1));
        const auto witness = has_k_matching(turan, k);
        if (static_cast<std::int64_t>(turan.edge_count()) == expect_edges &&
            witness.status == WitnessStatus::absent) {
            turan_ok = true;
            rep.claims["turan_construction"] = {ClaimStatus::verified_exact,
                                                join_values({{"edges", expect_edges}})};
        } else {
            rep.claims["turan_construction"] = {
                ClaimStatus::failed, witness.status == WitnessStatus::found
                                         ? "construction contains a k-matching"
                                         : "construction has the wrong edge count"};
        }
    } else {
        rep.claims["turan_construction"] = {ClaimStatus::not_applicable, "k-1 exceeds n_1"};
    }

    if (forms.ex_formula) {
        if (ex_k.value) {
            rep.claims["ex_formula"] =
                *ex_k.value == *forms.ex_formula
                    ? ClaimOutcome{ClaimStatus::verified_exact,
                                   join_values({{"formula", *forms.ex_formula}, {"oracle", *ex_k.value}})}
                    : ClaimOutcome{ClaimStatus::failed,
                                   join_values({{"formula", *forms.ex_formula}, {"oracle", *ex_k.value}})};
        } else if (turan_ok) {
            rep.claims["ex_formula"] = {ClaimStatus::verified_construction_only,
                                        join_values({{"formula", *forms.ex_formula},
                                                     {"oracle_lower", ex_k.lower},
                                                     {"oracle_upper", ex_k.upper}})};
        } else {
            rep.claims["ex_formula"] = {ClaimStatus::budget_exhausted, "oracle and construction unavailable"};
        }
    } else {
        rep.claims["ex_formula"] = {ClaimStatus::out_of_hypothesis,
                                    "no paper claim; oracle value reported when exact"};
    }

    if (forms.turan_uniqueness) {
        if (ex_k.value && ex_k.labels_complete) {
            const auto expected =
                canonical_form(restrict_to_support(build_turan_extremal(profile, k)), budget.group_cap);
            if (ex_k.extremal_labels.size() == 1 && ex_k.extremal_labels.front() == expected) {
                rep.claims["turan_uniqueness"] = {ClaimStatus::verified_exact,
                                                  "one extremal label, equal to the construction"};
            } else {
                std::ostringstream os;
                os << ex_k.extremal_labels.size() << " extremal classes over " << ex_k.raw_extremal_count
                   << " labeled maximizers; counterexample edges:";
                for (std::size_t i = 0; i < ex_k.extremal_labels.size(); ++i) {
                    if (ex_k.extremal_labels[i] == expected) continue;
                    for (std::uint32_t r : ex_k.extremal_samples[i])
                        os << ' ' << edge_to_string(edge_unrank(profile, EdgeId{r}));
                    break;
                }
                rep.claims["turan_uniqueness"] = {ClaimStatus::failed, os.str()};
            }
        } else {
            rep.claims["turan_uniqueness"] = {ClaimStatus::budget_exhausted, "extremal set not enumerated"};
        }
    } else {
        rep.claims["turan_uniqueness"] = {ClaimStatus::out_of_hypothesis, ""};
    }

    // phi construction: color count and completed-search proof of no rainbow
    // k-matching.
    bool phi_ok = false;
    if (k - 2 < profile.size_of(1)) {
        const EdgeColoring phi = build_phi_r(profile, k);
        const auto expect_q =
            static_cast<std::int64_t>(k - 2) * static_cast<std::int64_t>(profile.stride(1)) + 1;
        const auto witness = find_rainbow_k(phi, k);
        if (phi.color_count() == expect_q && witness.status == WitnessStatus::absent) {
            phi_ok = true;
            rep.claims["phi_construction"] = {ClaimStatus::verified_exact, join_values({{"colors", expect_q}})};
        } else {
            rep.claims["phi_construction"] = {
                ClaimStatus::failed, witness.status == WitnessStatus::found
                                         ? "construction admits a rainbow k-matching"
                                         : "construction has the wrong color count"};
        }
    } else {
        rep.claims["phi_construction"] = {ClaimStatus::not_applicable, "k-2 must stay below n_1"};
    }

    if (forms.ar_formula) {
        if (k == 2) {
            const std::int64_t closed = ar_m2_closed(profile);
            const bool closed_match = closed == *forms.ar_formula;
            const bool oracle_match = !ar_k.value || *ar_k.value == *forms.ar_formula;
            if (closed_match && oracle_match) {
                rep.claims["ar_formula"] = {ClaimStatus::verified_exact,
                                            join_values({{"formula", *forms.ar_formula},
                                                         {"components", closed},
                                                         {"oracle", ar_k.value ? *ar_k.value : -1}})};
            } else {
                rep.claims["ar_formula"] = {ClaimStatus::failed,
                                            join_values({{"formula", *forms.ar_formula},
                                                         {"components", closed},
                                                         {"oracle", ar_k.value ? *ar_k.value : -1}})};
            }
        } else if (ar_k.value) {
            rep.claims["ar_formula"] =
                *ar_k.value == *forms.ar_formula
                    ? ClaimOutcome{ClaimStatus::verified_exact,
                                   join_values({{"formula", *forms.ar_formula}, {"oracle", *ar_k.value}})}
                    : ClaimOutcome{ClaimStatus::failed,
                                   join_values({{"formula", *forms.ar_formula}, {"oracle", *ar_k.value}})};
        } else if (phi_ok) {
            rep.claims["ar_formula"] = {ClaimStatus::verified_construction_only,
                                        join_values({{"formula", *forms.ar_formula},
                                                     {"oracle_lower", ar_k.lower},
                                                     {"oracle_upper", ar_k.upper}})};
        } else {
            rep.claims["ar_formula"] = {ClaimStatus::budget_exhausted, "oracle and construction unavailable"};
        }
    } else {
        rep.claims["ar_formula"] = {ClaimStatus::out_of_hypothesis,
                                    "no paper claim; oracle value reported when exact"};
    }

    if (ex_prev.value && ar_value && ex_k.value) {
        const bool ok = *ex_prev.value + 1 <= *ar_value && *ar_value <= *ex_k.value;
        rep.claims["sandwich"] = {ok ? ClaimStatus::verified_exact : ClaimStatus::failed,
                                  join_values({{"ex_prev_plus_1", *ex_prev.value + 1},
                                               {"ar", *ar_value},
                                               {"ex", *ex_k.value}})};
    } else {
        rep.claims["sandwich"] = {ClaimStatus::not_applicable, "oracle values incomplete; skipped"};
    }

    if (forms.corollary) {
        if (ar_value && ex_prev.value) {
            const bool ok = *ar_value == *ex_prev.value + 1;
            rep.claims["corollary"] = {ok ? ClaimStatus::verified_exact : ClaimStatus::failed,
                                       join_values({{"ar", *ar_value}, {"ex_prev_plus_1", *ex_prev.value + 1}})};
        } else {
            rep.claims["corollary"] = {ClaimStatus::not_applicable, "oracle values incomplete; skipped"};
        }
    } else {
        rep.claims["corollary"] = {ClaimStatus::not_applicable,
                                   k == 2 ? "corollary not applied at k=2" : "hypotheses not met"};
    }

    return rep;
}

std::vector<VerificationReport> verify_grid(const std::vector<GridCell>& cells, const OracleBudget& budget,
                                            int workers) {
    std::vector<VerificationReport> reports(cells.size());
    parallel_for_index(cells.size(), workers,
                       [&](std::size_t i) { reports[i] = verify_cell(cells[i], budget); });
    return reports;
}

std::vector<GridCell> default_desk_grid() {
    return {
        {make_profile({2, 2}), 2},     {make_profile({2, 3}), 2},    {make_profile({3, 3}), 2},
        {make_profile({3, 3}), 3},     {make_profile({2, 2, 2}), 2}, {make_profile({3, 3, 3}), 2},
        {make_profile({5, 5}), 3},     {make_profile({5, 5, 5}), 3},
    };
}

} // namespace armatch
