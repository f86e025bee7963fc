#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "armatch/canonical.hpp"
#include "armatch/core.hpp"
#include "armatch/matching.hpp"

namespace armatch {

struct OracleBudget {
    std::uint64_t subset_node_cap = std::uint64_t{1} << 20;
    std::uint64_t partition_node_cap = 10'000'000;
    std::uint64_t group_cap = 10'000'000;
};

// Maximum edge count of an M_k-free subhypergraph of the complete host.
// Exhaustive in/out search over edge ranks (maximum clique on the
// intersection graph for k = 2 on larger hosts). Labels are canonical forms
// of the maximizers with isolated vertices dropped.
struct ExResult {
    std::optional<std::int64_t> value; // set iff the search completed
    std::int64_t lower = 0;            // achieved by a concrete subhypergraph
    std::int64_t upper = 0;
    std::vector<CanonicalLabel> extremal_labels;
    std::vector<std::vector<std::uint32_t>> extremal_samples; // one concrete maximizer per label
    std::uint64_t raw_extremal_count = 0; // labeled maximizers before the isomorphism quotient
    bool labels_complete = false;
    std::uint64_t nodes = 0;
};

ExResult ex_exact(const PartProfile& profile, int k, const OracleBudget& budget = {});

// Maximum q admitting a surjective q-coloring of the complete host with no
// rainbow M_k. Set-partition DFS in rank order (a new color may only be
// introduced by the lowest-ranked uncolored edge), pruning every branch
// whose colored prefix already contains a rainbow M_k.
struct ArResult {
    std::optional<std::int64_t> value;
    std::int64_t lower = 0;
    std::int64_t upper = 0;
    std::vector<CanonicalLabel> witness_labels;
    std::uint64_t raw_witness_count = 0;
    bool labels_complete = false;
    std::uint64_t nodes = 0;
};

ArResult ar_exact(const PartProfile& profile, int k, const OracleBudget& budget = {});

// ar(., M_2) = number of disjointness components of the complete host.
std::int64_t ar_m2_closed(const PartProfile& profile);

enum class ClaimStatus {
    verified_exact,
    verified_construction_only,
    out_of_hypothesis,
    failed,
    budget_exhausted,
    not_applicable,
};
const char* to_string(ClaimStatus s);

// Closed forms and hypothesis routing, kept as explicit data so that
// out-of-range cells are never silently asserted.
struct ClosedForms {
    std::optional<std::int64_t> ex_formula;  // (k-1) n_2...n_r when n_1 >= k >= 1
    std::optional<std::int64_t> ar_formula;  // k = 2: component closed form (n_1 >= 2);
                                             // k >= 3: (k-2) n_2...n_r + 1 when r = 2 and n_1 >= k,
                                             // or n_1 >= 2k-1 for any r
    bool turan_uniqueness = false;           // n_1 >= k >= 2
    bool coloring_uniqueness = false;        // same routing as ar_formula (k = 2 claim is derived)
    bool corollary = false;                  // k >= 3 and (r = 2 ? n_1 >= k : n_1 >= 2k-1)
};

ClosedForms closed_forms(const PartProfile& profile, int k);

// Enumerates every surjective coloring with exactly the closed-form color
// count and no rainbow M_k, and compares the canonical witness set against
// the expected extremal coloring.
struct UniquenessReport {
    PartProfile profile;
    int k = 0;
    std::int64_t colors = 0;
    bool completed = false;
    std::uint64_t raw_count = 0; // labeled witnesses (colors unlabeled, edges labeled)
    std::vector<CanonicalLabel> witness_labels;
    std::optional<CanonicalLabel> expected_label;
    ClaimStatus status = ClaimStatus::budget_exhausted;
    std::string detail;
    std::uint64_t nodes = 0;
};

UniquenessReport check_uniqueness_coloring(const PartProfile& profile, int k,
                                           const OracleBudget& budget = {});

struct GridCell {
    PartProfile profile;
    int k = 0;
};

struct ClaimOutcome {
    ClaimStatus status = ClaimStatus::not_applicable;
    std::string detail;
};

struct VerificationReport {
    PartProfile profile;
    int k = 0;
    std::optional<std::int64_t> ex_formula, ar_formula;
    std::optional<std::int64_t> ex_oracle, ar_oracle, ex_prev_oracle;
    std::map<std::string, ClaimOutcome> claims;
    std::vector<std::string> witness_hex;

    bool failed() const;
    ClaimStatus aggregate() const;
};

std::vector<VerificationReport> verify_grid(const std::vector<GridCell>& cells,
                                            const OracleBudget& budget = {}, int workers = 1);
VerificationReport verify_cell(const GridCell& cell, const OracleBudget& budget = {});

std::vector<GridCell> default_desk_grid();

} // namespace armatch
