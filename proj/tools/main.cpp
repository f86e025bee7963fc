#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "armatch/constructions.hpp"
#include "armatch/core.hpp"
#include "armatch/experiments.hpp"
#include "armatch/matching.hpp"
#include "armatch/oracles.hpp"
#include "armatch/rainbow.hpp"
#include "armatch/serialize.hpp"

namespace {

using namespace armatch;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kUsageError = 1;
constexpr int kBudgetExhausted = 2;
constexpr int kVerificationFailure = 3;

void write_text(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        if (content.empty() || content.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    json j;
    in >> j;
    return j;
}

const char* status_name(WitnessStatus s) {
    switch (s) {
        case WitnessStatus::found: return "found";
        case WitnessStatus::absent: return "absent";
        case WitnessStatus::indeterminate: return "indeterminate";
    }
    return "unknown";
}

void report_reordering(const PartProfile& profile) {
    for (std::size_t i = 0; i < profile.input_order().size(); ++i) {
        if (profile.input_order()[i] != static_cast<int>(i) + 1) {
            std::cerr << "note: parts sorted to " << profile.to_string() << " (input positions";
            for (int pos : profile.input_order()) std::cerr << ' ' << pos;
            std::cerr << ")\n";
            return;
        }
    }
}

int cmd_construct(const std::string& kind, const std::string& profile_str, int k,
                  const std::string& out_path) {
    const PartProfile profile = parse_profile(profile_str);
    report_reordering(profile);
    json payload;
    if (kind == "phi") {
        const EdgeColoring phi = build_phi_r(profile, k);
        payload = to_json(phi);
        std::cerr << "phi " << profile.to_string() << " k=" << k << ": q=" << phi.color_count()
                  << " edges=" << phi.domain().edge_count() << "\n";
    } else if (kind == "turan") {
        const SubHypergraph turan = build_turan_extremal(profile, k);
        payload = to_json(turan);
        std::cerr << "turan " << profile.to_string() << " k=" << k << ": edges=" << turan.edge_count()
                  << "\n";
    } else {
        const EdgeColoring qc = build_qclass_coloring(profile);
        payload = to_json(qc);
        std::cerr << "qclass " << profile.to_string() << ": q=" << qc.color_count()
                  << " edges=" << qc.domain().edge_count() << "\n";
    }
    write_text(out_path, payload.dump(2));
    return kOk;
}

int cmd_solve(const std::string& kind, const std::string& in_path, std::optional<int> k,
              const std::string& strategy, const SearchBudget& budget, const std::string& out_path) {
    const json input = read_json_file(in_path);
    json result;
    bool exhausted = false;

    if (kind == "matching") {
        const SubHypergraph sub = subhypergraph_from_json(input);
        if (k) {
            const auto res = has_k_matching(sub, *k, budget);
            result["status"] = status_name(res.status);
            if (res.witness) result["witness"] = to_json(*res.witness);
            result["nodes"] = res.stats.nodes;
            exhausted = res.status == WitnessStatus::indeterminate;
        } else {
            const auto res = max_matching(sub, budget);
            result["status"] = res.optimal ? "optimal" : "incumbent";
            result["size"] = res.best.size();
            result["witness"] = to_json(res.best);
            result["nodes"] = res.stats.nodes;
            exhausted = !res.optimal;
        }
    } else {
        const EdgeColoring coloring = coloring_from_json(input);
        const RainbowStrategy strat =
            strategy == "slice-guided" ? RainbowStrategy::slice_guided : RainbowStrategy::generic;
        if (k) {
            const auto res = find_rainbow_k(coloring, *k, strat, budget);
            result["status"] = status_name(res.status);
            if (res.witness) result["witness"] = to_json(*res.witness);
            result["nodes"] = res.stats.nodes;
            exhausted = res.status == WitnessStatus::indeterminate;
        } else {
            const auto res = max_rainbow_matching(coloring, budget);
            result["status"] = res.optimal ? "optimal" : "incumbent";
            result["size"] = res.best.size();
            result["witness"] = to_json(res.best);
            result["nodes"] = res.stats.nodes;
            exhausted = !res.optimal;
        }
    }

    std::cerr << "solve " << kind << ": " << result["status"].get<std::string>()
              << " nodes=" << result["nodes"].get<std::uint64_t>() << "\n";
    write_text(out_path, result.dump(2));
    return exhausted ? kBudgetExhausted : kOk;
}

int cmd_verify(const std::string& grid_path, const OracleBudget& budget, int workers,
               const std::string& format, const std::string& out_path) {
    const std::vector<GridCell> cells =
        grid_path.empty() ? default_desk_grid() : grid_from_json(read_json_file(grid_path));

    const auto reports = verify_grid(cells, budget, workers);

    std::string rendered;
    if (format == "csv") {
        rendered = to_csv(reports);
    } else {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        rendered = arr.dump(2);
    }
    write_text(out_path, rendered);

    bool any_failed = false;
    for (const auto& r : reports) {
        std::cerr << "cell " << r.profile.to_string() << " k=" << r.k << ": "
                  << to_string(r.aggregate()) << "\n";
        if (r.failed()) {
            any_failed = true;
            for (const auto& [name, claim] : r.claims)
                if (claim.status == ClaimStatus::failed)
                    std::cerr << "  counterexample in " << name << ": " << claim.detail << "\n";
            if (!out_path.empty()) std::cerr << "  full report: " << out_path << "\n";
        }
    }
    return any_failed ? kVerificationFailure : kOk;
}

int cmd_fuzz(const std::string& profile_str, int k, int colors, std::uint64_t trials,
             std::uint64_t seed, const SearchBudget& budget, int workers,
             const std::string& out_path) {
    const PartProfile profile = parse_profile(profile_str);
    const FuzzSummary summary = run_fuzz(profile, k, colors, trials, seed, budget, workers);

    const ClosedForms forms = closed_forms(profile, k);
    const bool must_find = forms.ar_formula && colors > *forms.ar_formula;

    json j;
    j["profile"] = profile.to_string();
    j["k"] = k;
    j["colors"] = colors;
    j["seed"] = seed;
    j["trials"] = summary.trials;
    j["found"] = summary.found;
    j["absent"] = summary.absent;
    j["indeterminate"] = summary.indeterminate;
    j["absent_trials"] = summary.absent_trials;
    j["forced_above_ar"] = must_find;
    if (!out_path.empty()) write_text(out_path, j.dump(2));

    std::cout << "fuzz " << profile.to_string() << " k=" << k << " q=" << colors << ": "
              << summary.found << "/" << summary.trials << " rainbow matchings found";
    if (must_find) std::cout << " (q exceeds ar=" << *forms.ar_formula << ", all trials must find one)";
    std::cout << "\n";

    if (must_find && summary.absent > 0) {
        std::cerr << "disproof event: no rainbow matching in trial(s):";
        for (std::uint64_t t : summary.absent_trials) std::cerr << ' ' << t;
        std::cerr << " (reproduce with --seed " << seed << ")\n";
        return kVerificationFailure;
    }
    if (summary.indeterminate > 0) {
        std::cerr << summary.indeterminate << " trial(s) hit the search budget\n";
        return kBudgetExhausted;
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"armatch: anti-Ramsey matching workbench for complete multipartite hosts"};
    app.require_subcommand(1);

    std::string profile_str, kind, in_path, out_path, grid_path;
    std::string strategy = "generic";
    std::string format = "json";
    int k = 0;
    int colors = 0;
    std::uint64_t trials = 100;
    std::uint64_t seed = 0;
    std::uint64_t budget_nodes = 0;
    std::int64_t budget_ms = 0;
    int workers = 1;

    auto* construct = app.add_subcommand("construct", "build phi / turan / qclass objects as JSON");
    construct->add_option("kind", kind, "phi | turan | qclass")
        ->required()
        ->check(CLI::IsMember({"phi", "turan", "qclass"}));
    construct->add_option("--profile", profile_str, "part sizes, e.g. 2x2x3")->required();
    construct->add_option("--k", k, "matching size parameter");
    construct->add_option("--out", out_path, "output file (stdout when omitted)");

    auto* solve = app.add_subcommand("solve", "run the exact solvers on a serialized object");
    solve->add_option("kind", kind, "matching | rainbow")
        ->required()
        ->check(CLI::IsMember({"matching", "rainbow"}));
    solve->add_option("--in", in_path, "input JSON file")->required();
    solve->add_option("--k", k, "target matching size (omit to maximize)");
    solve->add_option("--strategy", strategy, "generic | slice-guided")
        ->check(CLI::IsMember({"generic", "slice-guided"}));
    solve->add_option("--budget-nodes", budget_nodes, "search node cap");
    solve->add_option("--budget-ms", budget_ms, "wall clock cap in ms");
    solve->add_option("--out", out_path, "verdict JSON file");

    auto* verify = app.add_subcommand("verify", "verify formulas and constructions over a grid");
    verify->add_option("--grid", grid_path, "JSON list of {profile, k} (default desk grid when omitted)");
    verify->add_option("--budget-nodes", budget_nodes, "oracle node cap");
    verify->add_option("--workers", workers, "parallel grid cells");
    verify->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--out", out_path, "report file (stdout when omitted)");

    auto* fuzz = app.add_subcommand("fuzz", "random surjective colorings vs the exact rainbow finder");
    fuzz->add_option("--profile", profile_str, "part sizes, e.g. 5x5")->required();
    fuzz->add_option("--k", k, "rainbow matching size")->required();
    fuzz->add_option("--colors", colors, "number of colors q")->required();
    fuzz->add_option("--trials", trials, "number of trials");
    fuzz->add_option("--seed", seed, "base seed");
    fuzz->add_option("--budget-nodes", budget_nodes, "per-trial node cap");
    fuzz->add_option("--budget-ms", budget_ms, "per-trial wall clock cap in ms");
    fuzz->add_option("--workers", workers, "parallel trials");
    fuzz->add_option("--out", out_path, "summary JSON file");

    CLI11_PARSE(app, argc, argv);

    try {
        SearchBudget budget;
        if (budget_nodes > 0) budget.node_cap = budget_nodes;
        budget.time_cap_ms = budget_ms;
        budget.seed = seed;

        if (construct->parsed()) {
            if ((kind == "phi" || kind == "turan") && construct->count("--k") == 0)
                throw std::invalid_argument("--k is required for this construction");
            return cmd_construct(kind, profile_str, k, out_path);
        }
        if (solve->parsed()) {
            std::optional<int> target;
            if (solve->count("--k") > 0) target = k;
            return cmd_solve(kind, in_path, target, strategy, budget, out_path);
        }
        if (verify->parsed()) {
            OracleBudget ob;
            if (budget_nodes > 0) {
                ob.subset_node_cap = budget_nodes;
                ob.partition_node_cap = budget_nodes;
            }
            return cmd_verify(grid_path, ob, workers, format, out_path);
        }
        if (fuzz->parsed()) {
            if (trials < 1) throw std::invalid_argument("trials must be positive");
            return cmd_fuzz(profile_str, k, colors, trials, seed, budget, workers, out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}
