#include "armatch/serialize.hpp"

#include <sstream>

namespace armatch {

using nlohmann::json;

json to_json(const SubHypergraph& sub) {
    json j;
    j["profile"] = sub.profile().to_string();
    j["members"] = sub.members().to_vector();
    return j;
}

SubHypergraph subhypergraph_from_json(const json& j) {
    const PartProfile profile = parse_profile(j.at("profile").get<std::string>());
    return SubHypergraph::of_ranks(profile, j.at("members").get<std::vector<std::uint32_t>>());
}

json to_json(const EdgeColoring& coloring) {
    json assignments = json::array();
    coloring.domain().members().for_each([&](std::uint32_t rank) {
        assignments.push_back({rank, coloring.color_of(EdgeId{rank})});
    });
    json j;
    j["profile"] = coloring.profile().to_string();
    j["q"] = coloring.color_count();
    j["assignments"] = std::move(assignments);
    return j;
}

EdgeColoring coloring_from_json(const json& j) {
    const PartProfile profile = parse_profile(j.at("profile").get<std::string>());
    EdgeSet domain(profile.edge_count());
    std::vector<int> colors(profile.edge_count(), 0);
    for (const auto& pair : j.at("assignments")) {
        const auto rank = pair.at(0).get<std::uint32_t>();
        if (rank >= profile.edge_count()) throw std::invalid_argument("invalid edge");
        domain.set(rank);
        colors[rank] = pair.at(1).get<int>();
    }
    EdgeColoring coloring(SubHypergraph(profile, std::move(domain)), std::move(colors));
    if (j.contains("q") && j.at("q").get<int>() != coloring.color_count())
        throw std::invalid_argument("declared q does not match assignments");
    return coloring;
}

json to_json(const Matching& matching) {
    json edges = json::array();
    for (const Edge& e : matching.edges()) edges.push_back(edge_to_string(e));
    json j;
    j["size"] = matching.size();
    j["edges"] = std::move(edges);
    return j;
}

json to_json(const SliceView& slice) {
    json edges = json::array();
    slice.host_members.for_each([&](std::uint32_t rank) {
        edges.push_back(edge_to_string(edge_unrank(slice.host_profile, EdgeId{rank})));
    });
    json j;
    j["slice"] = slice.shift;
    j["colors"] = slice.inherited ? slice.inherited->color_count() : 0;
    j["edges"] = std::move(edges);
    return j;
}

namespace {

json value_or_exhausted(const std::optional<std::int64_t>& v) {
    if (v) return *v;
    return "budget-exhausted";
}

} // namespace

json to_json(const VerificationReport& report) {
    json j;
    j["profile"] = report.profile.to_string();
    j["k"] = report.k;
    j["ex_formula"] = report.ex_formula ? json(*report.ex_formula) : json(nullptr);
    j["ar_formula"] = report.ar_formula ? json(*report.ar_formula) : json(nullptr);
    j["ex_oracle"] = value_or_exhausted(report.ex_oracle);
    j["ex_prev_oracle"] = value_or_exhausted(report.ex_prev_oracle);
    j["ar_oracle"] = value_or_exhausted(report.ar_oracle);
    j["status"] = to_string(report.aggregate());
    json claims;
    for (const auto& [name, claim] : report.claims) {
        claims[name] = {{"status", to_string(claim.status)}, {"detail", claim.detail}};
    }
    j["claims"] = std::move(claims);
    j["witnesses"] = report.witness_hex;
    return j;
}

std::string to_csv(const std::vector<VerificationReport>& reports) {
    std::ostringstream os;
    os << "profile,k,ex_formula,ex_oracle,ar_formula,ar_oracle,status\n";
    auto cell = [&](const std::optional<std::int64_t>& v, const char* absent) {
        if (v)
            os << *v;
        else
            os << absent;
    };
    for (const auto& r : reports) {
        os << r.profile.to_string() << ',' << r.k << ',';
        cell(r.ex_formula, "-");
        os << ',';
        cell(r.ex_oracle, "budget-exhausted");
        os << ',';
        cell(r.ar_formula, "-");
        os << ',';
        cell(r.ar_oracle, "budget-exhausted");
        os << ',' << to_string(r.aggregate()) << '\n';
    }
    return os.str();
}

std::vector<GridCell> grid_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("grid file must be a JSON list of {profile, k}");
    std::vector<GridCell> cells;
    for (const auto& item : j) {
        GridCell cell;
        cell.profile = parse_profile(item.at("profile").get<std::string>());
        cell.k = item.at("k").get<int>();
        cells.push_back(std::move(cell));
    }
    return cells;
}

json to_json(const std::vector<GridCell>& cells) {
    json j = json::array();
    for (const auto& cell : cells) j.push_back({{"profile", cell.profile.to_string()}, {"k", cell.k}});
    return j;
}

} // namespace armatch
