#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "armatch/core.hpp"
#include "armatch/matching.hpp"
#include "armatch/oracles.hpp"
#include "armatch/rainbow.hpp"

namespace armatch {

// {"profile": "2x2x3", "members": [ranks...]}
nlohmann::json to_json(const SubHypergraph& sub);
SubHypergraph subhypergraph_from_json(const nlohmann::json& j);

// {"profile": "...", "q": n, "assignments": [[rank, color], ...]}
nlohmann::json to_json(const EdgeColoring& coloring);
EdgeColoring coloring_from_json(const nlohmann::json& j);

// {"size": n, "edges": ["(1,2,1)", ...]}
nlohmann::json to_json(const Matching& matching);

// {"slice": i, "colors": q_i, "edges": [...]}
nlohmann::json to_json(const SliceView& slice);

nlohmann::json to_json(const VerificationReport& report);
std::string to_csv(const std::vector<VerificationReport>& reports);

// [{"profile": "3x3", "k": 3}, ...]
std::vector<GridCell> grid_from_json(const nlohmann::json& j);
nlohmann::json to_json(const std::vector<GridCell>& cells);

} // namespace armatch
