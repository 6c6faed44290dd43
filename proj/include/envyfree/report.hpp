#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "envyfree/randmodel.hpp"
#include "envyfree/solver.hpp"

namespace envyfree {

/// {"status": "found"|"none", "assignment": {"<agent>": <house>, ...} | null,
///  "trace": [{"iteration", "remaining", "saturating", "violator", "removed"}]}
/// with 1-based ids and agents in increasing order.
nlohmann::ordered_json to_json(const SolveTrace& trace);

/// Reads the "assignment" object of to_json output back into an Assignment
/// for `n_agents` agents. Throws std::invalid_argument on a missing agent.
Assignment assignment_from_json(const nlohmann::json& result, std::size_t n_agents);

/// Human-readable result; includes the iteration trace when the instance has
/// no envy-free assignment or `with_trace` is set.
void write_text(std::ostream& out, const SolveTrace& trace, bool with_trace);

inline constexpr const char* csv_header =
    "n,m,trials,successes,mechanism_successes,success_fraction,seed";

/// One CSV row matching csv_header, success_fraction with six decimals.
std::string csv_row(const MonteCarloStats& stats);

}  // namespace envyfree
