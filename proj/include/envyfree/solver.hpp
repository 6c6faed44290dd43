#pragma once

#include <optional>
#include <vector>

#include "envyfree/bigraph.hpp"
#include "envyfree/prefs.hpp"

namespace envyfree {

/// Total injective map from agents to houses: houses[i] is agent i's house.
struct Assignment {
    std::vector<HouseIndex> houses;

    friend bool operator==(const Assignment&, const Assignment&) = default;
    friend auto operator<=>(const Assignment&, const Assignment&) = default;
};

/// One pass of the pruning loop.
struct SolveIteration {
    std::vector<HouseIndex> remaining;  // houses still available on entry
    bool saturating = false;
    std::optional<HallViolator> violator;  // set iff !saturating
    std::vector<HouseIndex> removed;       // S(Z); empty iff saturating
};

struct SolveTrace {
    std::vector<SolveIteration> iterations;
    std::optional<Assignment> assignment;  // empty: no envy-free assignment

    bool found() const noexcept { return assignment.has_value(); }
};

/// Graph joining each agent to its best houses among `remaining`.
BipartiteGraph top_choice_graph(const PreferenceProfile& profile,
                                std::span<const HouseIndex> remaining);

/// Decides whether an envy-free assignment exists and returns one if so.
///
/// Repeatedly matches agents to their top choices among the remaining houses.
/// When no agent-saturating matching exists, the houses adjacent to a minimal
/// Hall violator cannot appear in any envy-free assignment and are dropped.
/// The loop stops once fewer houses than agents remain, after at most
/// m - n + 1 iterations.
///
/// Throws std::invalid_argument when m < n.
SolveTrace envy_free_assignment(const PreferenceProfile& profile);

/// True iff no agent strictly prefers another agent's house to its own.
bool verify_envy_free(const PreferenceProfile& profile, const Assignment& assignment);

}  // namespace envyfree
