#include "envyfree/solver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace envyfree {

BipartiteGraph top_choice_graph(const PreferenceProfile& profile,
                                std::span<const HouseIndex> remaining) {
    BipartiteGraph graph(profile.n_agents(), profile.n_houses());
    for (AgentIndex i = 0; i < profile.n_agents(); ++i) {
        for (HouseIndex h : top_choices(profile, i, remaining)) graph.add_edge(i, h);
    }
    return graph;
}

SolveTrace envy_free_assignment(const PreferenceProfile& profile) {
    const std::size_t n = profile.n_agents();
    const std::size_t m = profile.n_houses();
    if (m < n) {
        throw std::invalid_argument("invalid instance: " + std::to_string(m) +
                                    " houses cannot be assigned injectively to " +
                                    std::to_string(n) + " agents");
    }

    SolveTrace trace;
    std::vector<HouseIndex> remaining(m);
    std::iota(remaining.begin(), remaining.end(), HouseIndex{0});

    while (n <= remaining.size()) {
        SolveIteration& it = trace.iterations.emplace_back();
        it.remaining = remaining;

        const BipartiteGraph graph = top_choice_graph(profile, remaining);
        const Matching matching = maximum_matching(graph);
        if (is_saturating(matching, graph)) {
            it.saturating = true;
            Assignment a;
            a.houses.resize(n);
            for (const auto& [agent, house] : matching.pairs()) a.houses[agent] = house;
            trace.assignment = std::move(a);
            return trace;
        }

        HallViolator violator = minimal_hall_violator(graph, matching);
        it.removed = violator.neighborhood;
        it.violator = std::move(violator);
        std::erase_if(remaining, [&](HouseIndex h) {
            return std::binary_search(it.removed.begin(), it.removed.end(), h);
        });
    }
    return trace;
}

bool verify_envy_free(const PreferenceProfile& profile, const Assignment& assignment) {
    const auto& houses = assignment.houses;
    if (houses.size() != profile.n_agents()) {
        throw std::invalid_argument("assignment does not cover every agent");
    }
    for (HouseIndex h : houses) {
        if (h >= profile.n_houses()) throw std::out_of_range("assigned house out of range");
        if (std::count(houses.begin(), houses.end(), h) != 1) {
            throw std::invalid_argument("house " + std::to_string(h + 1) + " assigned twice");
        }
    }
    for (AgentIndex i = 0; i < houses.size(); ++i) {
        for (AgentIndex j = 0; j < houses.size(); ++j) {
            if (i != j && !weakly_prefers(profile, i, houses[i], houses[j])) return false;
        }
    }
    return true;
}

}  // namespace envyfree
