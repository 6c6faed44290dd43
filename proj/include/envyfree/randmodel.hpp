#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "envyfree/prefs.hpp"
#include "envyfree/random.hpp"
#include "envyfree/solver.hpp"

namespace envyfree {

/// Cardinal utilities u(i, h) in [0, 1], row-major by agent.
class UtilityMatrix {
public:
    UtilityMatrix(std::size_t n_agents, std::size_t n_houses, std::vector<double> values);

    std::size_t n_agents() const noexcept { return n_agents_; }
    std::size_t n_houses() const noexcept { return n_houses_; }
    double operator()(AgentIndex agent, HouseIndex house) const {
        return values_[agent * n_houses_ + house];
    }

private:
    std::size_t n_agents_;
    std::size_t n_houses_;
    std::vector<double> values_;
};

/// i.i.d. uniform [0, 1) utilities, drawn agent by agent, house by house.
UtilityMatrix sample_utilities(std::size_t n, std::size_t m, Rng& rng);

/// Each agent ranks the houses by an independent uniform permutation.
PreferenceProfile sample_strict_profile(std::size_t n, std::size_t m, std::uint64_t seed);

/// Strict ranking by decreasing utility; equal utilities go to the lower house.
PreferenceProfile utilities_to_profile(const UtilityMatrix& utilities);

/// The agent `house` qualifies for: the only agent whose utility is at least
/// 1 - 1/n while every other agent's is strictly below it.
std::optional<AgentIndex> qualifying_agent(const UtilityMatrix& utilities, HouseIndex house);

/// Threshold mechanism: walks houses in increasing order and gives each house
/// to the agent it qualifies for, if that agent has nothing yet. Returns an
/// assignment only if every agent was served. Any such assignment is
/// envy-free, since owners value their house at least 1 - 1/n and every other
/// assigned house below that.
std::optional<Assignment> threshold_mechanism(const UtilityMatrix& utilities);

struct MonteCarloStats {
    std::size_t n_agents = 0;
    std::size_t n_houses = 0;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;            // solver found an envy-free assignment
    std::uint64_t mechanism_successes = 0;  // threshold mechanism served everyone
    std::uint64_t seed = 0;

    double success_fraction() const noexcept {
        return trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials);
    }
    double mechanism_fraction() const noexcept {
        return trials == 0 ? 0.0
                           : static_cast<double>(mechanism_successes) / static_cast<double>(trials);
    }

    friend bool operator==(const MonteCarloStats&, const MonteCarloStats&) = default;
};

/// Outcome of one random instance: trial `index` draws utilities from
/// derive_seed(seed, index), solves the induced profile and runs the
/// threshold mechanism on the same utilities.
struct TrialOutcome {
    bool exists = false;
    bool mechanism = false;
};
TrialOutcome run_trial(std::size_t n, std::size_t m, std::uint64_t seed, std::uint64_t index);

/// Runs `trials` independent trials and counts outcomes. Requires trials >= 1
/// and 1 <= n <= m.
MonteCarloStats estimate_existence_probability(std::size_t n, std::size_t m,
                                               std::uint64_t trials, std::uint64_t seed);

}  // namespace envyfree
