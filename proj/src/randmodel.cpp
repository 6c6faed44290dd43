#include "envyfree/randmodel.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace envyfree {

UtilityMatrix::UtilityMatrix(std::size_t n_agents, std::size_t n_houses, std::vector<double> values)
    : n_agents_(n_agents), n_houses_(n_houses), values_(std::move(values)) {
    if (n_agents_ == 0 || n_houses_ == 0) {
        throw std::invalid_argument("utility matrix needs at least one agent and one house");
    }
    if (values_.size() != n_agents_ * n_houses_) {
        throw std::invalid_argument("utility matrix has wrong size");
    }
    for (double u : values_) {
        if (!(u >= 0.0 && u <= 1.0)) throw std::invalid_argument("utility outside [0, 1]");
    }
}

UtilityMatrix sample_utilities(std::size_t n, std::size_t m, Rng& rng) {
    std::vector<double> values(n * m);
    for (double& u : values) u = uniform_unit(rng);
    return UtilityMatrix(n, m, std::move(values));
}

PreferenceProfile sample_strict_profile(std::size_t n, std::size_t m, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Rank> ranks(n * m);
    std::vector<HouseIndex> order(m);
    for (std::size_t i = 0; i < n; ++i) {
        std::iota(order.begin(), order.end(), HouseIndex{0});
        // Fisher-Yates; order[k] becomes the house in position k.
        for (std::size_t k = m; k > 1; --k) {
            std::swap(order[k - 1], order[uniform_below(rng, k)]);
        }
        for (std::size_t k = 0; k < m; ++k) ranks[i * m + order[k]] = k + 1;
    }
    return PreferenceProfile(n, m, std::move(ranks));
}

PreferenceProfile utilities_to_profile(const UtilityMatrix& utilities) {
    const std::size_t n = utilities.n_agents();
    const std::size_t m = utilities.n_houses();
    std::vector<Rank> ranks(n * m);
    std::vector<HouseIndex> order(m);
    for (AgentIndex i = 0; i < n; ++i) {
        std::iota(order.begin(), order.end(), HouseIndex{0});
        std::stable_sort(order.begin(), order.end(), [&](HouseIndex a, HouseIndex b) {
            return utilities(i, a) > utilities(i, b);
        });
        for (std::size_t k = 0; k < m; ++k) ranks[i * m + order[k]] = k + 1;
    }
    return PreferenceProfile(n, m, std::move(ranks));
}

std::optional<AgentIndex> qualifying_agent(const UtilityMatrix& utilities, HouseIndex house) {
    const std::size_t n = utilities.n_agents();
    const double threshold = 1.0 - 1.0 / static_cast<double>(n);
    std::optional<AgentIndex> winner;
    for (AgentIndex i = 0; i < n; ++i) {
        if (utilities(i, house) >= threshold) {
            if (winner) return std::nullopt;
            winner = i;
        }
    }
    return winner;
}

std::optional<Assignment> threshold_mechanism(const UtilityMatrix& utilities) {
    const std::size_t n = utilities.n_agents();
    constexpr HouseIndex none = static_cast<HouseIndex>(-1);
    std::vector<HouseIndex> houses(n, none);
    std::size_t served = 0;
    for (HouseIndex h = 0; h < utilities.n_houses() && served < n; ++h) {
        const auto agent = qualifying_agent(utilities, h);
        if (agent && houses[*agent] == none) {
            houses[*agent] = h;
            ++served;
        }
    }
    if (served < n) return std::nullopt;
    return Assignment{std::move(houses)};
}

TrialOutcome run_trial(std::size_t n, std::size_t m, std::uint64_t seed, std::uint64_t index) {
    Rng rng(derive_seed(seed, index));
    const UtilityMatrix utilities = sample_utilities(n, m, rng);
    TrialOutcome out;
    out.exists = envy_free_assignment(utilities_to_profile(utilities)).found();
    out.mechanism = threshold_mechanism(utilities).has_value();
    return out;
}

MonteCarloStats estimate_existence_probability(std::size_t n, std::size_t m,
                                               std::uint64_t trials, std::uint64_t seed) {
    if (trials == 0) throw std::invalid_argument("trials must be at least 1");
    if (n == 0 || m < n) {
        throw std::invalid_argument("need 1 <= n <= m, got n=" + std::to_string(n) +
                                    " m=" + std::to_string(m));
    }
    MonteCarloStats stats{.n_agents = n, .n_houses = m, .trials = trials, .seed = seed};
    for (std::uint64_t t = 0; t < trials; ++t) {
        const TrialOutcome outcome = run_trial(n, m, seed, t);
        stats.successes += outcome.exists;
        stats.mechanism_successes += outcome.mechanism;
    }
    return stats;
}

}  // namespace envyfree
