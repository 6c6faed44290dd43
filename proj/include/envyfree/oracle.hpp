#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "envyfree/bigraph.hpp"
#include "envyfree/prefs.hpp"
#include "envyfree/solver.hpp"

namespace envyfree::oracle {

// Brute-force reference implementations. Exponential by construction; every
// entry point refuses inputs above its guard instead of sampling.

/// Raised when an instance exceeds an oracle's enumeration guard.
class TooLarge : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Largest number of injections m!/(m-n)! the assignment oracles will scan.
inline constexpr std::uint64_t max_injections = 10'000'000;

/// Largest left side brute_force_hall_check accepts (2^|X| subsets).
inline constexpr std::size_t max_hall_left = 12;

/// Every envy-free assignment, in lexicographic order of the house vector.
std::vector<Assignment> enumerate_ef_assignments(const PreferenceProfile& profile);

/// True iff no envy-free assignment weakly improves every agent's rank and
/// strictly improves at least one.
bool is_pareto_among_ef(const PreferenceProfile& profile, const Assignment& candidate);

/// Every inclusion-minimal Hall violator of `graph`, as sorted vertex sets
/// listed by increasing bitmask.
std::vector<HallViolator> brute_force_hall_check(const BipartiteGraph& graph);

}  // namespace envyfree::oracle
