#pragma once

// Random and exhaustive instance generators shared by the test binaries.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "envyfree/bigraph.hpp"
#include "envyfree/prefs.hpp"
#include "envyfree/random.hpp"

namespace envyfree::testing {

inline std::vector<std::size_t> random_permutation(std::size_t m, Rng& rng) {
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t k = m; k > 1; --k) std::swap(order[k - 1], order[uniform_below(rng, k)]);
    return order;
}

/// Weak order per agent: a uniform permutation cut into tie groups, each gap
/// becoming '=' with probability `tie_probability`.
inline PreferenceProfile random_weak_profile(std::size_t n, std::size_t m, Rng& rng,
                                             double tie_probability = 0.35) {
    std::vector<Rank> ranks(n * m);
    for (std::size_t i = 0; i < n; ++i) {
        const auto order = random_permutation(m, rng);
        Rank group = 1;
        for (std::size_t k = 0; k < m; ++k) {
            if (k > 0 && uniform_unit(rng) >= tie_probability) group = k + 1;
            ranks[i * m + order[k]] = group;
        }
    }
    return PreferenceProfile(n, m, std::move(ranks));
}

inline BipartiteGraph random_graph(std::size_t n_left, std::size_t n_right, double density,
                                   Rng& rng) {
    BipartiteGraph g(n_left, n_right);
    for (std::size_t x = 0; x < n_left; ++x) {
        for (std::size_t y = 0; y < n_right; ++y) {
            if (uniform_unit(rng) < density) g.add_edge(x, y);
        }
    }
    return g;
}

/// Calls `visit` with every profile of n agents holding strict rankings over m
/// houses ((m!)^n profiles).
inline void for_each_strict_profile(std::size_t n, std::size_t m,
                                    const std::function<void(const PreferenceProfile&)>& visit) {
    std::vector<std::vector<Rank>> perms;
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    do {
        std::vector<Rank> row(m);
        for (std::size_t k = 0; k < m; ++k) row[order[k]] = k + 1;
        perms.push_back(row);
    } while (std::next_permutation(order.begin(), order.end()));

    std::vector<std::size_t> pick(n, 0);
    while (true) {
        std::vector<Rank> ranks;
        for (std::size_t i = 0; i < n; ++i) {
            ranks.insert(ranks.end(), perms[pick[i]].begin(), perms[pick[i]].end());
        }
        visit(PreferenceProfile(n, m, std::move(ranks)));
        std::size_t i = 0;
        while (i < n && ++pick[i] == perms.size()) pick[i++] = 0;
        if (i == n) break;
    }
}

/// Maximum matching size by exhaustive search over (left vertex, used right
/// set); independent of the augmenting-path code. Needs n_right <= 20.
inline std::size_t brute_force_matching_size(const BipartiteGraph& g) {
    std::vector<std::vector<int>> memo(g.n_left() + 1,
                                       std::vector<int>(std::size_t{1} << g.n_right(), -1));
    std::function<int(std::size_t, std::uint32_t)> best = [&](std::size_t x,
                                                              std::uint32_t used) -> int {
        if (x == g.n_left()) return 0;
        int& slot = memo[x][used];
        if (slot >= 0) return slot;
        int value = best(x + 1, used);
        for (std::size_t y : g.neighbors(x)) {
            if (!(used >> y & 1U)) value = std::max(value, 1 + best(x + 1, used | (1U << y)));
        }
        return slot = value;
    };
    return static_cast<std::size_t>(best(0, 0));
}

/// True iff some left subset violates Hall's condition (2^|X| scan).
inline bool has_hall_violation(const BipartiteGraph& g) {
    for (std::uint32_t mask = 1; mask < (1U << g.n_left()); ++mask) {
        std::vector<std::size_t> z;
        for (std::size_t x = 0; x < g.n_left(); ++x) {
            if (mask >> x & 1U) z.push_back(x);
        }
        if (z.size() > neighborhood(g, z).size()) return true;
    }
    return false;
}

/// True iff no proper nonempty subset of `z` is a Hall violator.
inline bool is_subset_minimal(const BipartiteGraph& g, const std::vector<std::size_t>& z) {
    const std::uint32_t full = (1U << z.size()) - 1;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        std::vector<std::size_t> sub;
        for (std::size_t k = 0; k < z.size(); ++k) {
            if (mask >> k & 1U) sub.push_back(z[k]);
        }
        if (sub.size() > neighborhood(g, sub).size()) return false;
    }
    return true;
}

/// Breadth-first search for an augmenting path; true if `m` is not maximum.
inline bool has_augmenting_path(const BipartiteGraph& g, const Matching& m) {
    std::vector<bool> seen_left(g.n_left(), false);
    std::vector<std::size_t> queue;
    for (std::size_t x = 0; x < g.n_left(); ++x) {
        if (!m.mate_of_left(x)) {
            seen_left[x] = true;
            queue.push_back(x);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (std::size_t y : g.neighbors(queue[head])) {
            const auto mate = m.mate_of_right(y);
            if (!mate) return true;
            if (!seen_left[*mate]) {
                seen_left[*mate] = true;
                queue.push_back(*mate);
            }
        }
    }
    return false;
}

}  // namespace envyfree::testing
