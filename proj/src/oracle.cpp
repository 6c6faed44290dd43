#include "envyfree/oracle.hpp"

#include <bit>
#include <string>

namespace envyfree::oracle {

namespace {

void check_injection_guard(const PreferenceProfile& profile) {
    const std::size_t n = profile.n_agents();
    const std::size_t m = profile.n_houses();
    if (m < n) throw std::invalid_argument("oracle needs at least as many houses as agents");
    std::uint64_t count = 1;
    for (std::size_t k = 0; k < n; ++k) {
        count *= m - k;
        if (count > max_injections) {
            throw TooLarge("instance too large for enumeration: more than " +
                           std::to_string(max_injections) + " injections");
        }
    }
}

// Extends a partial injection agent by agent, checking envy against the agents
// already placed so dead branches are cut early.
void extend(const PreferenceProfile& profile, std::vector<HouseIndex>& houses,
            std::vector<bool>& used, std::vector<Assignment>& out) {
    const std::size_t next = houses.size();
    if (next == profile.n_agents()) {
        out.push_back(Assignment{houses});
        return;
    }
    for (HouseIndex h = 0; h < profile.n_houses(); ++h) {
        if (used[h]) continue;
        bool ok = true;
        for (AgentIndex j = 0; j < next && ok; ++j) {
            ok = weakly_prefers(profile, j, houses[j], h) &&
                 weakly_prefers(profile, next, h, houses[j]);
        }
        if (!ok) continue;
        used[h] = true;
        houses.push_back(h);
        extend(profile, houses, used, out);
        houses.pop_back();
        used[h] = false;
    }
}

}  // namespace

std::vector<Assignment> enumerate_ef_assignments(const PreferenceProfile& profile) {
    check_injection_guard(profile);
    std::vector<Assignment> out;
    std::vector<HouseIndex> houses;
    std::vector<bool> used(profile.n_houses(), false);
    extend(profile, houses, used, out);
    return out;
}

bool is_pareto_among_ef(const PreferenceProfile& profile, const Assignment& candidate) {
    if (candidate.houses.size() != profile.n_agents()) {
        throw std::invalid_argument("candidate does not cover every agent");
    }
    for (const Assignment& other : enumerate_ef_assignments(profile)) {
        bool no_worse = true;
        bool some_better = false;
        for (AgentIndex i = 0; i < profile.n_agents(); ++i) {
            const Rank mine = profile.rank(i, candidate.houses[i]);
            const Rank theirs = profile.rank(i, other.houses[i]);
            no_worse = no_worse && theirs <= mine;
            some_better = some_better || theirs < mine;
        }
        if (no_worse && some_better) return false;
    }
    return true;
}

std::vector<HallViolator> brute_force_hall_check(const BipartiteGraph& graph) {
    const std::size_t k = graph.n_left();
    if (k > max_hall_left) {
        throw TooLarge("Hall check limited to " + std::to_string(max_hall_left) +
                       " left vertices, got " + std::to_string(k));
    }
    const std::uint32_t full = (std::uint32_t{1} << k);

    // Right side as 64-bit masks when it fits; otherwise S(Z) is rebuilt per subset.
    const bool fits = graph.n_right() <= 64;
    std::vector<std::uint64_t> row_mask(k, 0);
    if (fits) {
        for (std::size_t x = 0; x < k; ++x) {
            for (std::size_t y : graph.neighbors(x)) row_mask[x] |= std::uint64_t{1} << y;
        }
    }

    std::vector<bool> violator(full, false);
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        std::size_t s_size = 0;
        if (fits) {
            std::uint64_t s = 0;
            for (std::size_t x = 0; x < k; ++x) {
                if (mask >> x & 1U) s |= row_mask[x];
            }
            s_size = static_cast<std::size_t>(std::popcount(s));
        } else {
            std::vector<std::size_t> z;
            for (std::size_t x = 0; x < k; ++x) {
                if (mask >> x & 1U) z.push_back(x);
            }
            s_size = neighborhood(graph, z).size();
        }
        violator[mask] = static_cast<std::size_t>(std::popcount(mask)) > s_size;
    }

    std::vector<HallViolator> out;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        if (!violator[mask]) continue;
        bool minimal = true;
        for (std::uint32_t sub = (mask - 1) & mask; sub != 0 && minimal; sub = (sub - 1) & mask) {
            minimal = !violator[sub];
        }
        if (!minimal) continue;
        HallViolator v;
        for (std::size_t x = 0; x < k; ++x) {
            if (mask >> x & 1U) v.vertices.push_back(x);
        }
        v.neighborhood = neighborhood(graph, v.vertices);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace envyfree::oracle
