// Acceptance suite: one PASS/FAIL line per criterion; nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "envyfree/cli.hpp"
#include "envyfree/oracle.hpp"
#include "envyfree/randmodel.hpp"
#include "envyfree/report.hpp"
#include "envyfree/solver.hpp"
#include "support/generators.hpp"

using namespace envyfree;

namespace {

// Reference success fraction for n = 20, m = 180, frozen from a pilot run of
// 20000 trials at seed 1000003 (20000 successes). The pilot is disjoint from
// the main run below (different master seed).
constexpr double kPilotFraction = 1.0;
constexpr double kPilotTrials = 20000;
constexpr std::uint64_t kMainSeed = 2024;

struct Result {
    bool pass;
    std::string detail;
};

int failures = 0;

void criterion(const char* id, const char* title, double limit_seconds,
               const std::function<Result()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Result r{false, ""};
    try {
        r = body();
    } catch (const std::exception& e) {
        r = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < limit_seconds;
    const bool pass = r.pass && in_time;
    if (!pass) ++failures;
    std::printf("[%s] %s %s: %s (%.3f s, limit %g s%s)\n", pass ? "PASS" : "FAIL", id, title,
                r.detail.c_str(), seconds, limit_seconds, in_time ? "" : ", TOO SLOW");
    std::fflush(stdout);
}

double sigma(double p, double trials) { return std::sqrt(p * (1.0 - p) / trials); }

// Solver and oracle agree on existence; found assignments are envy-free,
// in the oracle set and Pareto optimal among envy-free assignments.
struct Tally {
    std::size_t instances = 0;
    std::size_t found = 0;
    std::size_t disagreements = 0;
};

void check_against_oracle(const PreferenceProfile& p, Tally& tally, bool pareto) {
    ++tally.instances;
    const auto trace = envy_free_assignment(p);
    const auto all = oracle::enumerate_ef_assignments(p);
    bool ok = trace.found() == !all.empty();
    if (trace.found()) {
        ++tally.found;
        const Assignment& a = *trace.assignment;
        ok = ok && verify_envy_free(p, a) && std::binary_search(all.begin(), all.end(), a);
        if (pareto) ok = ok && oracle::is_pareto_among_ef(p, a);
    }
    if (!ok) ++tally.disagreements;
}

std::string tally_text(const Tally& t) {
    return std::to_string(t.instances) + " instances, " + std::to_string(t.found) +
           " with an envy-free assignment, " + std::to_string(t.disagreements) + " disagreements";
}

std::string solve_json(const std::string& path) {
    std::ostringstream out;
    std::ostringstream err;
    cli::run({"solve", path}, out, err);
    return out.str();
}

}  // namespace

int main() {
    criterion("C1", "golden example", 1e-3, [] {
        const auto p = parse_profile("2 3\n1 > 2 > 3\n1 > 3 > 2\n");
        const auto trace = envy_free_assignment(p);
        const bool exact = trace.found() && trace.assignment->houses == std::vector<HouseIndex>{1, 2};
        const auto all = oracle::enumerate_ef_assignments(p);
        const bool unique = all.size() == 1 && all.front().houses == std::vector<HouseIndex>{1, 2};
        return Result{exact && unique, std::string("solver ") + (exact ? "{1->2, 2->3}" : "wrong") +
                                           ", oracle " + std::to_string(all.size()) +
                                           " envy-free assignment(s)"};
    });

    criterion("C2", "exhaustive oracle equivalence (2x3, 3x4)", 60, [] {
        Tally small, large;
        testing::for_each_strict_profile(2, 3, [&](const auto& p) { check_against_oracle(p, small, true); });
        testing::for_each_strict_profile(3, 4, [&](const auto& p) { check_against_oracle(p, large, true); });
        const bool counts = small.instances == 36 && large.instances == 13824;
        return Result{counts && small.disagreements == 0 && large.disagreements == 0,
                      "n=2,m=3: " + tally_text(small) + "; n=3,m=4: " + tally_text(large)};
    });

    criterion("C3", "randomized oracle equivalence with ties", 60, [] {
        Tally a, b;
        std::size_t tied_profiles = 0;
        Rng rng(derive_seed(kMainSeed, 3));
        auto run = [&](std::size_t n, std::size_t m, Tally& t) {
            for (int k = 0; k < 1000; ++k) {
                const auto p = testing::random_weak_profile(n, m, rng);
                for (AgentIndex i = 0; i < n; ++i) {
                    auto r = p.ranks_of(i);
                    std::vector<Rank> sorted(r.begin(), r.end());
                    std::sort(sorted.begin(), sorted.end());
                    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
                        ++tied_profiles;
                        break;
                    }
                }
                check_against_oracle(p, t, true);
            }
        };
        run(3, 5, a);
        run(4, 6, b);
        return Result{a.disagreements == 0 && b.disagreements == 0 && tied_profiles > 0,
                      "n=3,m=5: " + tally_text(a) + "; n=4,m=6: " + tally_text(b) + "; " +
                          std::to_string(tied_profiles) + " profiles contain ties"};
    });

    criterion("C4", "minimal Hall violator certification", 30, [] {
        Rng rng(derive_seed(kMainSeed, 4));
        int graphs = 0;
        int bad = 0;
        while (graphs < 500) {
            const std::size_t nl = 1 + uniform_below(rng, 10);
            const std::size_t nr = uniform_below(rng, 11);
            const double density = 0.05 + 0.35 * uniform_unit(rng);
            const auto g = testing::random_graph(nl, nr, density, rng);
            const auto m = maximum_matching(g);
            if (is_saturating(m, g)) continue;
            ++graphs;
            const auto v = minimal_hall_violator(g, m);
            const auto listed = oracle::brute_force_hall_check(g);
            const bool tight = v.vertices.size() == v.neighborhood.size() + 1 &&
                               v.neighborhood == neighborhood(g, v.vertices);
            const bool minimal = testing::is_subset_minimal(g, v.vertices);
            const bool found = std::any_of(listed.begin(), listed.end(), [&](const HallViolator& w) {
                return w.vertices == v.vertices;
            });
            if (!(tight && minimal && found)) ++bad;
        }
        return Result{bad == 0, std::to_string(graphs) + " graphs, " + std::to_string(bad) + " failures"};
    });

    criterion("C5", "m = n rarity (n=20, m=20, 10^4 trials)", 60, [] {
        const auto s = estimate_existence_probability(20, 20, 10000, kMainSeed);
        return Result{s.successes == 0, std::to_string(s.successes) + " successes in " +
                                            std::to_string(s.trials) + " trials"};
    });

    criterion("C6", "high-probability existence at m = ceil(3 n ln n), n=20", 300, [] {
        const std::size_t n = 20;
        const std::size_t m = cli::parse_house_count("3nlogn", n);
        const std::uint64_t trials = 1000;
        const auto s = estimate_existence_probability(n, m, trials, kMainSeed);
        // A pilot of 20000/20000 gives sigma 0; the failure rate is floored at
        // the rule-of-three upper bound 3/pilot_trials.
        const double ref = std::min(kPilotFraction, 1.0 - 3.0 / kPilotTrials);
        const double tol = 3 * sigma(ref, static_cast<double>(trials));
        const bool near_pilot = std::abs(s.success_fraction() - kPilotFraction) <= tol;

        const double p = (1.0 / n) * std::pow(1.0 - 1.0 / n, static_cast<double>(n - 1));
        const double bound = n * std::pow(1.0 - p, static_cast<double>(m));
        const double failure = 1.0 - s.mechanism_fraction();
        const double bound_tol = 3 * sigma(std::min(bound, 1.0), static_cast<double>(trials));
        const bool under_bound = failure <= bound + bound_tol;

        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "m=%zu, success %.4f vs pilot %.4f (tol %.4f); mechanism failure %.4f <= "
                      "union bound %.4f + %.4f",
                      m, s.success_fraction(), kPilotFraction, tol, failure, bound, bound_tol);
        return Result{m == 180 && near_pilot && under_bound && s.mechanism_successes <= s.successes,
                      buf};
    });

    criterion("C7", "statistical monotonicity in m (n=10)", 120, [] {
        const std::size_t ms[] = {10, 20, 40, 80};
        std::vector<double> f;
        for (std::size_t m : ms) f.push_back(estimate_existence_probability(10, m, 500, kMainSeed).success_fraction());
        bool ok = true;
        std::string detail;
        for (std::size_t k = 0; k < f.size(); ++k) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%sm=%zu: %.3f", k ? ", " : "", ms[k], f[k]);
            detail += buf;
            if (k > 0) {
                const double tol = 3 * std::sqrt(sigma(f[k - 1], 500) * sigma(f[k - 1], 500) +
                                                 sigma(f[k], 500) * sigma(f[k], 500));
                ok = ok && f[k - 1] <= f[k] + tol;
            }
        }
        return Result{ok, detail};
    });

    criterion("C8", "determinism of solver JSON and simulate CSV", 60, [] {
        const auto dir = std::filesystem::temp_directory_path() / "envyfree_acceptance";
        std::filesystem::create_directories(dir);
        Rng rng(derive_seed(kMainSeed, 8));
        int compared = 0;
        bool same = true;
        for (int k = 0; k < 25; ++k) {
            const auto p = testing::random_weak_profile(3 + k % 4, 6 + k % 5, rng);
            const auto path = (dir / ("instance" + std::to_string(k) + ".txt")).string();
            std::ofstream(path) << to_instance_text(p);
            const auto first = solve_json(path);
            same = same && !first.empty() && first == solve_json(path);
            ++compared;
        }
        const std::vector<std::string> sim{"simulate", "--n", "8", "--sweep", "8:40:8",
                                           "--trials", "200", "--seed", "99"};
        std::ostringstream a, b, err;
        cli::run(sim, a, err);
        cli::run(sim, b, err);
        same = same && a.str() == b.str() && !a.str().empty();
        return Result{same, std::to_string(compared) + " solver outputs and 1 sweep CSV compared byte for byte"};
    });

    std::printf("%s: %d criterion(s) failed\n", failures ? "FAILED" : "OK", failures);
    return failures == 0 ? 0 : 1;
}
