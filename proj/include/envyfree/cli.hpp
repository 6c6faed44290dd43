#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace envyfree::cli {

enum ExitCode : int {
    kFound = 0,         // success, or an envy-free assignment exists
    kNone = 1,          // proven nonexistence
    kUsage = 2,         // bad flags, unreadable or malformed input
    kDisagreement = 3,  // oracle run: solver and brute force differ
};

enum class Format { json, text };

inline constexpr std::uint64_t kDefaultSeed = 42;

struct SolveOptions {
    Format format = Format::json;
    bool trace = false;
    bool dump_aux = false;  // alternating digraph of each pruning step to `err`
};

struct SimulateOptions {
    std::size_t n = 0;
    std::vector<std::size_t> ms;
    std::uint64_t trials = 0;
    std::uint64_t seed = kDefaultSeed;
};

/// "3nlogn" expands to ceil(3 n ln n); anything else must be a positive
/// integer. Throws std::invalid_argument otherwise.
std::size_t parse_house_count(const std::string& expr, std::size_t n);

/// "a:b:step" -> a, a+step, ... <= b. Throws std::invalid_argument.
std::vector<std::size_t> parse_sweep(const std::string& spec);

int run_solve(const std::string& path, const SolveOptions& options, std::ostream& out,
              std::ostream& err);
int run_oracle(const std::string& path, std::ostream& out, std::ostream& err);
int run_simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err);

/// Full command line: `solve`, `simulate` or `oracle` subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace envyfree::cli
