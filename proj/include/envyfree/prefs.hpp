#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace envyfree {

// Agents and houses are 0-based indices inside the library. Every text or
// JSON boundary (instance files, CLI output) uses 1-based ids.
using AgentIndex = std::size_t;
using HouseIndex = std::size_t;
using Rank = std::size_t;

/// Error raised by parse_profile; carries the 1-based line of the input
/// that could not be accepted.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Complete weak rankings of n agents over m houses.
///
/// Stored as a rank matrix: rank(i, h) is smaller for better houses and equal
/// for tied houses. Only the order induced by ranks is meaningful; values need
/// not be dense. Immutable after construction.
class PreferenceProfile {
public:
    /// `ranks` is row-major, n_agents rows of n_houses entries each, with all
    /// entries in [1, n_houses].
    PreferenceProfile(std::size_t n_agents, std::size_t n_houses,
                      std::vector<Rank> ranks);

    std::size_t n_agents() const noexcept { return n_agents_; }
    std::size_t n_houses() const noexcept { return n_houses_; }

    Rank rank(AgentIndex agent, HouseIndex house) const;
    std::span<const Rank> ranks_of(AgentIndex agent) const;

    friend bool operator==(const PreferenceProfile&,
                           const PreferenceProfile&) = default;

private:
    std::size_t n_agents_;
    std::size_t n_houses_;
    std::vector<Rank> ranks_;
};

/// Parses the instance text format:
///
///     <n> <m>
///     1 > 2 = 3 > 4        (one line per agent)
///
/// `>` separates strictly preferred groups, `=` joins tied houses. Blank
/// lines and lines starting with '#' are skipped. Tied houses receive the
/// rank of the first position of their group.
PreferenceProfile parse_profile(std::string_view text);

/// Inverse of parse_profile up to rank renumbering.
std::string to_instance_text(const PreferenceProfile& profile);

/// Houses of `available` that `agent` ranks best, in increasing index order.
/// `available` must be nonempty.
std::vector<HouseIndex> top_choices(const PreferenceProfile& profile,
                                    AgentIndex agent,
                                    std::span<const HouseIndex> available);

/// True iff `agent` likes h1 at least as much as h2.
bool weakly_prefers(const PreferenceProfile& profile, AgentIndex agent,
                    HouseIndex h1, HouseIndex h2);

}  // namespace envyfree
