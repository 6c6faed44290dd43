#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace envyfree {

/// Bipartite graph with left vertices 0..n_left-1 and right vertices
/// 0..n_right-1. Adjacency lists are kept sorted and free of duplicates.
class BipartiteGraph {
public:
    BipartiteGraph(std::size_t n_left, std::size_t n_right);
    BipartiteGraph(std::size_t n_left, std::size_t n_right,
                   std::vector<std::vector<std::size_t>> adjacency);

    void add_edge(std::size_t left, std::size_t right);
    bool has_edge(std::size_t left, std::size_t right) const;

    std::size_t n_left() const noexcept { return adjacency_.size(); }
    std::size_t n_right() const noexcept { return n_right_; }
    std::span<const std::size_t> neighbors(std::size_t left) const;

private:
    std::size_t n_right_;
    std::vector<std::vector<std::size_t>> adjacency_;
};

/// A set of vertex-disjoint edges of some BipartiteGraph, stored as mate
/// arrays for both sides.
class Matching {
public:
    Matching(std::size_t n_left, std::size_t n_right);

    /// Adds (left, right). Both endpoints must be free.
    void match(std::size_t left, std::size_t right);

    std::optional<std::size_t> mate_of_left(std::size_t left) const;
    std::optional<std::size_t> mate_of_right(std::size_t right) const;
    std::size_t size() const noexcept { return size_; }

    /// Matched pairs ordered by left vertex.
    std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

    /// True iff every pair is an edge of `graph` and the sizes agree.
    bool valid_for(const BipartiteGraph& graph) const;

    friend bool operator==(const Matching&, const Matching&) = default;

private:
    friend Matching maximum_matching(const BipartiteGraph& graph);

    static constexpr std::size_t free_ = static_cast<std::size_t>(-1);
    std::vector<std::size_t> left_mate_;
    std::vector<std::size_t> right_mate_;
    std::size_t size_ = 0;
};

/// Inclusion-minimal left set Z with |Z| > |S(Z)|, together with S(Z).
struct HallViolator {
    std::vector<std::size_t> vertices;      // Z, sorted
    std::vector<std::size_t> neighborhood;  // S(Z), sorted
};

/// S(subset): right vertices adjacent to at least one vertex of `subset`.
std::vector<std::size_t> neighborhood(const BipartiteGraph& graph,
                                      std::span<const std::size_t> subset);

/// Maximum-cardinality matching by repeated augmenting-path search. Left
/// vertices are tried in increasing order and neighbors in increasing order,
/// so the result is a deterministic function of the graph.
Matching maximum_matching(const BipartiteGraph& graph);

/// True iff every left vertex is matched.
bool is_saturating(const Matching& matching, const BipartiteGraph& graph);

/// Extracts a minimal Hall violator from a maximum, non-saturating matching.
///
/// Builds the alternating digraph (left -> right along every edge, right ->
/// left along matched edges), seeds it at the lowest-indexed unmatched left
/// vertex and returns the left vertices reachable from the seed. Because the
/// matching is maximum, every reachable right vertex is matched, which gives
/// |Z| = |S(Z)| + 1 and minimality.
///
/// Throws std::invalid_argument if `matching` saturates the left side.
/// Maximality of `matching` is the caller's responsibility and is not checked.
HallViolator minimal_hall_violator(const BipartiteGraph& graph, const Matching& matching);

/// Writes the alternating digraph as adjacency lists, one vertex per line
/// (`x<i> -> y<j> ...` and `y<j> -> x<i>`), with 1-based ids.
void dump_alternating_digraph(std::ostream& out, const BipartiteGraph& graph,
                              const Matching& matching);

}  // namespace envyfree
