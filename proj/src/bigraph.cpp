#include "envyfree/bigraph.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

namespace envyfree {

BipartiteGraph::BipartiteGraph(std::size_t n_left, std::size_t n_right)
    : n_right_(n_right), adjacency_(n_left) {}

BipartiteGraph::BipartiteGraph(std::size_t n_left, std::size_t n_right,
                               std::vector<std::vector<std::size_t>> adjacency)
    : BipartiteGraph(n_left, n_right) {
    if (adjacency.size() != n_left) {
        throw std::invalid_argument("adjacency has " + std::to_string(adjacency.size()) +
                                    " rows for " + std::to_string(n_left) + " left vertices");
    }
    for (std::size_t x = 0; x < n_left; ++x) {
        for (std::size_t y : adjacency[x]) add_edge(x, y);
    }
}

void BipartiteGraph::add_edge(std::size_t left, std::size_t right) {
    if (left >= adjacency_.size() || right >= n_right_) {
        throw std::out_of_range("edge (" + std::to_string(left) + ", " + std::to_string(right) +
                                ") out of range");
    }
    auto& row = adjacency_[left];
    const auto it = std::lower_bound(row.begin(), row.end(), right);
    if (it == row.end() || *it != right) row.insert(it, right);
}

bool BipartiteGraph::has_edge(std::size_t left, std::size_t right) const {
    const auto row = neighbors(left);
    return std::binary_search(row.begin(), row.end(), right);
}

std::span<const std::size_t> BipartiteGraph::neighbors(std::size_t left) const {
    if (left >= adjacency_.size()) throw std::out_of_range("left vertex out of range");
    return adjacency_[left];
}

Matching::Matching(std::size_t n_left, std::size_t n_right)
    : left_mate_(n_left, free_), right_mate_(n_right, free_) {}

void Matching::match(std::size_t left, std::size_t right) {
    if (left >= left_mate_.size() || right >= right_mate_.size()) {
        throw std::out_of_range("matched vertex out of range");
    }
    if (left_mate_[left] != free_ || right_mate_[right] != free_) {
        throw std::invalid_argument("vertex already matched");
    }
    left_mate_[left] = right;
    right_mate_[right] = left;
    ++size_;
}

std::optional<std::size_t> Matching::mate_of_left(std::size_t left) const {
    const std::size_t y = left_mate_.at(left);
    return y == free_ ? std::nullopt : std::optional<std::size_t>(y);
}

std::optional<std::size_t> Matching::mate_of_right(std::size_t right) const {
    const std::size_t x = right_mate_.at(right);
    return x == free_ ? std::nullopt : std::optional<std::size_t>(x);
}

std::vector<std::pair<std::size_t, std::size_t>> Matching::pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(size_);
    for (std::size_t x = 0; x < left_mate_.size(); ++x) {
        if (left_mate_[x] != free_) out.emplace_back(x, left_mate_[x]);
    }
    return out;
}

bool Matching::valid_for(const BipartiteGraph& graph) const {
    if (left_mate_.size() != graph.n_left() || right_mate_.size() != graph.n_right()) {
        return false;
    }
    std::size_t count = 0;
    for (std::size_t x = 0; x < left_mate_.size(); ++x) {
        const std::size_t y = left_mate_[x];
        if (y == free_) continue;
        if (right_mate_[y] != x || !graph.has_edge(x, y)) return false;
        ++count;
    }
    return count == size_;
}

std::vector<std::size_t> neighborhood(const BipartiteGraph& graph,
                                      std::span<const std::size_t> subset) {
    std::vector<bool> seen(graph.n_right(), false);
    for (std::size_t x : subset) {
        for (std::size_t y : graph.neighbors(x)) seen[y] = true;
    }
    std::vector<std::size_t> out;
    for (std::size_t y = 0; y < seen.size(); ++y) {
        if (seen[y]) out.push_back(y);
    }
    return out;
}

namespace {

// Iterative DFS for an augmenting path from the free left vertex `root`.
// On success flips the path and returns true.
bool augment_from(const BipartiteGraph& graph, std::size_t root,
                  std::vector<std::size_t>& left_mate, std::vector<std::size_t>& right_mate,
                  std::vector<bool>& visited_right, std::size_t free) {
    struct Frame {
        std::size_t left;
        std::size_t next;  // index into neighbors(left)
        std::size_t via;   // right vertex that led here
    };
    std::vector<Frame> stack{{root, 0, free}};
    while (!stack.empty()) {
        Frame& top = stack.back();
        const auto adj = graph.neighbors(top.left);
        if (top.next == adj.size()) {
            stack.pop_back();
            continue;
        }
        const std::size_t y = adj[top.next++];
        if (visited_right[y]) continue;
        visited_right[y] = true;
        if (right_mate[y] == free) {
            // Flip the path: each frame's left vertex takes the right vertex
            // it advanced to.
            std::size_t take = y;
            for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
                const std::size_t previous = it->via;
                left_mate[it->left] = take;
                right_mate[take] = it->left;
                take = previous;
            }
            return true;
        }
        stack.push_back({right_mate[y], 0, y});
    }
    return false;
}

}  // namespace

Matching maximum_matching(const BipartiteGraph& graph) {
    Matching m(graph.n_left(), graph.n_right());
    std::vector<bool> visited(graph.n_right());
    for (std::size_t x = 0; x < graph.n_left(); ++x) {
        std::fill(visited.begin(), visited.end(), false);
        if (augment_from(graph, x, m.left_mate_, m.right_mate_, visited, Matching::free_)) {
            ++m.size_;
        }
    }
    return m;
}

bool is_saturating(const Matching& matching, const BipartiteGraph& graph) {
    return matching.size() == graph.n_left();
}

HallViolator minimal_hall_violator(const BipartiteGraph& graph, const Matching& matching) {
    std::optional<std::size_t> seed;
    for (std::size_t x = 0; x < graph.n_left(); ++x) {
        if (!matching.mate_of_left(x)) {
            seed = x;
            break;
        }
    }
    if (!seed) {
        throw std::invalid_argument("minimal_hall_violator: matching saturates the left side");
    }

    std::vector<bool> in_z(graph.n_left(), false);
    std::vector<bool> in_s(graph.n_right(), false);
    std::vector<std::size_t> stack{*seed};
    in_z[*seed] = true;
    while (!stack.empty()) {
        const std::size_t x = stack.back();
        stack.pop_back();
        for (std::size_t y : graph.neighbors(x)) {
            if (in_s[y]) continue;
            in_s[y] = true;
            // An unmatched y here would be an augmenting path; with a maximum
            // matching every y reached has a mate.
            if (const auto back = matching.mate_of_right(y); back && !in_z[*back]) {
                in_z[*back] = true;
                stack.push_back(*back);
            }
        }
    }

    HallViolator v;
    for (std::size_t x = 0; x < in_z.size(); ++x) {
        if (in_z[x]) v.vertices.push_back(x);
    }
    for (std::size_t y = 0; y < in_s.size(); ++y) {
        if (in_s[y]) v.neighborhood.push_back(y);
    }
    return v;
}

void dump_alternating_digraph(std::ostream& out, const BipartiteGraph& graph,
                              const Matching& matching) {
    for (std::size_t x = 0; x < graph.n_left(); ++x) {
        out << 'x' << x + 1 << " ->";
        for (std::size_t y : graph.neighbors(x)) out << " y" << y + 1;
        out << '\n';
    }
    for (const auto& [x, y] : matching.pairs()) {
        out << 'y' << y + 1 << " -> x" << x + 1 << '\n';
    }
}

}  // namespace envyfree
