#include "envyfree/prefs.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <optional>
#include <sstream>

namespace envyfree {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

PreferenceProfile::PreferenceProfile(std::size_t n_agents, std::size_t n_houses,
                                     std::vector<Rank> ranks)
    : n_agents_(n_agents), n_houses_(n_houses), ranks_(std::move(ranks)) {
    if (n_agents_ == 0 || n_houses_ == 0) {
        throw std::invalid_argument("profile needs at least one agent and one house");
    }
    if (ranks_.size() != n_agents_ * n_houses_) {
        throw std::invalid_argument("rank matrix has wrong size");
    }
    for (Rank r : ranks_) {
        if (r < 1 || r > n_houses_) {
            throw std::invalid_argument("rank value out of range: " + std::to_string(r));
        }
    }
}

Rank PreferenceProfile::rank(AgentIndex agent, HouseIndex house) const {
    if (agent >= n_agents_ || house >= n_houses_) {
        throw std::out_of_range("agent or house index out of range");
    }
    return ranks_[agent * n_houses_ + house];
}

std::span<const Rank> PreferenceProfile::ranks_of(AgentIndex agent) const {
    if (agent >= n_agents_) {
        throw std::out_of_range("agent index out of range");
    }
    return std::span<const Rank>(ranks_).subspan(agent * n_houses_, n_houses_);
}

namespace {

struct Line {
    std::size_t number;
    std::string_view text;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty()) {
        const auto end = text.find('\n');
        std::string_view raw = text.substr(0, end);
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
        ++number;
        raw = trim(raw);
        if (raw.empty() || raw.front() == '#') continue;
        lines.push_back({number, raw});
    }
    return lines;
}

// Reads an unsigned integer at the front of `s`, skipping leading blanks.
std::optional<std::size_t> read_number(std::string_view& s) {
    s = trim(s);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr == s.data()) return std::nullopt;
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    return value;
}

std::vector<Rank> parse_ranking(const Line& line, std::size_t n_houses) {
    constexpr Rank unset = 0;
    std::vector<Rank> ranks(n_houses, unset);
    std::string_view rest = line.text;
    std::size_t position = 0;  // houses placed so far
    Rank group_rank = 1;
    while (true) {
        const auto house = read_number(rest);
        if (!house) {
            throw ParseError(line.number, "expected a house id in '" + std::string(line.text) + "'");
        }
        if (*house < 1 || *house > n_houses) {
            throw ParseError(line.number, "house id " + std::to_string(*house) +
                                              " outside 1.." + std::to_string(n_houses));
        }
        if (ranks[*house - 1] != unset) {
            throw ParseError(line.number, "house " + std::to_string(*house) + " listed twice");
        }
        ranks[*house - 1] = group_rank;
        ++position;

        rest = trim(rest);
        if (rest.empty()) break;
        const char sep = rest.front();
        rest.remove_prefix(1);
        if (sep == '>') {
            group_rank = position + 1;
        } else if (sep != '=') {
            throw ParseError(line.number, std::string("unexpected character '") + sep + "'");
        }
    }
    if (position != n_houses) {
        const auto missing = std::find(ranks.begin(), ranks.end(), unset) - ranks.begin();
        throw ParseError(line.number, "house " + std::to_string(missing + 1) + " missing from ranking");
    }
    return ranks;
}

}  // namespace

PreferenceProfile parse_profile(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty()) {
        throw ParseError(1, "empty instance; expected '<n> <m>' header");
    }

    const Line& header = lines.front();
    std::string_view rest = header.text;
    const auto n = read_number(rest);
    const auto m = read_number(rest);
    if (!n || !m || !trim(rest).empty()) {
        throw ParseError(header.number, "header must be two positive integers '<n> <m>'");
    }
    if (*n == 0 || *m == 0) {
        throw ParseError(header.number, "agent and house counts must be positive");
    }

    const std::size_t given = lines.size() - 1;
    if (given < *n) {
        const std::size_t last = lines.back().number;
        throw ParseError(last, "expected " + std::to_string(*n) + " ranking lines, found " +
                                   std::to_string(given));
    }
    if (given > *n) {
        throw ParseError(lines[*n + 1].number,
                         "unexpected ranking line beyond the " + std::to_string(*n) + " agents");
    }

    std::vector<Rank> ranks;
    ranks.reserve(*n * *m);
    for (std::size_t i = 0; i < *n; ++i) {
        const auto row = parse_ranking(lines[i + 1], *m);
        ranks.insert(ranks.end(), row.begin(), row.end());
    }
    return PreferenceProfile(*n, *m, std::move(ranks));
}

std::string to_instance_text(const PreferenceProfile& profile) {
    std::ostringstream out;
    out << profile.n_agents() << ' ' << profile.n_houses() << '\n';
    std::vector<HouseIndex> order(profile.n_houses());
    for (AgentIndex i = 0; i < profile.n_agents(); ++i) {
        const auto ranks = profile.ranks_of(i);
        for (HouseIndex h = 0; h < order.size(); ++h) order[h] = h;
        std::stable_sort(order.begin(), order.end(),
                         [&](HouseIndex a, HouseIndex b) { return ranks[a] < ranks[b]; });
        for (std::size_t k = 0; k < order.size(); ++k) {
            if (k > 0) out << (ranks[order[k]] == ranks[order[k - 1]] ? " = " : " > ");
            out << order[k] + 1;
        }
        out << '\n';
    }
    return out.str();
}

std::vector<HouseIndex> top_choices(const PreferenceProfile& profile, AgentIndex agent,
                                    std::span<const HouseIndex> available) {
    if (available.empty()) {
        throw std::invalid_argument("top_choices: available house set is empty");
    }
    const auto ranks = profile.ranks_of(agent);
    Rank best = std::numeric_limits<Rank>::max();
    for (HouseIndex h : available) {
        if (h >= profile.n_houses()) throw std::out_of_range("house index out of range");
        best = std::min(best, ranks[h]);
    }
    std::vector<HouseIndex> tops;
    for (HouseIndex h : available) {
        if (ranks[h] == best) tops.push_back(h);
    }
    std::sort(tops.begin(), tops.end());
    tops.erase(std::unique(tops.begin(), tops.end()), tops.end());
    return tops;
}

bool weakly_prefers(const PreferenceProfile& profile, AgentIndex agent, HouseIndex h1,
                    HouseIndex h2) {
    return profile.rank(agent, h1) <= profile.rank(agent, h2);
}

}  // namespace envyfree
