#include "envyfree/report.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace envyfree {

namespace {

std::vector<std::size_t> one_based(const std::vector<std::size_t>& ids) {
    std::vector<std::size_t> out(ids);
    for (auto& id : out) ++id;
    return out;
}

void write_ids(std::ostream& out, const std::vector<std::size_t>& ids) {
    out << '{';
    for (std::size_t k = 0; k < ids.size(); ++k) out << (k ? "," : "") << ids[k] + 1;
    out << '}';
}

}  // namespace

nlohmann::ordered_json to_json(const SolveTrace& trace) {
    nlohmann::ordered_json result;
    result["status"] = trace.found() ? "found" : "none";
    if (trace.found()) {
        nlohmann::ordered_json assignment = nlohmann::ordered_json::object();
        const auto& houses = trace.assignment->houses;
        for (AgentIndex i = 0; i < houses.size(); ++i) {
            assignment[std::to_string(i + 1)] = houses[i] + 1;
        }
        result["assignment"] = std::move(assignment);
    } else {
        result["assignment"] = nullptr;
    }
    nlohmann::ordered_json iterations = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < trace.iterations.size(); ++k) {
        const SolveIteration& it = trace.iterations[k];
        nlohmann::ordered_json entry;
        entry["iteration"] = k + 1;
        entry["remaining"] = one_based(it.remaining);
        entry["saturating"] = it.saturating;
        if (it.violator) {
            entry["violator"] = one_based(it.violator->vertices);
        } else {
            entry["violator"] = nullptr;
        }
        entry["removed"] = one_based(it.removed);
        iterations.push_back(std::move(entry));
    }
    result["trace"] = std::move(iterations);
    return result;
}

Assignment assignment_from_json(const nlohmann::json& result, std::size_t n_agents) {
    const auto& object = result.at("assignment");
    if (!object.is_object()) throw std::invalid_argument("result has no assignment");
    Assignment a;
    a.houses.resize(n_agents);
    for (AgentIndex i = 0; i < n_agents; ++i) {
        const auto key = std::to_string(i + 1);
        if (!object.contains(key)) throw std::invalid_argument("assignment misses agent " + key);
        const auto house = object.at(key).get<std::size_t>();
        if (house == 0) throw std::invalid_argument("house ids are 1-based");
        a.houses[i] = house - 1;
    }
    return a;
}

void write_text(std::ostream& out, const SolveTrace& trace, bool with_trace) {
    out << "status: " << (trace.found() ? "found" : "none") << '\n';
    if (trace.found()) {
        const auto& houses = trace.assignment->houses;
        for (AgentIndex i = 0; i < houses.size(); ++i) {
            out << "agent " << i + 1 << " -> house " << houses[i] + 1 << '\n';
        }
    }
    if (!with_trace && trace.found()) return;
    for (std::size_t k = 0; k < trace.iterations.size(); ++k) {
        const SolveIteration& it = trace.iterations[k];
        out << "iteration " << k + 1 << ": remaining ";
        write_ids(out, it.remaining);
        if (it.saturating) {
            out << ", saturating matching found\n";
            continue;
        }
        out << ", violator agents ";
        write_ids(out, it.violator->vertices);
        out << ", removed houses ";
        write_ids(out, it.removed);
        out << '\n';
    }
    if (!trace.found()) {
        out << "fewer houses than agents remain; no envy-free assignment exists\n";
    }
}

std::string csv_row(const MonteCarloStats& stats) {
    char fraction[32];
    std::snprintf(fraction, sizeof fraction, "%.6f", stats.success_fraction());
    return std::to_string(stats.n_agents) + ',' + std::to_string(stats.n_houses) + ',' +
           std::to_string(stats.trials) + ',' + std::to_string(stats.successes) + ',' +
           std::to_string(stats.mechanism_successes) + ',' + fraction + ',' +
           std::to_string(stats.seed);
}

}  // namespace envyfree
