#include "envyfree/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "envyfree/oracle.hpp"
#include "envyfree/randmodel.hpp"
#include "envyfree/report.hpp"
#include "envyfree/solver.hpp"

namespace envyfree::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::size_t parse_positive(const std::string& text, const std::string& what) {
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(text, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos == 0 || pos != text.size() || value == 0 || text.front() == '-') {
        throw std::invalid_argument(what + " must be a positive integer, got '" + text + "'");
    }
    return static_cast<std::size_t>(value);
}

PreferenceProfile load_profile(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return parse_profile(text);
    } catch (const ParseError& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

}  // namespace

std::size_t parse_house_count(const std::string& expr, std::size_t n) {
    if (expr == "3nlogn") {
        const double value = 3.0 * static_cast<double>(n) * std::log(static_cast<double>(n));
        return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(value)));
    }
    return parse_positive(expr, "--m");
}

std::vector<std::size_t> parse_sweep(const std::string& spec) {
    const auto first = spec.find(':');
    const auto second = first == std::string::npos ? first : spec.find(':', first + 1);
    if (second == std::string::npos) {
        throw std::invalid_argument("--sweep expects m1:m2:step, got '" + spec + "'");
    }
    const std::size_t lo = parse_positive(spec.substr(0, first), "sweep start");
    const std::size_t hi = parse_positive(spec.substr(first + 1, second - first - 1), "sweep end");
    const std::size_t step = parse_positive(spec.substr(second + 1), "sweep step");
    if (hi < lo) throw std::invalid_argument("sweep end below sweep start");
    std::vector<std::size_t> ms;
    for (std::size_t m = lo; m <= hi; m += step) ms.push_back(m);
    return ms;
}

int run_solve(const std::string& path, const SolveOptions& options, std::ostream& out,
              std::ostream& err) {
    const PreferenceProfile profile = load_profile(path);
    const SolveTrace trace = envy_free_assignment(profile);

    if (options.dump_aux) {
        for (std::size_t k = 0; k < trace.iterations.size(); ++k) {
            const auto& it = trace.iterations[k];
            if (it.saturating) continue;
            const BipartiteGraph graph = top_choice_graph(profile, it.remaining);
            err << "# alternating digraph, iteration " << k + 1 << '\n';
            dump_alternating_digraph(err, graph, maximum_matching(graph));
        }
    }

    if (options.format == Format::json) {
        out << to_json(trace).dump(2) << '\n';
    } else {
        write_text(out, trace, options.trace);
    }
    return trace.found() ? kFound : kNone;
}

int run_oracle(const std::string& path, std::ostream& out, std::ostream& /*err*/) {
    const PreferenceProfile profile = load_profile(path);
    const SolveTrace trace = envy_free_assignment(profile);
    const auto all = oracle::enumerate_ef_assignments(profile);

    bool agree = trace.found() == !all.empty();
    out << "solver: " << (trace.found() ? "found" : "none") << '\n';
    out << "oracle: " << all.size() << " envy-free assignment(s)\n";
    if (trace.found()) {
        const Assignment& a = *trace.assignment;
        const bool ef = verify_envy_free(profile, a);
        const bool member = std::binary_search(all.begin(), all.end(), a);
        const bool pareto = member && oracle::is_pareto_among_ef(profile, a);
        out << "envy-free: " << (ef ? "yes" : "no") << '\n';
        out << "in oracle set: " << (member ? "yes" : "no") << '\n';
        out << "pareto among envy-free: " << (pareto ? "yes" : "no") << '\n';
        agree = agree && ef && member && pareto;
    }
    out << "agreement: " << (agree ? "yes" : "no") << '\n';
    return agree ? kFound : kDisagreement;
}

int run_simulate(const SimulateOptions& options, std::ostream& out, std::ostream& /*err*/) {
    if (options.n == 0) throw std::invalid_argument("--n must be positive");
    if (options.trials == 0) throw std::invalid_argument("--trials must be positive");
    if (options.ms.empty()) throw std::invalid_argument("no house count given");
    for (std::size_t m : options.ms) {
        if (m < options.n) {
            throw std::invalid_argument("house count " + std::to_string(m) +
                                        " below agent count " + std::to_string(options.n));
        }
    }
    out << csv_header << '\n';
    for (std::size_t m : options.ms) {
        out << csv_row(estimate_existence_probability(options.n, m, options.trials, options.seed))
            << '\n';
    }
    return kFound;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Envy-free house allocation: solve, certify and simulate"};
    app.require_subcommand(1);

    std::string solve_path;
    std::string format = "json";
    SolveOptions solve_options;
    auto* solve = app.add_subcommand("solve", "Find an envy-free assignment or prove none exists");
    solve->add_option("file", solve_path, "Instance file")->required();
    solve->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    solve->add_flag("--trace", solve_options.trace, "Print the pruning trace in text output");
    solve->add_flag("--dump-aux", solve_options.dump_aux,
                    "Dump the alternating digraph of each pruning step to stderr");

    std::string oracle_path;
    auto* certify = app.add_subcommand("oracle", "Cross-check the solver by brute force");
    certify->add_option("file", oracle_path, "Instance file")->required();

    SimulateOptions sim;
    std::string n_text;
    std::string m_expr;
    std::string trials_text;
    std::string sweep;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo existence estimate");
    simulate->add_option("--n", n_text, "Number of agents")->required();
    auto* m_opt = simulate->add_option("--m", m_expr, "Number of houses, or 3nlogn");
    simulate->add_option("--trials", trials_text, "Trials per configuration")->required();
    simulate->add_option("--seed", sim.seed, "Master seed")->capture_default_str();
    auto* sweep_opt = simulate->add_option("--sweep", sweep, "House counts m1:m2:step");
    m_opt->excludes(sweep_opt);

    std::vector<const char*> argv;
    argv.push_back("envyfree");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kFound;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (solve->parsed()) {
            solve_options.format = format == "text" ? Format::text : Format::json;
            return run_solve(solve_path, solve_options, out, err);
        }
        if (certify->parsed()) return run_oracle(oracle_path, out, err);

        sim.n = parse_positive(n_text, "--n");
        sim.trials = parse_positive(trials_text, "--trials");
        if (!sweep.empty()) {
            sim.ms = parse_sweep(sweep);
        } else if (!m_expr.empty()) {
            sim.ms = {parse_house_count(m_expr, sim.n)};
        } else {
            throw std::invalid_argument("simulate needs --m or --sweep");
        }
        return run_simulate(sim, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace envyfree::cli
