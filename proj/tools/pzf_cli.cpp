// pzf: exact and Monte Carlo engines for probabilistic zero forcing.
//
// Exit codes: 0 success, 2 configuration/input error, 3 cap or budget
// exceeded, 1 internal invariant violation.

#include "pzf/pzf.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using nlohmann::json;

namespace {

pzf::Graph load_graph(const std::string& spec, const std::string& format) {
    auto family = [&](const std::string& name, const std::string& arg) {
        int n = 0;
        try {
            n = std::stoi(arg);
        } catch (...) {
            throw pzf::parse_error("bad size in graph spec '" + spec + "'");
        }
        if (name == "path") return pzf::Graph::path(n);
        if (name == "cycle") return pzf::Graph::cycle(n);
        if (name == "star") return pzf::Graph::star(n);
        if (name == "complete") return pzf::Graph::complete(n);
        throw pzf::parse_error("unknown graph family '" + name + "'");
    };
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        std::string head = spec.substr(0, colon), rest = spec.substr(colon + 1);
        if (head == "g6") return pzf::Graph::from_graph6(rest);
        return family(head, rest);
    }
    std::ifstream file(spec);
    if (!file) throw pzf::parse_error("cannot open graph file '" + spec + "'");
    std::stringstream buf;
    buf << file.rdbuf();
    std::string text = buf.str();
    if (format == "graph6") return pzf::Graph::from_graph6(text);
    if (format == "edgelist") return pzf::Graph::from_edge_list(text);
    // auto-detect: an edge list line has two tokens
    std::istringstream first_line(text.substr(0, text.find('\n')));
    std::string a, b;
    if (first_line >> a >> b) return pzf::Graph::from_edge_list(text);
    return pzf::Graph::from_graph6(text);
}

pzf::VertexSet parse_vertex_set(const pzf::Graph& g, const std::string& spec) {
    pzf::VertexSet set(g.order());
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        auto idx = g.index_of(token);
        if (!idx) {
            try {
                std::size_t pos = 0;
                int v = std::stoi(token, &pos);
                if (pos == token.size() && v >= 0 && v < g.order()) idx = v;
            } catch (...) {
            }
        }
        if (!idx) throw pzf::parse_error("unknown vertex '" + token + "'");
        set.set(*idx);
    }
    return set;
}

pzf::Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return pzf::Rational(pzf::BigInt(text));
        return pzf::Rational(pzf::BigInt(text.substr(0, slash)),
                             pzf::BigInt(text.substr(slash + 1)));
    } catch (...) {
        throw pzf::parse_error("bad rational '" + text + "' (expected num or num/den)");
    }
}

int default_workers() {
    if (const char* env = std::getenv("PZF_WORKERS")) {
        try {
            return std::max(1, std::stoi(env));
        } catch (...) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<std::string> labels_of(const pzf::Graph& g, const pzf::VertexSet& set) {
    std::vector<std::string> out;
    set.for_each([&](int v) { out.push_back(g.label(v)); });
    return out;
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += ",";
        out += p;
    }
    return out;
}

json rational_json(const pzf::Rational& r) {
    return json{{"num", pzf::num_str(r)}, {"den", pzf::den_str(r)}, {"float", pzf::to_double(r)}};
}

std::string pretty(const pzf::Rational& r) {
    std::ostringstream out;
    out << pzf::to_string(r) << " (" << pzf::to_double(r) << ")";
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Probabilistic zero forcing: exact engine and Monte Carlo estimator"};
    app.require_subcommand(1);

    std::string graph_spec, format = "auto";
    bool json_mode = false;
    int workers = default_workers();
    app.add_option("--graph", graph_spec,
                   "Graph: file path, g6:<string>, or path:n|cycle:n|star:m|complete:n")
        ->required();
    app.add_option("--format", format, "Force input format: edgelist|graph6")
        ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
    app.add_flag("--json", json_mode, "Machine-readable JSON output");
    app.add_option("--workers", workers, "Worker threads for parallel engines");

    std::string seed_set_spec, mc_set_spec, epsilon_spec = "1/1000000";
    int j = 1, dump_k = -1, max_k = 200, round_cap = 1000, tail = 0;
    std::uint64_t trials = 100000, master_seed = 0;
    bool emit_dot = false;

    auto* zf = app.add_subcommand("zf", "Zero forcing number Z(G) and a minimum witness");
    auto* closure = app.add_subcommand("closure", "Classical color change closure of a black set");
    closure->add_option("--seed", seed_set_spec, "Initial black set (labels or indices)")->required();
    auto* pzf_cmd = app.add_subcommand("pzf", "Exact P_A(G): k0 and the T^k0 mass");
    pzf_cmd->add_option("--seed", seed_set_spec, "Initial black set")->required();
    pzf_cmd->add_option("--tail", tail, "Also report P^(k)(T^k) for k0..k0+tail (diagnostic)");
    auto* pj = app.add_subcommand("pj", "P_(j)(G): best seeds of size j");
    pj->add_option("--j", j, "Seed cardinality")->required();
    auto* spaces = app.add_subcommand("spaces", "Layer dump of the sample spaces S^0..S^k");
    spaces->add_option("--seed", seed_set_spec, "Initial black set")->required();
    spaces->add_option("--k", dump_k, "Last layer to dump")->required();
    auto* chain = app.add_subcommand("chain", "Reachable-state Markov chain and absorption analysis");
    chain->add_option("--seed", seed_set_spec, "Initial black set")->required();
    chain->add_option("--epsilon", epsilon_spec, "Confirmation threshold (rational, default 1/1000000)");
    chain->add_option("--max-k", max_k, "Iteration cutoff for limit confirmation");
    chain->add_flag("--dot", emit_dot, "Emit the state digraph as DOT with exact edge labels");
    auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of P_A(G)");
    mc->add_option("--set", mc_set_spec, "Initial black set (labels or indices)")->required();
    mc->add_option("--trials", trials, "Number of trajectories");
    mc->add_option("--seed", master_seed, "RNG master seed")->required();
    auto* mc_absorb = app.add_subcommand("mc-absorb", "Monte Carlo absorption-time estimate");
    mc_absorb->add_option("--set", mc_set_spec, "Initial black set")->required();
    mc_absorb->add_option("--trials", trials, "Number of trajectories");
    mc_absorb->add_option("--seed", master_seed, "RNG master seed")->required();
    mc_absorb->add_option("--round-cap", round_cap, "Maximum rounds per trajectory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        pzf::Graph g = load_graph(graph_spec, format);

        if (zf->parsed()) {
            auto result = pzf::zero_forcing_number(g);
            if (json_mode) {
                std::cout << json{{"graph", g.to_graph6()},
                                  {"z", result.number},
                                  {"witness", labels_of(g, result.witness)}}
                          << "\n";
            } else {
                std::cout << "Z(G) = " << result.number
                          << "  witness = {" << join(labels_of(g, result.witness)) << "}\n";
            }
        } else if (closure->parsed()) {
            pzf::VertexSet seed = parse_vertex_set(g, seed_set_spec);
            auto result = pzf::ccr_closure(g, seed);
            if (json_mode) {
                json forces = json::array();
                for (auto [u, v] : result.forcing_sequence)
                    forces.push_back({{"forcer", g.label(u)}, {"forced", g.label(v)}});
                std::cout << json{{"graph", g.to_graph6()},
                                  {"seed", labels_of(g, seed)},
                                  {"final_black", labels_of(g, result.final_black)},
                                  {"is_zfs", result.final_black.all()},
                                  {"forces", forces}}
                          << "\n";
            } else {
                std::cout << "final black = {" << join(labels_of(g, result.final_black)) << "}\n";
                for (auto [u, v] : result.forcing_sequence)
                    std::cout << "  " << g.label(u) << " -> " << g.label(v) << "\n";
                std::cout << (result.final_black.all() ? "zero forcing set\n"
                                                       : "not a zero forcing set\n");
            }
        } else if (pzf_cmd->parsed()) {
            pzf::VertexSet seed = parse_vertex_set(g, seed_set_spec);
            auto outcome = pzf::p_A(g, seed);
            if (json_mode) {
                json states = json::array();
                for (const auto& [state, mass] : outcome.t_k0_states)
                    states.push_back({{"state", state.to_hex()},
                                      {"num", pzf::num_str(mass)},
                                      {"den", pzf::den_str(mass)}});
                json out{{"graph", g.to_graph6()},
                         {"seed", labels_of(g, seed)},
                         {"k0", outcome.k0},
                         {"p_A", rational_json(outcome.p_value)},
                         {"t_k0", states}};
                if (tail > 0) {
                    json diag = json::array();
                    for (auto& [k, mass] : pzf::t_mass_sequence(g, seed, tail))
                        diag.push_back({{"k", k}, {"num", pzf::num_str(mass)},
                                        {"den", pzf::den_str(mass)}});
                    out["t_mass_tail"] = diag;
                }
                std::cout << out << "\n";
            } else {
                std::cout << "k0 = " << outcome.k0 << "\n";
                std::cout << "p_A = " << pretty(outcome.p_value) << "\n";
                if (tail > 0)
                    for (auto& [k, mass] : pzf::t_mass_sequence(g, seed, tail))
                        std::cout << "  P^(" << k << ")(T^" << k << ") = " << pretty(mass) << "\n";
            }
        } else if (pj->parsed()) {
            auto report = pzf::p_j(g, j, workers);
            if (json_mode) {
                json seeds = json::array();
                for (const auto& s : report.argmax_seeds) seeds.push_back(labels_of(g, s));
                std::cout << json{{"graph", g.to_graph6()},
                                  {"j", report.j},
                                  {"p_j", rational_json(report.p_value)},
                                  {"argmax_seeds", seeds},
                                  {"evaluated", report.evaluated_count}}
                          << "\n";
            } else {
                std::cout << "P_(" << j << ") = " << pretty(report.p_value) << "\n";
                for (const auto& s : report.argmax_seeds)
                    std::cout << "  argmax {" << join(labels_of(g, s)) << "}\n";
            }
        } else if (spaces->parsed()) {
            pzf::VertexSet seed = parse_vertex_set(g, seed_set_spec);
            if (seed.empty()) throw pzf::parse_error("seed must be nonempty");
            pzf::LayeredSpace space(g, seed);
            space.expand_to(dump_k);
            // JSON lines, one record per state per layer
            for (int k = 0; k <= dump_k; ++k)
                for (const auto& [state, mass] : space.layer(k))
                    std::cout << json{{"k", k},
                                      {"state_bits_hex", state.to_hex()},
                                      {"probability_num", pzf::num_str(mass)},
                                      {"probability_den", pzf::den_str(mass)}}
                              << "\n";
        } else if (chain->parsed()) {
            pzf::VertexSet seed = parse_vertex_set(g, seed_set_spec);
            auto ts = pzf::reachable_states(g, seed);
            if (emit_dot) {
                std::cout << "digraph chain {\n";
                for (std::size_t i = 0; i < ts.states.size(); ++i)
                    std::cout << "  s" << i << " [label=\"{" << join(labels_of(g, ts.states[i]))
                              << "}\"];\n";
                for (std::size_t i = 0; i < ts.states.size(); ++i)
                    for (const auto& [to, p] : ts.transitions[i])
                        std::cout << "  s" << i << " -> s" << to << " [label=\""
                                  << pzf::to_string(p) << "\"];\n";
                std::cout << "}\n";
                return 0;
            }
            auto report = pzf::absorption_analysis(ts, parse_rational(epsilon_spec), max_k);
            if (json_mode) {
                json steps = json::array();
                for (auto& [k, p] : report.step_probabilities)
                    steps.push_back({{"k", k}, {"num", pzf::num_str(p)}, {"den", pzf::den_str(p)}});
                std::cout << json{{"graph", g.to_graph6()},
                                  {"seed", labels_of(g, seed)},
                                  {"states", ts.states.size()},
                                  {"expected_steps", rational_json(report.expected_steps)},
                                  {"limit_confirmed", report.limit_confirmed},
                                  {"step_probabilities", steps}}
                          << "\n";
            } else {
                std::cout << "reachable states = " << ts.states.size() << "\n";
                std::cout << "expected absorption steps = " << pretty(report.expected_steps) << "\n";
                std::cout << "limit confirmed = " << (report.limit_confirmed ? "yes" : "no")
                          << " (after " << report.step_probabilities.size() - 1 << " rounds)\n";
            }
        } else if (mc->parsed()) {
            pzf::VertexSet set = parse_vertex_set(g, mc_set_spec);
            auto est = pzf::estimate_p_A(g, set, trials, master_seed, workers);
            if (json_mode) {
                std::cout << json{{"graph", g.to_graph6()},
                                  {"set", labels_of(g, set)},
                                  {"trials", est.trials},
                                  {"successes", est.successes},
                                  {"point", est.point},
                                  {"ci_low", est.ci_low},
                                  {"ci_high", est.ci_high},
                                  {"k0", est.k0},
                                  {"master_seed", est.master_seed}}
                          << "\n";
            } else {
                std::cout << "k0 = " << est.k0 << "\n";
                std::cout << "P_A estimate = " << est.point << "  [" << est.ci_low << ", "
                          << est.ci_high << "] 95% Wilson, " << est.successes << "/" << est.trials
                          << "\n";
            }
        } else if (mc_absorb->parsed()) {
            pzf::VertexSet set = parse_vertex_set(g, mc_set_spec);
            auto est = pzf::estimate_absorption_time(g, set, trials, master_seed, round_cap, workers);
            if (json_mode) {
                std::cout << json{{"graph", g.to_graph6()},
                                  {"set", labels_of(g, set)},
                                  {"trials", est.trials},
                                  {"mean_rounds", est.mean_rounds},
                                  {"std_rounds", est.std_rounds},
                                  {"histogram", est.histogram},
                                  {"capped", est.capped},
                                  {"round_cap", est.round_cap},
                                  {"master_seed", est.master_seed}}
                          << "\n";
            } else {
                std::cout << "mean rounds = " << est.mean_rounds << "  std = " << est.std_rounds
                          << "  capped = " << est.capped << "/" << est.trials << "\n";
            }
        }
        return 0;
    } catch (const pzf::cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const pzf::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
