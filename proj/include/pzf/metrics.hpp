#pragma once

#include "pzf/classical.hpp"
#include "pzf/errors.hpp"
#include "pzf/graph.hpp"
#include "pzf/state_space.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <thread>
#include <utility>
#include <vector>

namespace pzf {

inline constexpr std::size_t default_state_budget = std::size_t{1} << 22;

namespace detail {

/// Successor supports of one state, probability-free: the sure forces are
/// in every successor, the fractional whites toggle freely.
inline std::vector<VertexSet> successor_supports(const Graph& g, const VertexSet& black) {
    VertexSet base = black;
    std::vector<int> fractional;
    for (int v = 0; v < g.order(); ++v) {
        if (black.test(v)) continue;
        Rational p = conversion_probability(g, black, v);
        if (p == 1)
            base.set(v);
        else if (p != 0)
            fractional.push_back(v);
    }
    if (fractional.size() >= 63) throw cap_exceeded("successor support too large");
    std::vector<VertexSet> out;
    out.reserve(std::size_t{1} << fractional.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << fractional.size()); ++mask) {
        VertexSet s = base;
        for (std::size_t i = 0; i < fractional.size(); ++i)
            if (mask >> i & 1) s.set(fractional[i]);
        out.push_back(s);
    }
    return out;
}

}  // namespace detail

/// Least k at which the step-k sample space holds a state whose black set
/// contains a classical zero forcing set. BFS over supports only, so it
/// carries no rationals and runs well past the exact-probability cap;
/// errors if the layer sets outgrow the state budget. Terminates because
/// some branch grows every round on a connected graph: k0 <= n - |A|.
inline int least_k_with_zfs(const Graph& g, const VertexSet& seed,
                            std::size_t state_budget = default_state_budget) {
    if (seed.empty()) throw parse_error("least_k_with_zfs: seed must be nonempty");
    std::set<VertexSet> layer{seed};
    for (int k = 0;; ++k) {
        for (const auto& s : layer)
            if (contains_zfs(g, s)) return k;
        std::set<VertexSet> next;
        for (const auto& s : layer) {
            for (auto& succ : detail::successor_supports(g, s)) next.insert(std::move(succ));
            if (next.size() > state_budget)
                throw cap_exceeded("least_k_with_zfs: state budget exceeded");
        }
        layer = std::move(next);
    }
}

struct PzfOutcome {
    VertexSet seed;
    int k0 = -1;       // -1 means undefined (empty seed)
    Rational p_value;  // P_A(G)
    std::vector<std::pair<VertexSet, Rational>> t_k0_states;  // T^{k0} with its P^(k0) mass
};

/// P_A(G) = P^(k0)(T^(k0)): expand the layered space to the first layer
/// holding a zero-forcing-containing state and sum that layer's mass over
/// such states. Empty seed yields 0 with k0 undefined.
inline PzfOutcome p_A(const Graph& g, const VertexSet& seed) {
    PzfOutcome outcome;
    outcome.seed = seed;
    if (seed.empty()) {
        outcome.p_value = 0;
        return outcome;
    }
    if (g.order() > exact_cap)
        throw cap_exceeded("p_A: graph order exceeds exact cap " + std::to_string(exact_cap));
    LayeredSpace space(g, seed);
    for (int k = 0;; ++k) {
        for (const auto& [state, mass] : space.layer(k)) {
            if (contains_zfs(g, state)) outcome.t_k0_states.emplace_back(state, mass);
        }
        if (!outcome.t_k0_states.empty()) {
            outcome.k0 = k;
            break;
        }
        space.expand();
    }
    outcome.p_value = 0;
    for (const auto& [state, mass] : outcome.t_k0_states) outcome.p_value += mass;
    return outcome;
}

/// Diagnostic tail: P^(k)(T^k) for k0 <= k <= k0 + extra. Exposes how the
/// literal step-k0 definition compares with later layers; not part of P_A.
inline std::vector<std::pair<int, Rational>> t_mass_sequence(const Graph& g, const VertexSet& seed,
                                                             int extra) {
    PzfOutcome base = p_A(g, seed);
    std::vector<std::pair<int, Rational>> sequence{{base.k0, base.p_value}};
    LayeredSpace space(g, seed);
    space.expand_to(base.k0 + extra);
    for (int k = base.k0 + 1; k <= base.k0 + extra; ++k) {
        Rational mass = 0;
        for (const auto& [state, p] : space.layer(k))
            if (contains_zfs(g, state)) mass += p;
        sequence.emplace_back(k, mass);
    }
    return sequence;
}

struct OptimumReport {
    int j = 0;
    Rational p_value;                    // P_(j)(G)
    std::vector<VertexSet> argmax_seeds; // all attaining seeds, lexicographic
    std::uint64_t evaluated_count = 0;
};

/// P_(j)(G) = max over all C(n,j) seeds of P_A, with every attaining seed.
/// Evaluations are independent; they are partitioned across workers and
/// merged by exact comparison, so the result is scheduling-independent.
inline OptimumReport p_j(const Graph& g, int j, int workers = 1) {
    const int n = g.order();
    if (j < 1 || j > n) throw parse_error("p_j: j out of range");
    if (n > exact_cap) throw cap_exceeded("p_j: graph order exceeds exact cap");

    std::vector<VertexSet> seeds;
    std::vector<int> combo(j);
    for (int i = 0; i < j; ++i) combo[i] = i;
    while (true) {
        VertexSet s(n);
        for (int v : combo) s.set(v);
        seeds.push_back(s);
        int i = j - 1;
        while (i >= 0 && combo[i] == n - j + i) --i;
        if (i < 0) break;
        ++combo[i];
        for (int k = i + 1; k < j; ++k) combo[k] = combo[k - 1] + 1;
    }

    struct Partial {
        Rational best = -1;
        std::vector<VertexSet> argmax;
    };
    workers = std::max(1, workers);
    std::vector<Partial> partials(workers);
    auto run = [&](int w) {
        for (std::size_t i = w; i < seeds.size(); i += workers) {
            Rational p = p_A(g, seeds[i]).p_value;
            if (p > partials[w].best) {
                partials[w].best = p;
                partials[w].argmax = {seeds[i]};
            } else if (p == partials[w].best) {
                partials[w].argmax.push_back(seeds[i]);
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }

    OptimumReport report;
    report.j = j;
    report.evaluated_count = seeds.size();
    report.p_value = -1;
    for (const auto& part : partials) {
        if (part.best > report.p_value) {
            report.p_value = part.best;
            report.argmax_seeds = part.argmax;
        } else if (part.best == report.p_value) {
            report.argmax_seeds.insert(report.argmax_seeds.end(), part.argmax.begin(),
                                       part.argmax.end());
        }
    }
    std::sort(report.argmax_seeds.begin(), report.argmax_seeds.end(), lex_less);
    return report;
}

}  // namespace pzf
