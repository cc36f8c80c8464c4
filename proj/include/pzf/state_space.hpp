#pragma once

#include "pzf/errors.hpp"
#include "pzf/graph.hpp"
#include "pzf/pccr.hpp"
#include "pzf/rational.hpp"

#include <cstdint>
#include <deque>
#include <map>
#include <utility>
#include <vector>

namespace pzf {

/// The iterated sample spaces of the process: layer k holds the step-k
/// state distribution (states aggregated by bit pattern, not by history;
/// every downstream quantity depends only on aggregated mass).
class LayeredSpace {
  public:
    LayeredSpace(const Graph& g, VertexSet initial)
        : graph_(&g), initial_(std::move(initial)) {
        layers_.push_back({{initial_, Rational(1)}});
    }

    const Graph& graph() const { return *graph_; }
    const VertexSet& initial() const { return initial_; }
    int top() const { return static_cast<int>(layers_.size()) - 1; }

    const StateDistribution& layer(int k) const {
        if (k < 0 || k > top()) throw std::out_of_range("layer not computed");
        return layers_[k];
    }

    /// Append the next layer: push every state's mass through one pccr
    /// round and aggregate identical successors by exact addition.
    void expand() {
        const StateDistribution& current = layers_.back();
        StateDistribution next;
        for (const auto& [state, mass] : current) {
            for (const auto& [succ, p] : step_distribution(*graph_, state)) {
                next[succ] += mass * p;
            }
        }
        if (next.size() > (std::size_t{1} << exact_cap))
            throw cap_exceeded("expand: layer exceeds 2^30 states");
        layers_.push_back(std::move(next));
    }

    void expand_to(int k) {
        while (top() < k) expand();
    }

  private:
    const Graph* graph_;
    VertexSet initial_;
    std::vector<StateDistribution> layers_;
};

/// Exact probability that every vertex of W is black at step k.
inline Rational marginal(const LayeredSpace& space, int k, const VertexSet& w) {
    Rational total = 0;
    for (const auto& [state, mass] : space.layer(k))
        if (state.contains(w)) total += mass;
    return total;
}

/// Probability that W1 or W2 is entirely black at step k, via
/// P(W1) + P(W2) - P(W1 ∪ W2).
inline Rational union_marginal(const LayeredSpace& space, int k, const VertexSet& w1,
                               const VertexSet& w2) {
    return marginal(space, k, w1) + marginal(space, k, w2) - marginal(space, k, w1 | w2);
}

/// Reachable colored states from an initial state, with exact one-step
/// transition probabilities. States are indexed in BFS discovery order;
/// the all-black state is the unique absorbing state.
struct TransitionSystem {
    std::vector<VertexSet> states;  // BFS order, initial at index 0
    std::vector<std::vector<std::pair<int, Rational>>> transitions;  // from -> (to, p)
    int absorbing_index = -1;

    int index_of(const VertexSet& s) const {
        auto it = index.find(s);
        return it == index.end() ? -1 : it->second;
    }

    std::map<VertexSet, int> index;
};

inline TransitionSystem reachable_states(const Graph& g, const VertexSet& initial) {
    if (g.order() > exact_cap)
        throw cap_exceeded("reachable_states: graph order exceeds exact cap " +
                           std::to_string(exact_cap));
    if (initial.empty())
        throw parse_error("reachable_states: initial state must be nonempty");
    TransitionSystem ts;
    std::deque<int> queue;
    auto intern = [&](const VertexSet& s) {
        auto [it, inserted] = ts.index.try_emplace(s, static_cast<int>(ts.states.size()));
        if (inserted) {
            ts.states.push_back(s);
            queue.push_back(it->second);
        }
        return it->second;
    };
    intern(initial);
    while (!queue.empty()) {
        int from = queue.front();
        queue.pop_front();
        VertexSet state = ts.states[from];
        if (static_cast<int>(ts.transitions.size()) <= from) ts.transitions.resize(from + 1);
        for (const auto& [succ, p] : step_distribution(g, state))
            ts.transitions[from].emplace_back(intern(succ), p);
    }
    ts.transitions.resize(ts.states.size());
    ts.absorbing_index = ts.index_of(g.full_set());
    return ts;
}

struct AbsorptionReport {
    Rational expected_steps;  // expected rounds from the initial state to all-black
    std::vector<std::pair<int, Rational>> step_probabilities;  // (k, P^(k)(G_b))
    bool limit_confirmed = false;
};

namespace detail {

/// Solve the dense rational system M x = b by Gaussian elimination with
/// nonzero pivoting.
inline std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> m,
                                            std::vector<Rational> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::logic_error("singular transient block");
        std::swap(m[pivot], m[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            Rational factor = m[row][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
            b[row] -= factor * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / m[i][i];
    return x;
}

}  // namespace detail

/// Expected absorption time by the fundamental-matrix method, solved
/// exactly: (I - Q) t = 1 over the transient block. Step probabilities
/// come from iterating the exact distribution vector; limit_confirmed is
/// set once P^(k)(G_b) >= 1 - epsilon within max_k rounds.
inline AbsorptionReport absorption_analysis(const TransitionSystem& ts, const Rational& epsilon,
                                            int max_k) {
    AbsorptionReport report;
    const std::size_t n = ts.states.size();
    const int absorbing = ts.absorbing_index;

    // transient indices = everything except the absorbing state
    std::vector<int> transient;
    std::vector<int> slot(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        if (static_cast<int>(i) != absorbing) {
            slot[i] = static_cast<int>(transient.size());
            transient.push_back(static_cast<int>(i));
        }
    }

    if (transient.empty()) {
        report.expected_steps = 0;
    } else {
        std::vector<std::vector<Rational>> m(transient.size(),
                                             std::vector<Rational>(transient.size(), 0));
        std::vector<Rational> b(transient.size(), 1);
        for (std::size_t r = 0; r < transient.size(); ++r) {
            m[r][r] = 1;
            for (const auto& [to, p] : ts.transitions[transient[r]])
                if (to != absorbing) m[r][slot[to]] -= p;
        }
        std::vector<Rational> t = detail::solve_rational(std::move(m), std::move(b));
        report.expected_steps = slot[0] >= 0 ? t[slot[0]] : Rational(0);
    }

    // iterate the distribution vector from the initial unit mass
    std::vector<Rational> dist(n, 0);
    dist[0] = 1;
    const Rational threshold = Rational(1) - epsilon;
    for (int k = 0; k <= max_k; ++k) {
        Rational at_absorbing = dist[absorbing];
        report.step_probabilities.emplace_back(k, at_absorbing);
        if (at_absorbing >= threshold) {
            report.limit_confirmed = true;
            break;
        }
        if (k == max_k) break;
        std::vector<Rational> next(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (dist[i] == 0) continue;
            for (const auto& [to, p] : ts.transitions[i]) next[to] += dist[i] * p;
        }
        dist = std::move(next);
    }
    return report;
}

struct AbsorptionProbe {
    bool confirmed = false;
    int steps = -1;       // first k with P^(k)(G_b) >= 1 - epsilon
    bool monotone = true; // P^(k)(G_b) nondecreasing along the iteration
};

/// Fast double-precision witness of absorption: iterates the chain until
/// the absorbing mass clears 1 - epsilon or max_k is hit. Used for bulk
/// sweeps where exact rationals would be needlessly expensive.
inline AbsorptionProbe absorption_probe(const TransitionSystem& ts, double epsilon, int max_k) {
    const std::size_t n = ts.states.size();
    std::vector<std::vector<std::pair<int, double>>> trans(n);
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [to, p] : ts.transitions[i]) trans[i].emplace_back(to, to_double(p));
    std::vector<double> dist(n, 0.0);
    dist[0] = 1.0;
    AbsorptionProbe probe;
    double prev = 0.0;
    for (int k = 0; k <= max_k; ++k) {
        double at_absorbing = dist[ts.absorbing_index];
        if (at_absorbing < prev - 1e-12) probe.monotone = false;
        prev = at_absorbing;
        if (at_absorbing >= 1.0 - epsilon) {
            probe.confirmed = true;
            probe.steps = k;
            return probe;
        }
        std::vector<double> next(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            if (dist[i] == 0.0) continue;
            for (const auto& [to, p] : trans[i]) next[to] += dist[i] * p;
        }
        dist = std::move(next);
    }
    return probe;
}

}  // namespace pzf
