#pragma once

#include "pzf/classical.hpp"
#include "pzf/errors.hpp"
#include "pzf/graph.hpp"
#include "pzf/rational.hpp"
#include "pzf/rng.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace pzf {

/// Exact distribution over successor states; keys are black sets.
/// Deterministic iteration order (bit-pattern order on states).
using StateDistribution = std::map<VertexSet, Rational>;

/// F(u -> v): probability that black u forces white neighbor v in one
/// round. 0 unless u is black, v is a neighbor of u, and u has a white
/// closed-neighbor; else |N[u] ∩ Z| / deg(u).
inline Rational forcing_probability(const Graph& g, const VertexSet& black, int u, int v) {
    if (!black.test(u)) return 0;
    if (!g.neighbors(u).test(v)) return 0;
    if (black.test(v)) return 0;  // forcing targets white vertices only
    VertexSet closed = g.closed_neighborhood(u);
    if (black.contains(closed)) return 0;  // N[u] ⊆ Z
    return Rational(BigInt((closed & black).count()), BigInt(g.degree(u)));
}

/// P(-> v): probability v is black after one global round. The per-edge
/// forcing events are independent, so the union collapses to
/// 1 - ∏ (1 - F(u -> v)) over black neighbors u.
inline Rational conversion_probability(const Graph& g, const VertexSet& black, int v) {
    if (black.test(v)) return 1;
    Rational fail = 1;
    g.neighbors(v).for_each([&](int u) {
        if (black.test(u)) fail *= Rational(1) - forcing_probability(g, black, u, v);
    });
    return Rational(1) - fail;
}

/// One-round successor distribution D(G), synchronous semantics: every
/// probability is evaluated against the round-start black set. White
/// vertices convert independently with their conversion probabilities, so
/// the distribution is a product over whites; zero-probability successors
/// never materialize.
inline StateDistribution step_distribution(const Graph& g, const VertexSet& black) {
    VertexSet base = black;
    std::vector<int> fractional;          // whites with 0 < p < 1
    std::vector<Rational> fractional_p;
    for (int v = 0; v < g.order(); ++v) {
        if (black.test(v)) continue;
        Rational p = conversion_probability(g, black, v);
        if (p == 1) {
            base.set(v);  // sure force, part of every successor
        } else if (p != 0) {
            fractional.push_back(v);
            fractional_p.push_back(p);
        }
    }
    if (fractional.size() >= 63)
        throw cap_exceeded("step_distribution: successor support too large");
    StateDistribution dist;
    const std::uint64_t subsets = std::uint64_t{1} << fractional.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        VertexSet state = base;
        Rational p = 1;
        for (std::size_t i = 0; i < fractional.size(); ++i) {
            if (mask >> i & 1) {
                state.set(fractional[i]);
                p *= fractional_p[i];
            } else {
                p *= Rational(1) - fractional_p[i];
            }
        }
        dist[state] = p;
    }
    return dist;
}

/// One draw from D(G) without materializing it: one 64-bit uniform is
/// consumed per white vertex, in ascending vertex order, compared exactly
/// against the conversion probability. States with no white vertices
/// consume no randomness.
inline VertexSet sample_step(const Graph& g, const VertexSet& black, std::mt19937_64& rng) {
    VertexSet next = black;
    for (int v = 0; v < g.order(); ++v) {
        if (black.test(v)) continue;
        Rational p = conversion_probability(g, black, v);
        if (bernoulli_exact(p, rng())) next.set(v);
    }
    return next;
}

}  // namespace pzf
