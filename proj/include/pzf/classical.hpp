#pragma once

#include "pzf/errors.hpp"
#include "pzf/graph.hpp"

#include <utility>
#include <vector>

namespace pzf {

struct ClosureResult {
    VertexSet final_black;
    std::vector<std::pair<int, int>> forcing_sequence;  // (forcer, forced)
};

namespace detail {

/// If u is black with exactly one white neighbor, return it; else -1.
inline int lone_white_neighbor(const Graph& g, const VertexSet& black, int u) {
    int found = -1;
    int whites = 0;
    g.neighbors(u).for_each([&](int v) {
        if (!black.test(v)) {
            ++whites;
            found = v;
        }
    });
    return whites == 1 ? found : -1;
}

}  // namespace detail

/// Classical color change rule applied to fixpoint. The final set is
/// order-invariant; the recorded sequence is the one produced by repeated
/// ascending sweeps.
inline ClosureResult ccr_closure(const Graph& g, VertexSet black) {
    ClosureResult result;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int u = 0; u < g.order(); ++u) {
            if (!black.test(u)) continue;
            int v = detail::lone_white_neighbor(g, black, u);
            if (v >= 0) {
                black.set(v);
                result.forcing_sequence.emplace_back(u, v);
                changed = true;
            }
        }
    }
    result.final_black = std::move(black);
    return result;
}

inline bool is_zfs(const Graph& g, const VertexSet& black) {
    return ccr_closure(g, black).final_black.all();
}

/// True iff some subset of `black` is a classical zero forcing set.
/// Closure is monotone under supersets, so this reduces to is_zfs on
/// `black` itself (regression-tested against the all-subsets oracle).
inline bool contains_zfs(const Graph& g, const VertexSet& black) {
    return is_zfs(g, black);
}

struct ZeroForcingResult {
    int number;
    VertexSet witness;  // lexicographically least minimum zero forcing set
};

/// Z(G) by subset enumeration: increasing cardinality, lexicographic order
/// of vertex-index combinations within each cardinality, first hit wins.
inline ZeroForcingResult zero_forcing_number(const Graph& g) {
    const int n = g.order();
    if (n > exact_cap)
        throw cap_exceeded("zero_forcing_number: graph order exceeds exact cap " +
                           std::to_string(exact_cap));
    for (int size = 1; size <= n; ++size) {
        std::vector<int> combo(size);
        for (int i = 0; i < size; ++i) combo[i] = i;
        while (true) {
            VertexSet candidate(n);
            for (int v : combo) candidate.set(v);
            if (is_zfs(g, candidate)) return {size, candidate};
            // next combination
            int i = size - 1;
            while (i >= 0 && combo[i] == n - size + i) --i;
            if (i < 0) break;
            ++combo[i];
            for (int j = i + 1; j < size; ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    return {n, VertexSet::full(n)};  // unreachable: V(G) always forces
}

}  // namespace pzf
