#pragma once

#include "pzf/classical.hpp"
#include "pzf/graph.hpp"
#include "pzf/metrics.hpp"
#include "pzf/pccr.hpp"
#include "pzf/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

namespace pzf {

struct McEstimate {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double point = 0.0;
    double ci_low = 0.0;   // 95% Wilson interval
    double ci_high = 0.0;
    int k0 = 0;
    std::uint64_t master_seed = 0;
};

namespace detail {

inline void wilson_interval(std::uint64_t successes, std::uint64_t trials, double& low,
                            double& high) {
    const double z = 1.959963984540054;  // 95%
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2 * n)) / denom;
    const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
    low = std::clamp(center - half, 0.0, 1.0);
    high = std::clamp(center + half, 0.0, 1.0);
}

template <class PerTrial>
inline void run_trials(std::uint64_t trials, int workers, PerTrial&& body) {
    workers = std::max(1, workers);
    if (workers == 1 || trials < 2) {
        for (std::uint64_t t = 0; t < trials; ++t) body(t, 0);
        return;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::uint64_t t = w; t < trials; t += workers) body(t, w);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace detail

/// Estimate P_A(G) by simulation: k0 is determined deterministically by
/// the support BFS, then each trial runs exactly k0 synchronous rounds
/// and succeeds iff its final black set contains a classical zero forcing
/// set. Trial i draws from the stream derived from (master_seed, i), so
/// the estimate is bit-reproducible regardless of worker count.
inline McEstimate estimate_p_A(const Graph& g, const VertexSet& seed, std::uint64_t trials,
                               std::uint64_t master_seed, int workers = 1,
                               std::size_t state_budget = default_state_budget) {
    if (seed.empty()) throw parse_error("estimate_p_A: seed must be nonempty");
    if (trials < 1) throw parse_error("estimate_p_A: trials must be >= 1");
    McEstimate est;
    est.trials = trials;
    est.master_seed = master_seed;
    est.k0 = least_k_with_zfs(g, seed, state_budget);

    workers = std::max(1, workers);
    std::vector<std::uint64_t> successes(workers, 0);
    detail::run_trials(trials, workers, [&](std::uint64_t trial, int w) {
        auto rng = trial_rng(master_seed, trial);
        VertexSet state = seed;
        for (int k = 0; k < est.k0; ++k) state = sample_step(g, state, rng);
        if (contains_zfs(g, state)) ++successes[w];
    });
    for (auto s : successes) est.successes += s;
    est.point = static_cast<double>(est.successes) / static_cast<double>(trials);
    detail::wilson_interval(est.successes, est.trials, est.ci_low, est.ci_high);
    return est;
}

struct AbsorptionEstimate {
    std::uint64_t trials = 0;
    double mean_rounds = 0.0;
    double std_rounds = 0.0;  // sample standard deviation over uncapped trials
    std::vector<std::uint64_t> histogram;  // histogram[k] = trials absorbed in k rounds
    std::uint64_t capped = 0;
    int round_cap = 0;
    std::uint64_t master_seed = 0;
};

/// Empirical absorption time: each trial runs pccr rounds until all-black
/// or round_cap. Capped trials are counted, not raised, and excluded from
/// mean/std.
inline AbsorptionEstimate estimate_absorption_time(const Graph& g, const VertexSet& seed,
                                                   std::uint64_t trials,
                                                   std::uint64_t master_seed, int round_cap,
                                                   int workers = 1) {
    if (seed.empty()) throw parse_error("estimate_absorption_time: seed must be nonempty");
    if (round_cap < 1) throw parse_error("estimate_absorption_time: round_cap must be >= 1");
    AbsorptionEstimate est;
    est.trials = trials;
    est.round_cap = round_cap;
    est.master_seed = master_seed;

    workers = std::max(1, workers);
    struct Partial {
        std::vector<std::uint64_t> histogram;
        std::uint64_t capped = 0;
    };
    std::vector<Partial> partials(workers);
    for (auto& p : partials) p.histogram.assign(round_cap + 1, 0);
    detail::run_trials(trials, workers, [&](std::uint64_t trial, int w) {
        auto rng = trial_rng(master_seed, trial);
        VertexSet state = seed;
        int rounds = 0;
        while (!state.all() && rounds < round_cap) {
            state = sample_step(g, state, rng);
            ++rounds;
        }
        if (state.all())
            ++partials[w].histogram[rounds];
        else
            ++partials[w].capped;
    });

    est.histogram.assign(round_cap + 1, 0);
    for (const auto& p : partials) {
        est.capped += p.capped;
        for (std::size_t k = 0; k < p.histogram.size(); ++k) est.histogram[k] += p.histogram[k];
    }
    std::uint64_t absorbed = trials - est.capped;
    if (absorbed > 0) {
        double sum = 0.0, sumsq = 0.0;
        for (std::size_t k = 0; k < est.histogram.size(); ++k) {
            sum += static_cast<double>(est.histogram[k]) * k;
            sumsq += static_cast<double>(est.histogram[k]) * k * k;
        }
        est.mean_rounds = sum / absorbed;
        if (absorbed > 1)
            est.std_rounds =
                std::sqrt((sumsq - sum * sum / absorbed) / static_cast<double>(absorbed - 1));
    }
    return est;
}

}  // namespace pzf
