#pragma once

#include "pzf/rational.hpp"

#include <cstdint>
#include <random>

namespace pzf {

/// splitmix64 finalizer; the mixing function behind trial stream derivation.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Stable stream derivation contract: trial i of a run with master seed s
/// uses mt19937_64 seeded with splitmix64(s ^ (i+1) * 0x9e3779b97f4a7c15).
/// Results are therefore independent of worker count and scheduling.
inline std::mt19937_64 trial_rng(std::uint64_t master_seed, std::uint64_t trial_index) {
    return std::mt19937_64(splitmix64(master_seed ^ (trial_index + 1) * 0x9e3779b97f4a7c15ull));
}

/// Exact Bernoulli(p) draw from one 64-bit uniform: success iff
/// u / 2^64 < p, decided by cross-multiplication with no rounding.
inline bool bernoulli_exact(const Rational& p, std::uint64_t u) {
    return BigInt(u) * den(p) < (num(p) << 64);
}

}  // namespace pzf
