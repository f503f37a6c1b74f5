#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sgbal/signed_graph.hpp"
#include "sgbal/solver.hpp"

namespace sgbal {

// Outcome of comparing a statistic on g against its distribution over
// sign-reshuffled replicas (same topology, same negative-edge count).
struct ReshuffleSummary {
    std::string statistic;
    double observed = 0.0;
    int trials = 0;
    int used = 0;    // replicas that yielded a value
    int skipped = 0; // replicas whose statistic refused (e.g. lambda rules)
    int gap_terminated = 0;    // solver replicas finishing with an open gap
    int budget_terminated = 0; // solver replicas cut off by time/node budget
    double mean = 0.0;         // sample mean over used replicas
    double sd = 0.0;           // sample SD, divisor used-1
    std::optional<double> z;   // (observed - mean)/sd; absent when sd == 0
    std::uint64_t seed = 0;
};

struct ReshuffleOptions {
    int trials = 500;
    std::uint64_t seed = 0;
    int k = 3;           // cycle length for the D_k statistic
    SolverConfig solver; // used by the L, F, F_prime and X statistics
};

// Statistics: "L" (frustration index) and the measure names
// D, C_inv_k, C_inv_fact, D_k, T, W, lambda, A, F, F_prime, X, Y, Z.
// Throws std::invalid_argument for unknown names, trials < 2, or a statistic
// that refuses on g itself.  Replicas where the statistic refuses are skipped
// and counted.  Deterministic in (g, statistic, options) at one worker.
ReshuffleSummary reshuffle_experiment(const SignedGraph& g, const std::string& statistic,
                                      const ReshuffleOptions& opt = {});

struct MonteCarloResult {
    double mean = 0.0;
    double standard_error = 0.0; // sample SD / sqrt(trials)
    int trials = 0;
};

// Draws independent signs (negative with probability q) on g's topology and
// averages the fraction of balanced k-cycles, for comparison against the
// closed form (1 + (1-2q)^k)/2.  Requires at least one k-cycle and
// trials >= 100.
MonteCarloResult monte_carlo_expected_dk(const SignedGraph& g, double q, int k,
                                         int trials, std::uint64_t seed);

} // namespace sgbal
