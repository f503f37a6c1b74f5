// Independent reference implementations used to verify the library.  These
// favour brute force and direct definitions over efficiency; each one uses a
// different algorithm from the code under test.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sgbal/milp.hpp"
#include "sgbal/signed_graph.hpp"

namespace oracles {

// Minimum frustration count over all 2-colourings (node 0 fixed, 2^{n-1}).
long long brute_force_frustration(const sgbal::SignedGraph& g);

// Weighted variant of the above.
double brute_force_weighted(const sgbal::SignedGraph& g);

// Minimum frustration count over all colourings with at most k colours,
// enumerated as restricted-growth strings (exhaustive set partitions when
// k >= n).  Intended for n <= 10.
long long brute_force_kcolour(const sgbal::SignedGraph& g, int k);

// (balanced, unbalanced) triangle counts by direct triple enumeration.
std::pair<long long, long long> direct_triangle_counts(const sgbal::SignedGraph& g);

// Walk-balance ratio computed from a `terms`-term power series of the two
// matrix exponentials (no eigendecomposition).
double walk_balance_series(const sgbal::SignedGraph& g, int terms = 30);

struct CycleCounts {
    std::vector<long long> balanced;   // index = cycle length
    std::vector<long long> unbalanced; // index = cycle length
};

// Counts simple cycles of length 3..kmax by enumerating vertex subsets and
// Hamiltonian orderings inside each subset.  Intended for n <= 9.
CycleCounts subset_cycle_counts(const sgbal::SignedGraph& g, int kmax);

// Minimum objective of an exported model over all node assignments, with the
// auxiliary variables set to their cheapest feasible completion.  Asserts
// feasibility of every completed point.  Intended for n <= 12.
double milp_optimum(const sgbal::SignedGraph& g, const sgbal::MilpModel& model);

// Minimum objective over ALL feasible 0/1 points of the model (2^vars);
// returns infinity when nothing is feasible.  Intended for <= 20 variables.
double milp_optimum_exhaustive(const sgbal::MilpModel& model);

// Uniform random signed graph for test suites: n nodes, m edges, an exact
// negative fraction, deterministic in seed.
sgbal::SignedGraph random_graph(int n, long long m, double negative_fraction,
                                std::uint64_t seed);

// Random weighted signed graph with weights on a +-0.1..1.0 grid.
sgbal::SignedGraph random_weighted_graph(int n, long long m, std::uint64_t seed);

} // namespace oracles
