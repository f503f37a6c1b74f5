#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgbal/signed_graph.hpp"

namespace sgbal {

struct SolverConfig {
    std::optional<double> time_limit_seconds; // checked at every node expansion
    long long gap = 0;                        // absolute optimality gap tolerance
    std::optional<long long> node_budget;     // max node expansions
    int workers = 1;                          // parallel subtree searches
    // Speed-ups; switching any of them off must not change the objective.
    bool use_preprocessing = true;       // decompose into biconnected pieces
    bool use_colour_fixing = true;       // pin the max-degree node's colour
    bool use_degree_branching = true;    // branch in nonincreasing degree order
    bool use_triangle_lower_bound = true;// greedy triangle packing in the bound
    bool use_local_search_seed = true;   // start from the local-search incumbent
};

enum class SolveStatus { optimal, gap_terminated, budget_terminated };
std::string to_string(SolveStatus status);

struct FrustrationResult {
    long long L = 0;         // best frustration count found
    Colouring colouring;     // certificate achieving L
    SolveStatus status = SolveStatus::optimal;
    long long lower_bound = 0;  // proven lower bound on the optimum
    long long nodes_explored = 0;
    double wall_seconds = 0.0;
    std::vector<int> frustrated_edges; // edge ids frustrated under `colouring`;
                                       // the minimum deletion set when optimal
};

// Exact frustration index by depth-first branch and bound: decompose,
// seed with local search, fix the max-degree node, branch by degree with
// majority-sign child ordering, bound by fixed frustrated edges plus a greedy
// packing of edge-disjoint unbalanced triangles among uncoloured nodes.
// Honest statuses: with gap 0 and no budget, status == optimal and L is the
// frustration index; otherwise L is the incumbent and lower_bound is proven.
FrustrationResult solve(const SignedGraph& g, const SolverConfig& cfg = {});

// Greedy edge-disjoint packing of unbalanced triangles, iterated in
// lexicographic node order; the pack size is a lower bound on L.
long long triangle_packing_lower_bound(const SignedGraph& g);

struct WeightedFrustrationResult {
    double L = 0.0;
    Colouring colouring;
    SolveStatus status = SolveStatus::optimal;
    double lower_bound = 0.0;
    long long nodes_explored = 0;
    double wall_seconds = 0.0;
    std::vector<int> frustrated_edges; // edges on their costlier side
};

// Minimises sum over edges of (1-w)/2 + w*[colours differ] by the same
// search; integer-specific bounds are disabled, so expect smaller instances.
WeightedFrustrationResult solve_weighted(const SignedGraph& g, const SolverConfig& cfg = {});

// Minimum frustration over k-colourings (positive edges frustrated across
// classes, negative ones within).  Symmetry is broken by fixing the first
// branched node's colour and allowing a new colour only after all previous
// ones appear.  k = 2 coincides with solve().
FrustrationResult solve_kcolour(const SignedGraph& g, int k, const SolverConfig& cfg = {});

// Ground-state Ising energy 2L - m for +-1 couplings given by the edge
// signs; requires an optimal result.
long long ising_hamiltonian(const FrustrationResult& result, int m);

} // namespace sgbal
