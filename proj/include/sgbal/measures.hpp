#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgbal/signed_graph.hpp"

namespace sgbal {

inline constexpr long long kDefaultCycleLimit = 10'000'000;
inline constexpr double kEigenTolerance = 1e-10;

// Exact counts of simple cycles by length and sign.
struct CycleCensus {
    int cap = 0;
    long long limit = kDefaultCycleLimit;
    bool truncated = false;
    std::vector<long long> balanced;   // indexed by length k, 3 <= k <= cap
    std::vector<long long> unbalanced; // same indexing

    long long count(int k) const {
        return balanced[static_cast<std::size_t>(k)] + unbalanced[static_cast<std::size_t>(k)];
    }
    long long total_balanced() const;
    long long total() const;
};

// DFS simple-cycle enumeration rooted at each node, each cycle counted once
// at its smallest node.  Stops and sets `truncated` once `limit` cycles have
// been recorded; cycle-ratio measures refuse truncated censuses.
CycleCensus cycle_census(const SignedGraph& g, int cap, long long limit = kDefaultCycleLimit);
// Convenience overload with cap = n.
CycleCensus cycle_census(const SignedGraph& g);

// Cycle-length weighting f(k) for the weighted degree of balance.
struct Weighting {
    enum class Kind { uniform, inverse_length, inverse_factorial, single_length };
    Kind kind = Kind::uniform;
    int k0 = 3; // only for single_length

    double operator()(int k) const;

    static Weighting uniform() { return {Kind::uniform, 0}; }
    static Weighting inverse_length() { return {Kind::inverse_length, 0}; }
    static Weighting inverse_factorial() { return {Kind::inverse_factorial, 0}; }
    static Weighting single_length(int k) { return {Kind::single_length, k}; }
};

// Sum of f(k)*balanced(k) over sum of f(k)*total(k); 1 when the denominator
// is zero (acyclic graphs count as balanced).  Throws std::invalid_argument
// on a truncated census.
double degree_of_balance(const CycleCensus& census, const Weighting& w);

// Fraction of balanced triangles via the adjacency traces
// (Tr(A^3) + Tr(|A|^3)) / (2 Tr(|A|^3)); 1 when the graph has no triangle.
double triangle_index(const SignedGraph& g);

// W = (K+1)/2 with K = Tr(e^A)/Tr(e^|A|), from the eigenvalues of both
// matrices.  Exponentials are shifted by the largest eigenvalue so large
// dense graphs do not overflow.
double walk_balance(const SignedGraph& g);

struct AlgebraicConflict {
    double lambda = 0.0;     // smallest eigenvalue of the signed Laplacian
    double normalised = 1.0; // 1 - lambda/(max mean edge degree - 1)
};

// Requires a connected graph with at least one cycle; throws
// std::invalid_argument otherwise (disconnected spectra reflect a single
// component, and acyclic graphs are exactly balanced).
AlgebraicConflict algebraic_conflict(const SignedGraph& g);

struct FrustrationMeasures {
    double F = 1.0;
    std::optional<double> F_prime; // absent when its denominator is <= 0
    std::string f_prime_skip_reason;
    double X = 1.0;
};

// Normalised frustration measures for a known frustration index L.
FrustrationMeasures frustration_measures(long long L, const SignedGraph& g);

struct TrivialMeasures {
    std::optional<double> Y; // fraction of positive edges; absent when m = 0
    int Z = 1;               // 1 iff balanced
};
TrivialMeasures trivial_measures(const SignedGraph& g);

struct SpectralBipartivity {
    double beta = 1.0; // even closed walks over all closed walks
    double b_s = 1.0;  // Tr(e^-A)/Tr(e^A) on the unsigned adjacency
};
// Both computed from the spectrum of |A|; both equal 1 exactly when the
// underlying unsigned graph is bipartite.
SpectralBipartivity spectral_bipartivity(const SignedGraph& g);

// (1 + (1-2q)^k)/2: expected fraction of balanced k-cycles when each edge is
// independently negative with probability q.
double expected_relative_k_balance(double q, int k);

// Census-weighted combination of the per-length expectations; 1 when the
// census holds no cycles.  Refuses truncated censuses.
double expected_degree_of_balance(const CycleCensus& census, double q);

// Closed-form measure values for the two analysable complete-graph families:
// K_n with a single negative edge and K_n with every edge negative.
enum class CompleteFamily { single_negative, all_negative };

struct FamilyTable {
    int n = 0;
    CompleteFamily family = CompleteFamily::single_negative;
    std::optional<double> D;                  // single_negative only
    std::vector<std::pair<int, double>> D_k;  // k = 3..n
    double lambda = 0.0;
    double A = 1.0;
    long long L = 0;
    double F = 1.0;
    std::optional<double> W;                  // all_negative only
};
FamilyTable family_oracle(int n, CompleteFamily family);

// ---------------------------------------------------------------------------
// Aggregated report

struct MeasureValue {
    bool computed = false;
    double value = 0.0;
    std::string reason; // set when skipped

    static MeasureValue of(double v) { return {true, v, {}}; }
    static MeasureValue skipped(std::string why) { return {false, 0.0, std::move(why)}; }
};

struct MeasureReport {
    MeasureValue D, C_inv_k, C_inv_fact, D_k, T, W, lambda, A, L, F, F_prime, X, Y, Z;
    int k = 3;
    int cycle_cap = 0;
    long long cycle_limit = kDefaultCycleLimit;
    bool census_truncated = false;
    double eigen_tolerance = kEigenTolerance;

    // Stable (name, value) view in report order; the names are the contract
    // shared by the text and structured serialisations.
    std::vector<std::pair<std::string, const MeasureValue*>> fields() const;
    // One `name = value` or `name = skipped(<reason>)` line per measure,
    // followed by the evaluation-parameter lines.
    std::string to_text() const;
};

struct ReportOptions {
    int k = 3;
    std::optional<int> cycle_cap; // default: n
    long long cycle_limit = kDefaultCycleLimit;
    std::string l_skip_reason = "solver did not finish within limits";
};

// Evaluates every measure on g, skipping (with reasons) the ones whose
// preconditions fail.  L and the measures derived from it are skipped unless
// a frustration index is supplied.
MeasureReport measure_report(const SignedGraph& g, std::optional<long long> L,
                             const ReportOptions& opt = {});

// Shortest round-trip decimal rendering used by all report serialisers.
std::string format_double(double v);

} // namespace sgbal
