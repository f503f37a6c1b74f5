#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sgbal {

// One undirected edge; the canonical form stored by SignedGraph has u < v.
struct Edge {
    int u = 0;
    int v = 0;
    int sign = +1;       // -1 or +1
    double weight = 1.0; // in [-1,1] \ {0}; sign agrees with the weight's sign
};

// Two-colouring of the nodes: x[i] != 0 means node i is black (in the
// switching set X); 0 means white.
using Colouring = std::vector<std::uint8_t>;

struct DegreeProfile {
    std::vector<int> positive; // d+(i)
    std::vector<int> negative; // d-(i)
    std::vector<int> total;    // d(i) = d+(i) + d-(i)
    std::vector<int> net;      // d+(i) - d-(i)
};

// An incident edge as seen from one endpoint.
struct IncidentEdge {
    int neighbour = 0;
    int edge_id = 0;
    int sign = +1;
    double weight = 1.0;
};

// Immutable undirected signed (optionally weighted) graph with nodes 0..n-1.
// Edges are stored canonically (u < v, lexicographically sorted) so iteration
// order, solver runs and reports are reproducible.
class SignedGraph {
public:
    SignedGraph() = default;

    // Canonicalises and validates the edge list.  Throws std::invalid_argument
    // on self-loops, duplicate pairs, node ids outside [0, n), zero or
    // out-of-range weights, or sign/weight disagreement.
    SignedGraph(int n, std::vector<Edge> edges, std::string name = {},
                std::vector<std::string> labels = {});

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    int m_minus() const { return m_minus_; }
    int m_plus() const { return m() - m_minus_; }
    bool weighted() const { return weighted_; }
    // 2m / (n(n-1)); zero for n < 2.
    double density() const;

    const std::string& name() const { return name_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int edge_id) const { return edges_[static_cast<std::size_t>(edge_id)]; }
    std::span<const IncidentEdge> incident(int node) const;
    int degree(int node) const;
    // Original input labels (one per node); defaults to "0".."n-1".
    const std::vector<std::string>& labels() const { return labels_; }

    DegreeProfile degree_profile() const;
    bool connected() const;
    // Returns node ids of the largest connected component (smallest ids win ties).
    std::vector<int> largest_component() const;
    // Maximum-degree node; ties broken by smallest id.
    int max_degree_node() const;
    // Edge id for the pair {a, b}, or -1 if absent.
    int find_edge(int a, int b) const;

    // Subgraph induced by `nodes` (ids relabelled 0..k-1 in the given order).
    SignedGraph induced(const std::vector<int>& nodes) const;

private:
    int n_ = 0;
    int m_minus_ = 0;
    bool weighted_ = false;
    std::string name_;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
    std::vector<int> adj_offset_;    // CSR offsets, size n+1
    std::vector<IncidentEdge> adj_;  // CSR payload, size 2m
};

// Number of frustrated edges under X: a positive edge is frustrated when its
// endpoint colours differ, a negative edge when they match.
long long frustration_count(const SignedGraph& g, const Colouring& x);

// Weighted objective: sum over edges of (1-w)/2 + w*[colours differ].
// Coincides with frustration_count on +-1 weights.
double weighted_frustration(const SignedGraph& g, const Colouring& x);

// Switching: edges crossing the colour boundary flip sign (and weight);
// topology is unchanged.  Involution: switched(switched(g,x),x) == g.
SignedGraph switched(const SignedGraph& g, const Colouring& x);

struct BalanceCheck {
    bool balanced = false;
    // A 2-partition with every negative edge crossing; set when balanced.
    std::optional<Colouring> bipartition;
    // One negative cycle (node sequence, consecutive nodes adjacent, last
    // adjacent to first); set when unbalanced.
    std::vector<int> negative_cycle;
};

// Spanning-forest colour propagation; linear in m.
BalanceCheck is_balanced(const SignedGraph& g);

// Same topology, exactly m- edges negative at uniformly random positions.
// Weight magnitudes are kept; signs follow the new assignment.
SignedGraph reshuffle(const SignedGraph& g, std::uint64_t seed);

struct LocalSearchResult {
    Colouring colouring;
    long long upper_bound = 0;
};

// Greedily flips any node with more frustrated than satisfied incident edges
// until none remains.  The final count is a valid upper bound on the
// frustration index.  Starts from all-white unless a start is given.
LocalSearchResult local_search_upper_bound(const SignedGraph& g);
LocalSearchResult local_search_upper_bound(const SignedGraph& g, Colouring start);

struct GraphPiece {
    SignedGraph graph;
    std::vector<int> node_map; // piece node id -> node id in the input graph
};

struct Decomposition {
    // Biconnected pieces of the 2-core; frustration is additive across them.
    std::vector<GraphPiece> pieces;
    struct PrunedNode {
        int node = 0;
        int anchor = -1; // neighbour at removal time; -1 for isolated nodes
        int sign = +1;   // sign of the pendant edge to the anchor
    };
    std::vector<PrunedNode> pruned; // in removal order
};

// Repeatedly strips degree-0/1 nodes (they never lie on a cycle), then splits
// the remainder at articulation points into biconnected pieces.
Decomposition decompose(const SignedGraph& g);

// Reassembles a full colouring from per-piece colourings, complementing pieces
// so they agree at shared cut vertices and recolouring pendant nodes to
// satisfy their single edge.
Colouring lift_colouring(const SignedGraph& g, const Decomposition& d,
                         const std::vector<Colouring>& piece_colourings);

} // namespace sgbal
