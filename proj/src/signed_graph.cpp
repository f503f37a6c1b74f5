#include "sgbal/signed_graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <queue>
#include <stdexcept>
#include <utility>

#include "sgbal/rng.hpp"

namespace sgbal {

SignedGraph::SignedGraph(int n, std::vector<Edge> edges, std::string name,
                         std::vector<std::string> labels)
    : n_(n), name_(std::move(name)), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (n_ < 0) throw std::invalid_argument("node count must be nonnegative");
    for (Edge& e : edges_) {
        if (e.u == e.v) throw std::invalid_argument("self-loop on node " + std::to_string(e.u));
        if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_)
            throw std::invalid_argument("edge endpoint outside [0, n)");
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.sign != -1 && e.sign != +1)
            throw std::invalid_argument("edge sign must be -1 or +1");
        if (e.weight == 0.0 || std::abs(e.weight) > 1.0 || !std::isfinite(e.weight))
            throw std::invalid_argument("edge weight must lie in [-1,1] and be nonzero");
        if ((e.weight < 0.0) != (e.sign < 0))
            throw std::invalid_argument("edge sign must agree with the weight's sign");
        if (e.weight != 1.0 && e.weight != -1.0) weighted_ = true;
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v)
            throw std::invalid_argument("duplicate edge (" + std::to_string(edges_[i].u) +
                                        ", " + std::to_string(edges_[i].v) + ")");
    }
    for (const Edge& e : edges_)
        if (e.sign < 0) ++m_minus_;

    if (labels_.empty()) {
        labels_.reserve(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) labels_.push_back(std::to_string(i));
    } else if (static_cast<int>(labels_.size()) != n_) {
        throw std::invalid_argument("label count must equal node count");
    }

    adj_offset_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (const Edge& e : edges_) {
        ++adj_offset_[static_cast<std::size_t>(e.u) + 1];
        ++adj_offset_[static_cast<std::size_t>(e.v) + 1];
    }
    for (int i = 0; i < n_; ++i)
        adj_offset_[static_cast<std::size_t>(i) + 1] += adj_offset_[static_cast<std::size_t>(i)];
    adj_.resize(edges_.size() * 2);
    std::vector<int> cursor(adj_offset_.begin(), adj_offset_.end() - 1);
    for (int id = 0; id < m(); ++id) {
        const Edge& e = edges_[static_cast<std::size_t>(id)];
        adj_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(e.u)]++)] =
            {e.v, id, e.sign, e.weight};
        adj_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(e.v)]++)] =
            {e.u, id, e.sign, e.weight};
    }
}

double SignedGraph::density() const {
    if (n_ < 2) return 0.0;
    return 2.0 * m() / (static_cast<double>(n_) * (n_ - 1));
}

std::span<const IncidentEdge> SignedGraph::incident(int node) const {
    const auto b = static_cast<std::size_t>(adj_offset_[static_cast<std::size_t>(node)]);
    const auto e = static_cast<std::size_t>(adj_offset_[static_cast<std::size_t>(node) + 1]);
    return {adj_.data() + b, e - b};
}

int SignedGraph::degree(int node) const {
    return adj_offset_[static_cast<std::size_t>(node) + 1] -
           adj_offset_[static_cast<std::size_t>(node)];
}

DegreeProfile SignedGraph::degree_profile() const {
    DegreeProfile p;
    p.positive.assign(static_cast<std::size_t>(n_), 0);
    p.negative.assign(static_cast<std::size_t>(n_), 0);
    p.total.assign(static_cast<std::size_t>(n_), 0);
    p.net.assign(static_cast<std::size_t>(n_), 0);
    for (const Edge& e : edges_) {
        if (e.sign > 0) {
            ++p.positive[static_cast<std::size_t>(e.u)];
            ++p.positive[static_cast<std::size_t>(e.v)];
        } else {
            ++p.negative[static_cast<std::size_t>(e.u)];
            ++p.negative[static_cast<std::size_t>(e.v)];
        }
    }
    for (int i = 0; i < n_; ++i) {
        const auto s = static_cast<std::size_t>(i);
        p.total[s] = p.positive[s] + p.negative[s];
        p.net[s] = p.positive[s] - p.negative[s];
    }
    return p;
}

bool SignedGraph::connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (const IncidentEdge& ie : incident(u)) {
            if (!seen[static_cast<std::size_t>(ie.neighbour)]) {
                seen[static_cast<std::size_t>(ie.neighbour)] = 1;
                ++count;
                stack.push_back(ie.neighbour);
            }
        }
    }
    return count == n_;
}

std::vector<int> SignedGraph::largest_component() const {
    std::vector<int> comp(static_cast<std::size_t>(n_), -1);
    std::vector<int> best;
    for (int s = 0; s < n_; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        std::vector<int> nodes{s};
        comp[static_cast<std::size_t>(s)] = s;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            for (const IncidentEdge& ie : incident(nodes[i])) {
                if (comp[static_cast<std::size_t>(ie.neighbour)] < 0) {
                    comp[static_cast<std::size_t>(ie.neighbour)] = s;
                    nodes.push_back(ie.neighbour);
                }
            }
        }
        if (nodes.size() > best.size()) {
            std::sort(nodes.begin(), nodes.end());
            best = std::move(nodes);
        }
    }
    return best;
}

int SignedGraph::max_degree_node() const {
    int best = 0;
    for (int i = 1; i < n_; ++i)
        if (degree(i) > degree(best)) best = i;
    return best;
}

int SignedGraph::find_edge(int a, int b) const {
    if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_) return -1;
    if (degree(a) > degree(b)) std::swap(a, b);
    for (const IncidentEdge& ie : incident(a))
        if (ie.neighbour == b) return ie.edge_id;
    return -1;
}

SignedGraph SignedGraph::induced(const std::vector<int>& nodes) const {
    std::vector<int> to_new(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        to_new[static_cast<std::size_t>(nodes[i])] = static_cast<int>(i);
    std::vector<Edge> sub;
    for (const Edge& e : edges_) {
        int u = to_new[static_cast<std::size_t>(e.u)];
        int v = to_new[static_cast<std::size_t>(e.v)];
        if (u >= 0 && v >= 0) sub.push_back({u, v, e.sign, e.weight});
    }
    std::vector<std::string> sub_labels;
    sub_labels.reserve(nodes.size());
    for (int node : nodes) sub_labels.push_back(labels_[static_cast<std::size_t>(node)]);
    return SignedGraph(static_cast<int>(nodes.size()), std::move(sub), name_,
                       std::move(sub_labels));
}

long long frustration_count(const SignedGraph& g, const Colouring& x) {
    if (static_cast<int>(x.size()) != g.n())
        throw std::invalid_argument("colouring length must equal node count");
    long long count = 0;
    for (const Edge& e : g.edges()) {
        const bool differ = x[static_cast<std::size_t>(e.u)] != x[static_cast<std::size_t>(e.v)];
        if (e.sign > 0 ? differ : !differ) ++count;
    }
    return count;
}

double weighted_frustration(const SignedGraph& g, const Colouring& x) {
    if (static_cast<int>(x.size()) != g.n())
        throw std::invalid_argument("colouring length must equal node count");
    double total = 0.0;
    for (const Edge& e : g.edges()) {
        const bool differ = x[static_cast<std::size_t>(e.u)] != x[static_cast<std::size_t>(e.v)];
        total += (1.0 - e.weight) / 2.0 + (differ ? e.weight : 0.0);
    }
    return total;
}

SignedGraph switched(const SignedGraph& g, const Colouring& x) {
    if (static_cast<int>(x.size()) != g.n())
        throw std::invalid_argument("colouring length must equal node count");
    std::vector<Edge> edges = g.edges();
    for (Edge& e : edges) {
        if (x[static_cast<std::size_t>(e.u)] != x[static_cast<std::size_t>(e.v)]) {
            e.sign = -e.sign;
            e.weight = -e.weight;
        }
    }
    return SignedGraph(g.n(), std::move(edges), g.name(), g.labels());
}

BalanceCheck is_balanced(const SignedGraph& g) {
    BalanceCheck result;
    Colouring colour(static_cast<std::size_t>(g.n()), 0);
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    std::vector<int> parent(static_cast<std::size_t>(g.n()), -1);
    std::vector<int> depth(static_cast<std::size_t>(g.n()), 0);

    for (int root = 0; root < g.n(); ++root) {
        if (seen[static_cast<std::size_t>(root)]) continue;
        seen[static_cast<std::size_t>(root)] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (const IncidentEdge& ie : g.incident(u)) {
                const int v = ie.neighbour;
                const std::uint8_t expected =
                    ie.sign > 0 ? colour[static_cast<std::size_t>(u)]
                                : static_cast<std::uint8_t>(1 - colour[static_cast<std::size_t>(u)]);
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = 1;
                    colour[static_cast<std::size_t>(v)] = expected;
                    parent[static_cast<std::size_t>(v)] = u;
                    depth[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(u)] + 1;
                    q.push(v);
                } else if (colour[static_cast<std::size_t>(v)] != expected) {
                    // Inconsistent non-tree edge: the tree paths from u and v to
                    // their common ancestor plus edge (u,v) form a negative cycle.
                    std::vector<int> up_u, up_v;
                    int a = u, b = v;
                    while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]) {
                        up_u.push_back(a);
                        a = parent[static_cast<std::size_t>(a)];
                    }
                    while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)]) {
                        up_v.push_back(b);
                        b = parent[static_cast<std::size_t>(b)];
                    }
                    while (a != b) {
                        up_u.push_back(a);
                        up_v.push_back(b);
                        a = parent[static_cast<std::size_t>(a)];
                        b = parent[static_cast<std::size_t>(b)];
                    }
                    result.negative_cycle = std::move(up_u);
                    result.negative_cycle.push_back(a);
                    result.negative_cycle.insert(result.negative_cycle.end(), up_v.rbegin(),
                                                 up_v.rend());
                    result.balanced = false;
                    return result;
                }
            }
        }
    }
    result.balanced = true;
    result.bipartition = std::move(colour);
    return result;
}

SignedGraph reshuffle(const SignedGraph& g, std::uint64_t seed) {
    rng::Engine eng(seed);
    std::vector<int> slots(static_cast<std::size_t>(g.m()));
    for (int i = 0; i < g.m(); ++i) slots[static_cast<std::size_t>(i)] = i;
    // Partial Fisher-Yates: the first m- entries become the negative edges.
    const int k = g.m_minus();
    for (int i = 0; i < k; ++i) {
        const auto j = static_cast<std::size_t>(i) +
                       static_cast<std::size_t>(rng::bounded(
                           eng, static_cast<std::uint64_t>(g.m() - i)));
        std::swap(slots[static_cast<std::size_t>(i)], slots[j]);
    }
    std::vector<char> negative(static_cast<std::size_t>(g.m()), 0);
    for (int i = 0; i < k; ++i) negative[static_cast<std::size_t>(slots[static_cast<std::size_t>(i)])] = 1;

    std::vector<Edge> edges = g.edges();
    for (int id = 0; id < g.m(); ++id) {
        Edge& e = edges[static_cast<std::size_t>(id)];
        const int sign = negative[static_cast<std::size_t>(id)] ? -1 : +1;
        e.sign = sign;
        e.weight = std::abs(e.weight) * sign;
    }
    return SignedGraph(g.n(), std::move(edges), g.name(), g.labels());
}

LocalSearchResult local_search_upper_bound(const SignedGraph& g) {
    return local_search_upper_bound(g, Colouring(static_cast<std::size_t>(g.n()), 0));
}

LocalSearchResult local_search_upper_bound(const SignedGraph& g, Colouring start) {
    if (static_cast<int>(start.size()) != g.n())
        throw std::invalid_argument("colouring length must equal node count");
    // frustrated[i] = frustrated edges incident on i under the current colouring
    std::vector<int> frustrated(static_cast<std::size_t>(g.n()), 0);
    for (const Edge& e : g.edges()) {
        const bool differ = start[static_cast<std::size_t>(e.u)] != start[static_cast<std::size_t>(e.v)];
        if (e.sign > 0 ? differ : !differ) {
            ++frustrated[static_cast<std::size_t>(e.u)];
            ++frustrated[static_cast<std::size_t>(e.v)];
        }
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int u = 0; u < g.n(); ++u) {
            if (2 * frustrated[static_cast<std::size_t>(u)] <= g.degree(u)) continue;
            // Flipping u turns its frustrated incident edges satisfied and vice
            // versa, strictly decreasing the total count.
            start[static_cast<std::size_t>(u)] ^= 1;
            frustrated[static_cast<std::size_t>(u)] =
                g.degree(u) - frustrated[static_cast<std::size_t>(u)];
            for (const IncidentEdge& ie : g.incident(u)) {
                const bool differ = start[static_cast<std::size_t>(u)] !=
                                    start[static_cast<std::size_t>(ie.neighbour)];
                const bool now_frustrated = ie.sign > 0 ? differ : !differ;
                frustrated[static_cast<std::size_t>(ie.neighbour)] += now_frustrated ? +1 : -1;
            }
            changed = true;
        }
    }
    LocalSearchResult out;
    out.upper_bound = frustration_count(g, start);
    out.colouring = std::move(start);
    return out;
}

namespace {

// Hopcroft-Tarjan biconnected components (iterative), returning node sets.
std::vector<std::vector<int>> biconnected_node_sets(const SignedGraph& g) {
    const int n = g.n();
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> components;
    std::vector<std::pair<int, int>> edge_stack; // (u, v) tree/back edges
    int timer = 0;

    struct Frame {
        int node;
        int parent_edge;
        std::size_t next; // index into incident list
    };

    for (int root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] >= 0) continue;
        std::vector<Frame> stack{{root, -1, 0}};
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto inc = g.incident(f.node);
            if (f.next < inc.size()) {
                const IncidentEdge& ie = inc[f.next++];
                if (ie.edge_id == f.parent_edge) continue;
                const int v = ie.neighbour;
                if (disc[static_cast<std::size_t>(v)] < 0) {
                    edge_stack.emplace_back(f.node, v);
                    disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = timer++;
                    stack.push_back({v, ie.edge_id, 0});
                } else if (disc[static_cast<std::size_t>(v)] < disc[static_cast<std::size_t>(f.node)]) {
                    edge_stack.emplace_back(f.node, v);
                    low[static_cast<std::size_t>(f.node)] =
                        std::min(low[static_cast<std::size_t>(f.node)],
                                 disc[static_cast<std::size_t>(v)]);
                }
            } else {
                const int child = f.node;
                stack.pop_back();
                if (stack.empty()) continue;
                const int parent = stack.back().node;
                low[static_cast<std::size_t>(parent)] =
                    std::min(low[static_cast<std::size_t>(parent)],
                             low[static_cast<std::size_t>(child)]);
                if (low[static_cast<std::size_t>(child)] >=
                    disc[static_cast<std::size_t>(parent)]) {
                    // parent is an articulation point (or the root) for this block
                    std::vector<int> nodes;
                    std::vector<char> in_block(static_cast<std::size_t>(n), 0);
                    while (!edge_stack.empty()) {
                        auto [a, b] = edge_stack.back();
                        const bool last = (a == parent && b == child);
                        edge_stack.pop_back();
                        for (int w : {a, b}) {
                            if (!in_block[static_cast<std::size_t>(w)]) {
                                in_block[static_cast<std::size_t>(w)] = 1;
                                nodes.push_back(w);
                            }
                        }
                        if (last) break;
                    }
                    if (nodes.size() >= 2) {
                        std::sort(nodes.begin(), nodes.end());
                        components.push_back(std::move(nodes));
                    }
                }
            }
        }
    }
    return components;
}

} // namespace

Decomposition decompose(const SignedGraph& g) {
    Decomposition out;
    const int n = g.n();
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) degree[static_cast<std::size_t>(i)] = g.degree(i);

    // Iteratively strip nodes of degree <= 1; record removal order + anchors.
    std::vector<int> queue;
    for (int i = 0; i < n; ++i)
        if (degree[static_cast<std::size_t>(i)] <= 1) queue.push_back(i);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const int u = queue[qi];
        if (removed[static_cast<std::size_t>(u)]) continue;
        removed[static_cast<std::size_t>(u)] = 1;
        Decomposition::PrunedNode pn{u, -1, +1};
        for (const IncidentEdge& ie : g.incident(u)) {
            if (removed[static_cast<std::size_t>(ie.neighbour)]) continue;
            pn.anchor = ie.neighbour;
            pn.sign = ie.sign;
            int& d = degree[static_cast<std::size_t>(ie.neighbour)];
            if (--d <= 1) queue.push_back(ie.neighbour);
        }
        out.pruned.push_back(pn);
    }

    std::vector<int> core;
    for (int i = 0; i < n; ++i)
        if (!removed[static_cast<std::size_t>(i)]) core.push_back(i);
    if (core.empty()) return out;

    const SignedGraph core_graph = g.induced(core);
    for (const std::vector<int>& block : biconnected_node_sets(core_graph)) {
        GraphPiece piece;
        piece.graph = core_graph.induced(block);
        piece.node_map.reserve(block.size());
        for (int v : block) piece.node_map.push_back(core[static_cast<std::size_t>(v)]);
        out.pieces.push_back(std::move(piece));
    }
    return out;
}

Colouring lift_colouring(const SignedGraph& g, const Decomposition& d,
                         const std::vector<Colouring>& piece_colourings) {
    if (piece_colourings.size() != d.pieces.size())
        throw std::invalid_argument("one colouring per piece required");
    Colouring full(static_cast<std::size_t>(g.n()), 0);
    std::vector<char> assigned(static_cast<std::size_t>(g.n()), 0);

    // Pieces sharing a cut vertex must agree there; complementing a piece's
    // colouring preserves its frustration count, so pieces are merged along
    // the block-cut forest, flipping whole pieces as needed.
    std::vector<char> done(d.pieces.size(), 0);
    for (std::size_t start = 0; start < d.pieces.size(); ++start) {
        if (done[start]) continue;
        std::vector<std::size_t> frontier{start};
        done[start] = 1;
        while (!frontier.empty()) {
            const std::size_t pi = frontier.back();
            frontier.pop_back();
            const GraphPiece& piece = d.pieces[pi];
            const Colouring& pc = piece_colourings[pi];
            if (static_cast<int>(pc.size()) != piece.graph.n())
                throw std::invalid_argument("piece colouring length mismatch");
            bool flip = false;
            for (std::size_t i = 0; i < piece.node_map.size(); ++i) {
                const int orig = piece.node_map[i];
                if (assigned[static_cast<std::size_t>(orig)]) {
                    flip = (pc[i] ^ 1) == full[static_cast<std::size_t>(orig)];
                    break;
                }
            }
            for (std::size_t i = 0; i < piece.node_map.size(); ++i) {
                const int orig = piece.node_map[i];
                const std::uint8_t c = flip ? static_cast<std::uint8_t>(pc[i] ^ 1) : pc[i];
                if (!assigned[static_cast<std::size_t>(orig)]) {
                    assigned[static_cast<std::size_t>(orig)] = 1;
                    full[static_cast<std::size_t>(orig)] = c;
                }
            }
            for (std::size_t pj = 0; pj < d.pieces.size(); ++pj) {
                if (done[pj]) continue;
                for (int orig : d.pieces[pj].node_map) {
                    if (assigned[static_cast<std::size_t>(orig)]) {
                        done[pj] = 1;
                        frontier.push_back(pj);
                        break;
                    }
                }
            }
        }
    }

    // Pendant nodes in reverse removal order: choose the colour satisfying the
    // single edge that tied them to the graph (isolated nodes stay white).
    for (auto it = d.pruned.rbegin(); it != d.pruned.rend(); ++it) {
        std::uint8_t c = 0;
        if (it->anchor >= 0) {
            const std::uint8_t ac = full[static_cast<std::size_t>(it->anchor)];
            c = it->sign > 0 ? ac : static_cast<std::uint8_t>(ac ^ 1);
        }
        full[static_cast<std::size_t>(it->node)] = c;
        assigned[static_cast<std::size_t>(it->node)] = 1;
    }
    return full;
}

} // namespace sgbal
