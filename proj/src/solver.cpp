#include "sgbal/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <type_traits>
#include <utility>

namespace sgbal {

namespace {

using Clock = std::chrono::steady_clock;

template <typename Value>
constexpr Value value_infinity() {
    if constexpr (std::is_floating_point_v<Value>)
        return std::numeric_limits<Value>::infinity();
    else
        return std::numeric_limits<Value>::max();
}

// Cost of one edge given whether its endpoints get different colours.
// Integer mode counts frustrated edges; floating mode uses the weighted
// objective (1-w)/2 + w*[differ], which reduces to the count on +-1 weights.
template <typename Value>
Value edge_cost(const IncidentEdge& ie, bool differ) {
    if constexpr (std::is_floating_point_v<Value>)
        return static_cast<Value>((1.0 - ie.weight) / 2.0 + (differ ? ie.weight : 0.0));
    else
        return (ie.sign > 0 ? differ : !differ) ? 1 : 0;
}

template <typename Value>
Value colouring_cost(const SignedGraph& g, const Colouring& x) {
    if constexpr (std::is_floating_point_v<Value>)
        return weighted_frustration(g, x);
    else
        return frustration_count(g, x);
}

struct Triangle {
    int a, b, c;    // nodes, a < b < c
    int ab, ac, bc; // edge ids
};

// Under two colours any unbalanced triangle keeps a frustrated edge; with
// three or more colours only single-negative triangles do (an all-negative
// triangle is satisfied by three distinct colours).
enum class TriangleKind { unbalanced, single_negative };

TriangleKind triangle_kind_for(int k) {
    return k >= 3 ? TriangleKind::single_negative : TriangleKind::unbalanced;
}

// Triangles stream in lexicographic (a,b,c) node order: edges are stored
// lexicographically and incident lists are sorted by neighbour.
std::vector<Triangle> enumerate_triangles(const SignedGraph& g, TriangleKind kind) {
    std::vector<Triangle> out;
    for (int id = 0; id < g.m(); ++id) {
        const Edge& e = g.edge(id);
        const auto left = g.incident(e.u);
        const auto right = g.incident(e.v);
        std::size_t i = 0, j = 0;
        while (i < left.size() && j < right.size()) {
            if (left[i].neighbour < right[j].neighbour) {
                ++i;
            } else if (left[i].neighbour > right[j].neighbour) {
                ++j;
            } else {
                if (left[i].neighbour > e.v) {
                    const int negatives =
                        (e.sign < 0) + (left[i].sign < 0) + (right[j].sign < 0);
                    const bool take = kind == TriangleKind::unbalanced
                                          ? negatives % 2 == 1
                                          : negatives == 1;
                    if (take)
                        out.push_back({e.u, e.v, left[i].neighbour, id,
                                       left[i].edge_id, right[j].edge_id});
                }
                ++i;
                ++j;
            }
        }
    }
    return out;
}

long long greedy_pack_size(const std::vector<Triangle>& triangles, int m) {
    std::vector<char> used(static_cast<std::size_t>(m), 0);
    long long packed = 0;
    for (const Triangle& t : triangles) {
        if (used[static_cast<std::size_t>(t.ab)] || used[static_cast<std::size_t>(t.ac)] ||
            used[static_cast<std::size_t>(t.bc)])
            continue;
        used[static_cast<std::size_t>(t.ab)] = 1;
        used[static_cast<std::size_t>(t.ac)] = 1;
        used[static_cast<std::size_t>(t.bc)] = 1;
        ++packed;
    }
    return packed;
}

long long packing_bound(const SignedGraph& g, int k) {
    return greedy_pack_size(enumerate_triangles(g, triangle_kind_for(k)), g.m());
}

void validate_config(const SolverConfig& cfg) {
    if (cfg.gap < 0) throw std::invalid_argument("gap tolerance must be nonnegative");
    if (cfg.workers < 1) throw std::invalid_argument("worker count must be at least 1");
    if (cfg.node_budget && *cfg.node_budget < 0)
        throw std::invalid_argument("node budget must be nonnegative");
    if (cfg.time_limit_seconds && !(*cfg.time_limit_seconds > 0.0))
        throw std::invalid_argument("time limit must be positive");
}

std::vector<int> frustrated_edge_ids(const SignedGraph& g, const Colouring& x) {
    std::vector<int> out;
    for (int id = 0; id < g.m(); ++id) {
        const Edge& e = g.edge(id);
        const bool differ =
            x[static_cast<std::size_t>(e.u)] != x[static_cast<std::size_t>(e.v)];
        if (e.sign > 0 ? differ : !differ) out.push_back(id);
    }
    return out;
}

// Cancellation and node accounting shared across pieces, tasks and threads.
struct SearchLimits {
    std::optional<Clock::time_point> deadline;
    std::optional<std::atomic<long long>> budget; // expansions still allowed
    std::atomic<long long> nodes{0};
    std::atomic<bool> stopped{false};

    explicit SearchLimits(const SolverConfig& cfg) {
        if (cfg.time_limit_seconds)
            deadline = Clock::now() +
                       std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(*cfg.time_limit_seconds));
        if (cfg.node_budget) budget.emplace(*cfg.node_budget);
    }

    bool stop_requested() {
        if (stopped.load(std::memory_order_relaxed)) return true;
        if (deadline && Clock::now() >= *deadline) {
            stopped.store(true, std::memory_order_relaxed);
            return true;
        }
        return false;
    }

    // Accounts one node expansion; false once any limit has tripped.
    bool charge() {
        if (stop_requested()) return false;
        if (budget && budget->fetch_sub(1, std::memory_order_relaxed) <= 0) {
            stopped.store(true, std::memory_order_relaxed);
            return false;
        }
        nodes.fetch_add(1, std::memory_order_relaxed);
        return true;
    }
};

// Monotonically-improving shared incumbent; the atomic value serves lock-free
// bound tests, the colouring is kept consistent under the mutex.
template <typename Value>
struct Incumbent {
    std::atomic<Value> value{value_infinity<Value>()};
    std::mutex mu;
    Colouring colouring;

    void offer(Value candidate, const std::vector<int>& colours) {
        if (candidate >= value.load(std::memory_order_relaxed)) return;
        std::scoped_lock lock(mu);
        if (candidate >= value.load(std::memory_order_relaxed)) return;
        colouring.assign(colours.begin(), colours.end());
        value.store(candidate, std::memory_order_relaxed);
    }

    void offer_seed(Value candidate, Colouring seed) {
        std::scoped_lock lock(mu);
        if (candidate >= value.load(std::memory_order_relaxed)) return;
        colouring = std::move(seed);
        value.store(candidate, std::memory_order_relaxed);
    }
};

template <typename Value>
struct PieceOutcome {
    Value value = 0;     // best objective found for the piece
    Colouring colouring; // certificate achieving it
    Value proven = 0;    // proven lower bound for the piece
};

// All-zero start, then best single-node colour moves until no strict
// improvement remains; terminates because the objective strictly decreases.
template <typename Value>
std::pair<Value, Colouring> greedy_seed(const SignedGraph& g, int k, bool enabled) {
    Colouring x(static_cast<std::size_t>(g.n()), 0);
    if (enabled && g.n() > 0) {
        std::vector<Value> cost_if(static_cast<std::size_t>(k));
        bool improved = true;
        while (improved) {
            improved = false;
            for (int v = 0; v < g.n(); ++v) {
                std::fill(cost_if.begin(), cost_if.end(), Value{0});
                for (const IncidentEdge& ie : g.incident(v)) {
                    const int cu = x[static_cast<std::size_t>(ie.neighbour)];
                    for (int c = 0; c < k; ++c)
                        cost_if[static_cast<std::size_t>(c)] += edge_cost<Value>(ie, cu != c);
                }
                int best = x[static_cast<std::size_t>(v)];
                for (int c = 0; c < k; ++c)
                    if (cost_if[static_cast<std::size_t>(c)] <
                        cost_if[static_cast<std::size_t>(best)])
                        best = c;
                if (best != x[static_cast<std::size_t>(v)]) {
                    x[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(best);
                    improved = true;
                }
            }
        }
    }
    return {colouring_cost<Value>(g, x), std::move(x)};
}

// Depth-first branch and bound over one piece.  `k` is the colour count;
// `restrict_colours` enables the new-colour-only-after-previous rule (which
// also pins the first branched node to colour 0); `fixed_colour` >= 0 pins
// the maximum-degree node instead (two-colour mode).
template <typename Value>
class PieceSearch {
public:
    PieceSearch(const SignedGraph& g, const SolverConfig& cfg, int k,
                bool restrict_colours, int fixed_colour, SearchLimits& limits)
        : g_(g), cfg_(cfg), k_(k), restrict_colours_(restrict_colours),
          fixed_colour_(fixed_colour), gap_(static_cast<Value>(cfg.gap)), limits_(limits) {
        order_.resize(static_cast<std::size_t>(g.n()));
        std::iota(order_.begin(), order_.end(), 0);
        if (cfg.use_degree_branching)
            std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
                return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
            });
        if (fixed_colour_ >= 0 && g.n() > 0) {
            const auto pinned = std::find(order_.begin(), order_.end(), g.max_degree_node());
            std::rotate(order_.begin(), pinned, pinned + 1);
        }
        if (cfg.use_triangle_lower_bound && !std::is_floating_point_v<Value>)
            triangles_ = enumerate_triangles(g, triangle_kind_for(k));
    }

    PieceOutcome<Value> run(Value seed_value, Colouring seed_colouring) {
        incumbent_.offer_seed(seed_value, std::move(seed_colouring));
        if (cfg_.workers <= 1)
            run_sequential();
        else
            run_parallel();
        PieceOutcome<Value> out;
        out.value = incumbent_.value.load();
        out.colouring = incumbent_.colouring;
        out.proven = std::min(out.value, std::min(min_pruned_, min_unexplored_));
        return out;
    }

private:
    struct State {
        std::vector<int> colour; // -1 = uncoloured
        Value fixed = 0;         // cost of edges with both endpoints coloured
        int used_colours = 0;    // high-water mark for the new-colour rule
        std::vector<int> edge_stamp;
        int epoch = 0;
        std::vector<std::vector<int>> child_buf; // per-depth child scratch
        std::vector<int> scores;
        Value min_pruned = value_infinity<Value>();
        Value min_unexplored = value_infinity<Value>();
    };

    State make_state() const {
        State s;
        s.colour.assign(static_cast<std::size_t>(g_.n()), -1);
        s.edge_stamp.assign(static_cast<std::size_t>(g_.m()), 0);
        s.child_buf.resize(static_cast<std::size_t>(g_.n()));
        return s;
    }

    Value assign(State& s, int v, int c) const {
        Value delta = 0;
        for (const IncidentEdge& ie : g_.incident(v)) {
            const int cu = s.colour[static_cast<std::size_t>(ie.neighbour)];
            if (cu >= 0) delta += edge_cost<Value>(ie, cu != c);
        }
        s.colour[static_cast<std::size_t>(v)] = c;
        s.fixed += delta;
        return delta;
    }

    void unassign(State& s, int v, Value delta) const {
        s.colour[static_cast<std::size_t>(v)] = -1;
        s.fixed -= delta;
    }

    // Fixed cost plus a greedy packing of edge-disjoint guaranteed-frustrated
    // triangles whose nodes are all still uncoloured.
    Value bound_of(State& s) const {
        Value bound = s.fixed;
        if (!triangles_.empty()) {
            ++s.epoch;
            long long packed = 0;
            for (const Triangle& t : triangles_) {
                if (s.colour[static_cast<std::size_t>(t.a)] >= 0 ||
                    s.colour[static_cast<std::size_t>(t.b)] >= 0 ||
                    s.colour[static_cast<std::size_t>(t.c)] >= 0)
                    continue;
                if (s.edge_stamp[static_cast<std::size_t>(t.ab)] == s.epoch ||
                    s.edge_stamp[static_cast<std::size_t>(t.ac)] == s.epoch ||
                    s.edge_stamp[static_cast<std::size_t>(t.bc)] == s.epoch)
                    continue;
                s.edge_stamp[static_cast<std::size_t>(t.ab)] = s.epoch;
                s.edge_stamp[static_cast<std::size_t>(t.ac)] = s.epoch;
                s.edge_stamp[static_cast<std::size_t>(t.bc)] = s.epoch;
                ++packed;
            }
            bound += static_cast<Value>(packed);
        }
        return bound;
    }

    // Allowed colours for the node at `depth`, best first: most agreement
    // with the signs of edges to already-coloured neighbours, ties to the
    // smaller colour.
    const std::vector<int>& children_of(State& s, int depth) const {
        std::vector<int>& out = s.child_buf[static_cast<std::size_t>(depth)];
        out.clear();
        if (depth == 0 && fixed_colour_ >= 0) {
            out.push_back(fixed_colour_);
            return out;
        }
        const int highest =
            restrict_colours_ ? std::min(k_ - 1, s.used_colours) : k_ - 1;
        s.scores.assign(static_cast<std::size_t>(highest) + 1, 0);
        const int v = order_[static_cast<std::size_t>(depth)];
        for (const IncidentEdge& ie : g_.incident(v)) {
            const int cu = s.colour[static_cast<std::size_t>(ie.neighbour)];
            if (cu < 0) continue;
            if (ie.sign > 0) {
                if (cu <= highest) ++s.scores[static_cast<std::size_t>(cu)];
            } else {
                for (int c = 0; c <= highest; ++c)
                    if (c != cu) ++s.scores[static_cast<std::size_t>(c)];
            }
        }
        for (int c = 0; c <= highest; ++c) out.push_back(c);
        std::stable_sort(out.begin(), out.end(), [&](int a, int b) {
            return s.scores[static_cast<std::size_t>(a)] >
                   s.scores[static_cast<std::size_t>(b)];
        });
        return out;
    }

    void dfs(State& s, int depth, Value entry_bound) const {
        if (!limits_.charge()) {
            s.min_unexplored = std::min(s.min_unexplored, entry_bound);
            return;
        }
        if (depth == g_.n()) {
            incumbent_.offer(s.fixed, s.colour);
            return;
        }
        const int v = order_[static_cast<std::size_t>(depth)];
        const std::vector<int>& children = children_of(s, depth);
        for (int c : children) {
            if (limits_.stopped.load(std::memory_order_relaxed)) {
                s.min_unexplored = std::min(s.min_unexplored, entry_bound);
                return;
            }
            const int prev_used = s.used_colours;
            if (c == s.used_colours) ++s.used_colours;
            const Value delta = assign(s, v, c);
            const Value bound = bound_of(s);
            if (bound >= incumbent_.value.load(std::memory_order_relaxed) - gap_)
                s.min_pruned = std::min(s.min_pruned, bound);
            else
                dfs(s, depth + 1, bound);
            unassign(s, v, delta);
            s.used_colours = prev_used;
        }
    }

    void run_sequential() {
        State s = make_state();
        const Value root_bound = bound_of(s);
        if (root_bound >= incumbent_.value.load(std::memory_order_relaxed) - gap_)
            s.min_pruned = std::min(s.min_pruned, root_bound);
        else
            dfs(s, 0, root_bound);
        absorb(s);
    }

    struct Task {
        std::vector<int> prefix; // colours along order_[0..depth)
    };

    State replay(const Task& task) const {
        State s = make_state();
        for (std::size_t d = 0; d < task.prefix.size(); ++d) {
            const int c = task.prefix[d];
            if (c == s.used_colours) ++s.used_colours;
            assign(s, order_[d], c);
        }
        return s;
    }

    // Deterministically expands a frontier of subtree roots breadth-first,
    // then lets a thread pool drain it against the shared incumbent.
    void run_parallel() {
        std::vector<Task> tasks;
        std::vector<Task> open;
        open.push_back({});
        std::size_t head = 0;
        const std::size_t target = static_cast<std::size_t>(cfg_.workers) * 8;
        while (head < open.size() && open.size() - head + tasks.size() < target) {
            Task task = open[head++];
            const int depth = static_cast<int>(task.prefix.size());
            if (depth >= g_.n() || depth > g_.n() / 2) {
                tasks.push_back(std::move(task));
                continue;
            }
            State s = replay(task);
            for (int c : children_of(s, depth)) {
                Task child;
                child.prefix = task.prefix;
                child.prefix.push_back(c);
                open.push_back(std::move(child));
            }
        }
        tasks.insert(tasks.end(), std::make_move_iterator(open.begin() + static_cast<std::ptrdiff_t>(head)),
                     std::make_move_iterator(open.end()));

        std::atomic<std::size_t> next{0};
        auto drain = [&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= tasks.size()) break;
                State s = replay(tasks[i]);
                const Value bound = bound_of(s);
                if (bound >= incumbent_.value.load(std::memory_order_relaxed) - gap_)
                    s.min_pruned = std::min(s.min_pruned, bound);
                else
                    dfs(s, static_cast<int>(tasks[i].prefix.size()), bound);
                absorb(s);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(cfg_.workers));
        for (int t = 0; t < cfg_.workers; ++t) pool.emplace_back(drain);
        for (std::thread& t : pool) t.join();
    }

    void absorb(const State& s) {
        std::scoped_lock lock(merge_mu_);
        min_pruned_ = std::min(min_pruned_, s.min_pruned);
        min_unexplored_ = std::min(min_unexplored_, s.min_unexplored);
    }

    const SignedGraph& g_;
    const SolverConfig& cfg_;
    int k_;
    bool restrict_colours_;
    int fixed_colour_;
    Value gap_;
    SearchLimits& limits_;
    std::vector<int> order_;
    std::vector<Triangle> triangles_;
    mutable Incumbent<Value> incumbent_;
    std::mutex merge_mu_;
    Value min_pruned_ = value_infinity<Value>();
    Value min_unexplored_ = value_infinity<Value>();
};

Decomposition make_decomposition(const SignedGraph& g, bool enabled) {
    if (enabled) return decompose(g);
    Decomposition whole;
    GraphPiece piece;
    piece.graph = g;
    piece.node_map.resize(static_cast<std::size_t>(g.n()));
    std::iota(piece.node_map.begin(), piece.node_map.end(), 0);
    whole.pieces.push_back(std::move(piece));
    return whole;
}

// Reassembles piece colourings into a full one.  Pieces connected through
// shared cut vertices are visited breadth-first, so each newly visited piece
// meets the already-coloured region in exactly one vertex; a colour
// transposition aligns it there without changing the piece's cost.  Pruned
// nodes are recoloured in reverse removal order to satisfy their one edge.
Colouring merge_pieces(const SignedGraph& g, const Decomposition& dec,
                       const std::vector<Colouring>& piece_cols, int k) {
    const int n = g.n();
    std::vector<int> assigned(static_cast<std::size_t>(n), -1);
    const std::size_t np = dec.pieces.size();
    std::vector<std::vector<int>> pieces_of(static_cast<std::size_t>(n));
    for (std::size_t p = 0; p < np; ++p)
        for (int node : dec.pieces[p].node_map)
            pieces_of[static_cast<std::size_t>(node)].push_back(static_cast<int>(p));

    std::vector<char> done(np, 0);
    std::vector<int> queue;
    for (std::size_t start = 0; start < np; ++start) {
        if (done[start]) continue;
        done[start] = 1;
        queue.clear();
        queue.push_back(static_cast<int>(start));
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const auto& map = dec.pieces[static_cast<std::size_t>(queue[qi])].node_map;
            const Colouring& pc = piece_cols[static_cast<std::size_t>(queue[qi])];
            int from = -1, to = -1;
            for (std::size_t i = 0; i < map.size(); ++i)
                if (assigned[static_cast<std::size_t>(map[i])] >= 0) {
                    from = pc[i];
                    to = assigned[static_cast<std::size_t>(map[i])];
                    break;
                }
            for (std::size_t i = 0; i < map.size(); ++i) {
                int c = pc[i];
                if (from >= 0) {
                    if (c == from)
                        c = to;
                    else if (c == to)
                        c = from;
                }
                if (assigned[static_cast<std::size_t>(map[i])] < 0)
                    assigned[static_cast<std::size_t>(map[i])] = c;
            }
            for (int node : map)
                for (int nb : pieces_of[static_cast<std::size_t>(node)])
                    if (!done[static_cast<std::size_t>(nb)]) {
                        done[static_cast<std::size_t>(nb)] = 1;
                        queue.push_back(nb);
                    }
        }
    }

    for (auto it = dec.pruned.rbegin(); it != dec.pruned.rend(); ++it) {
        if (it->anchor < 0) {
            assigned[static_cast<std::size_t>(it->node)] = 0;
            continue;
        }
        int a = assigned[static_cast<std::size_t>(it->anchor)];
        if (a < 0) a = assigned[static_cast<std::size_t>(it->anchor)] = 0;
        assigned[static_cast<std::size_t>(it->node)] =
            it->sign > 0 ? a : (a + 1) % std::max(k, 2);
    }
    for (int v = 0; v < n; ++v)
        if (assigned[static_cast<std::size_t>(v)] < 0)
            assigned[static_cast<std::size_t>(v)] = 0;
    return Colouring(assigned.begin(), assigned.end());
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Shared skeleton for the integer solvers (two-colour and k-colour).
FrustrationResult solve_integer(const SignedGraph& g, int k, bool restrict_colours,
                                int fixed_colour, const SolverConfig& cfg) {
    const auto t0 = Clock::now();
    SearchLimits limits(cfg);
    const Decomposition dec = make_decomposition(g, cfg.use_preprocessing);

    std::vector<Colouring> cols;
    cols.reserve(dec.pieces.size());
    long long total_proven = 0;
    for (const GraphPiece& piece : dec.pieces) {
        auto [seed_value, seed_col] =
            greedy_seed<long long>(piece.graph, k, cfg.use_local_search_seed);
        if (limits.stop_requested()) {
            cols.push_back(std::move(seed_col));
            continue;
        }
        PieceSearch<long long> search(piece.graph, cfg, k, restrict_colours,
                                      fixed_colour, limits);
        PieceOutcome<long long> out = search.run(seed_value, std::move(seed_col));
        cols.push_back(std::move(out.colouring));
        total_proven += out.proven;
    }

    FrustrationResult res;
    res.colouring = merge_pieces(g, dec, cols, k);
    res.frustrated_edges = frustrated_edge_ids(g, res.colouring);
    res.L = static_cast<long long>(res.frustrated_edges.size());
    res.lower_bound = std::max(total_proven, packing_bound(g, k));
    res.status = res.lower_bound >= res.L ? SolveStatus::optimal
                 : limits.stopped.load()  ? SolveStatus::budget_terminated
                                          : SolveStatus::gap_terminated;
    res.nodes_explored = limits.nodes.load();
    res.wall_seconds = seconds_since(t0);
    return res;
}

} // namespace

std::string to_string(SolveStatus status) {
    switch (status) {
        case SolveStatus::optimal: return "optimal";
        case SolveStatus::gap_terminated: return "gap-terminated";
        case SolveStatus::budget_terminated: return "budget-terminated";
    }
    return "unknown";
}

long long triangle_packing_lower_bound(const SignedGraph& g) {
    return greedy_pack_size(enumerate_triangles(g, TriangleKind::unbalanced), g.m());
}

FrustrationResult solve(const SignedGraph& g, const SolverConfig& cfg) {
    validate_config(cfg);
    return solve_integer(g, 2, false, cfg.use_colour_fixing ? 1 : -1, cfg);
}

FrustrationResult solve_kcolour(const SignedGraph& g, int k, const SolverConfig& cfg) {
    if (k < 1) throw std::invalid_argument("colour count must be at least 1");
    validate_config(cfg);
    if (k == 1) {
        // One colour leaves exactly the negative edges frustrated.
        const auto t0 = Clock::now();
        FrustrationResult res;
        res.colouring.assign(static_cast<std::size_t>(g.n()), 0);
        res.L = g.m_minus();
        res.lower_bound = res.L;
        res.status = SolveStatus::optimal;
        for (int id = 0; id < g.m(); ++id)
            if (g.edge(id).sign < 0) res.frustrated_edges.push_back(id);
        res.wall_seconds = seconds_since(t0);
        return res;
    }
    // An optimum never needs more than n colours, and certificate colours are
    // stored in bytes.
    const int effective_k = std::min(k, std::max(g.n(), 2));
    if (effective_k > 256)
        throw std::invalid_argument("more than 256 distinguishable colours are not supported");
    return solve_integer(g, effective_k, true, -1, cfg);
}

WeightedFrustrationResult solve_weighted(const SignedGraph& g, const SolverConfig& cfg) {
    validate_config(cfg);
    const auto t0 = Clock::now();
    SearchLimits limits(cfg);
    const Decomposition dec = make_decomposition(g, cfg.use_preprocessing);

    // A pruned pendant edge still carries its best-case cost (1-|w|)/2.
    double pendant_cost = 0.0;
    for (const Decomposition::PrunedNode& pn : dec.pruned)
        if (pn.anchor >= 0) {
            const Edge& e = g.edge(g.find_edge(pn.node, pn.anchor));
            pendant_cost += (1.0 - std::abs(e.weight)) / 2.0;
        }

    std::vector<Colouring> cols;
    cols.reserve(dec.pieces.size());
    double total_proven = 0.0;
    bool all_proven = true;
    for (const GraphPiece& piece : dec.pieces) {
        auto [seed_value, seed_col] =
            greedy_seed<double>(piece.graph, 2, cfg.use_local_search_seed);
        if (limits.stop_requested()) {
            cols.push_back(std::move(seed_col));
            all_proven = false;
            continue;
        }
        PieceSearch<double> search(piece.graph, cfg, 2, false,
                                   cfg.use_colour_fixing ? 1 : -1, limits);
        PieceOutcome<double> out = search.run(seed_value, std::move(seed_col));
        cols.push_back(std::move(out.colouring));
        total_proven += out.proven;
        if (out.proven < out.value) all_proven = false;
    }

    WeightedFrustrationResult res;
    res.colouring = merge_pieces(g, dec, cols, 2);
    res.L = weighted_frustration(g, res.colouring);
    res.frustrated_edges = frustrated_edge_ids(g, res.colouring);
    if (!limits.stopped.load() && all_proven) {
        res.status = SolveStatus::optimal;
        res.lower_bound = res.L;
    } else {
        res.status = limits.stopped.load() ? SolveStatus::budget_terminated
                                           : SolveStatus::gap_terminated;
        res.lower_bound = std::min(res.L, total_proven + pendant_cost);
    }
    res.nodes_explored = limits.nodes.load();
    res.wall_seconds = seconds_since(t0);
    return res;
}

long long ising_hamiltonian(const FrustrationResult& result, int m) {
    if (result.status != SolveStatus::optimal)
        throw std::invalid_argument("ground-state energy requires an optimal result, got " +
                                    to_string(result.status));
    return 2 * result.L - m;
}

} // namespace sgbal
