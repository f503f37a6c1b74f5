#include "oracles.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "sgbal/generators.hpp"
#include "sgbal/rng.hpp"

namespace oracles {

using namespace sgbal;

long long brute_force_frustration(const SignedGraph& g) {
    const int n = g.n();
    if (n > 24) throw std::invalid_argument("brute force limited to n <= 24");
    if (n == 0) return 0;
    long long best = std::numeric_limits<long long>::max();
    const std::uint64_t limit = 1ULL << (n - 1); // node 0 fixed to colour 0
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        long long count = 0;
        for (const Edge& e : g.edges()) {
            const bool cu = e.u != 0 && ((mask >> (e.u - 1)) & 1);
            const bool cv = e.v != 0 && ((mask >> (e.v - 1)) & 1);
            const bool differ = cu != cv;
            if (e.sign > 0 ? differ : !differ) ++count;
        }
        best = std::min(best, count);
    }
    return best;
}

double brute_force_weighted(const SignedGraph& g) {
    const int n = g.n();
    if (n > 24) throw std::invalid_argument("brute force limited to n <= 24");
    if (n == 0) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    const std::uint64_t limit = 1ULL << (n - 1);
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        double cost = 0.0;
        for (const Edge& e : g.edges()) {
            const bool cu = e.u != 0 && ((mask >> (e.u - 1)) & 1);
            const bool cv = e.v != 0 && ((mask >> (e.v - 1)) & 1);
            cost += (1.0 - e.weight) / 2.0 + (cu != cv ? e.weight : 0.0);
        }
        best = std::min(best, cost);
    }
    return best;
}

namespace {

long long kcolour_cost(const SignedGraph& g, const std::vector<int>& colour) {
    long long count = 0;
    for (const Edge& e : g.edges()) {
        const bool differ = colour[static_cast<std::size_t>(e.u)] !=
                            colour[static_cast<std::size_t>(e.v)];
        if (e.sign > 0 ? differ : !differ) ++count;
    }
    return count;
}

void kcolour_rec(const SignedGraph& g, int k, std::vector<int>& colour, int node,
                 int used, long long& best) {
    if (node == g.n()) {
        best = std::min(best, kcolour_cost(g, colour));
        return;
    }
    const int top = std::min(used, k - 1); // restricted growth: reuse or open one new colour
    for (int c = 0; c <= top; ++c) {
        colour[static_cast<std::size_t>(node)] = c;
        kcolour_rec(g, k, colour, node + 1, std::max(used, c + 1), best);
    }
}

} // namespace

long long brute_force_kcolour(const SignedGraph& g, int k) {
    if (g.n() > 12) throw std::invalid_argument("partition oracle limited to n <= 12");
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (g.n() == 0) return 0;
    long long best = std::numeric_limits<long long>::max();
    std::vector<int> colour(static_cast<std::size_t>(g.n()), 0);
    kcolour_rec(g, k, colour, 1, 1, best); // node 0 takes colour 0 w.l.o.g.
    return best;
}

std::pair<long long, long long> direct_triangle_counts(const SignedGraph& g) {
    const int n = g.n();
    std::vector<std::vector<int>> sign(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n), 0));
    for (const Edge& e : g.edges()) {
        sign[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = e.sign;
        sign[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = e.sign;
    }
    long long balanced = 0, unbalanced = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (sign[i][j] == 0) continue;
            for (int l = j + 1; l < n; ++l) {
                if (sign[i][l] == 0 || sign[j][l] == 0) continue;
                if (sign[i][j] * sign[i][l] * sign[j][l] > 0)
                    ++balanced;
                else
                    ++unbalanced;
            }
        }
    return {balanced, unbalanced};
}

namespace {

std::vector<std::vector<double>> matmul(const std::vector<std::vector<double>>& a,
                                        const std::vector<std::vector<double>>& b) {
    const std::size_t n = a.size();
    std::vector<std::vector<double>> c(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = a[i][k];
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += aik * b[k][j];
        }
    return c;
}

double exp_trace_series(std::vector<std::vector<double>> a, int terms) {
    const std::size_t n = a.size();
    double total = static_cast<double>(n); // p = 0 term: Tr(I)
    std::vector<std::vector<double>> power(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) power[i][i] = 1.0;
    double factorial = 1.0;
    for (int p = 1; p < terms; ++p) {
        power = matmul(power, a);
        factorial *= p;
        double trace = 0.0;
        for (std::size_t i = 0; i < n; ++i) trace += power[i][i];
        total += trace / factorial;
    }
    return total;
}

} // namespace

double walk_balance_series(const SignedGraph& g, int terms) {
    const auto n = static_cast<std::size_t>(g.n());
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    std::vector<std::vector<double>> abs_a(n, std::vector<double>(n, 0.0));
    for (const Edge& e : g.edges()) {
        const auto u = static_cast<std::size_t>(e.u);
        const auto v = static_cast<std::size_t>(e.v);
        a[u][v] = a[v][u] = static_cast<double>(e.sign);
        abs_a[u][v] = abs_a[v][u] = 1.0;
    }
    const double k = exp_trace_series(std::move(a), terms) /
                     exp_trace_series(std::move(abs_a), terms);
    return (k + 1.0) / 2.0;
}

CycleCounts subset_cycle_counts(const SignedGraph& g, int kmax) {
    const int n = g.n();
    if (n > 9) throw std::invalid_argument("subset cycle oracle limited to n <= 9");
    std::vector<std::vector<int>> sign(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n), 0));
    for (const Edge& e : g.edges()) {
        sign[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = e.sign;
        sign[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = e.sign;
    }
    CycleCounts counts;
    counts.balanced.assign(static_cast<std::size_t>(kmax) + 1, 0);
    counts.unbalanced.assign(static_cast<std::size_t>(kmax) + 1, 0);
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        const int size = __builtin_popcount(mask);
        if (size < 3 || size > kmax) continue;
        std::vector<int> verts;
        for (int i = 0; i < n; ++i)
            if (mask & (1U << i)) verts.push_back(i);
        std::vector<int> rest(verts.begin() + 1, verts.end());
        std::sort(rest.begin(), rest.end());
        do {
            // A cycle visits min(S) first; fixing rest.front() < rest.back()
            // keeps exactly one of the two traversal directions.
            if (rest.front() > rest.back()) continue;
            int product = 1;
            bool ok = true;
            int prev = verts[0];
            for (int next : rest) {
                const int s = sign[static_cast<std::size_t>(prev)][static_cast<std::size_t>(next)];
                if (s == 0) {
                    ok = false;
                    break;
                }
                product *= s;
                prev = next;
            }
            if (ok) {
                const int s = sign[static_cast<std::size_t>(prev)][static_cast<std::size_t>(verts[0])];
                if (s == 0) ok = false;
                else product *= s;
            }
            if (!ok) continue;
            if (product > 0)
                ++counts.balanced[static_cast<std::size_t>(size)];
            else
                ++counts.unbalanced[static_cast<std::size_t>(size)];
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    return counts;
}

double milp_optimum(const SignedGraph& g, const MilpModel& model) {
    const int n = g.n();
    if (n > 12) throw std::invalid_argument("model oracle limited to n <= 12");
    double best = std::numeric_limits<double>::infinity();
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        std::vector<double> x(model.variables.size(), 0.0);
        for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = (mask >> i) & 1;
        std::size_t next = static_cast<std::size_t>(n);
        for (const Edge& e : g.edges()) {
            const double xu = x[static_cast<std::size_t>(e.u)];
            const double xv = x[static_cast<std::size_t>(e.v)];
            const bool differ = xu != xv;
            const bool frustrated = e.sign > 0 ? differ : !differ;
            switch (model.formulation) {
            case Formulation::ubqp:
                break; // node variables only
            case Formulation::and_product:
                x[next++] = xu * xv;
                break;
            case Formulation::xor_var:
                x[next++] = frustrated ? 1.0 : 0.0;
                break;
            case Formulation::abs_split: {
                const double expr = e.sign > 0 ? xu - xv : xu + xv - 1.0;
                x[next++] = std::max(0.0, expr);  // e part
                x[next++] = std::max(0.0, -expr); // h part
                break;
            }
            }
        }
        assert(model.formulation == Formulation::ubqp || next == model.variables.size());
        if (!model.feasible(x)) continue;
        best = std::min(best, model.objective_value(x));
    }
    return best;
}

double milp_optimum_exhaustive(const MilpModel& model) {
    const std::size_t vars = model.variables.size();
    if (vars > 20) throw std::invalid_argument("exhaustive model oracle limited to 20 variables");
    double best = std::numeric_limits<double>::infinity();
    for (std::uint32_t mask = 0; mask < (1U << vars); ++mask) {
        std::vector<double> x(vars, 0.0);
        for (std::size_t i = 0; i < vars; ++i) x[i] = (mask >> i) & 1;
        if (!model.feasible(x)) continue;
        best = std::min(best, model.objective_value(x));
    }
    return best;
}

SignedGraph random_graph(int n, long long m, double negative_fraction, std::uint64_t seed) {
    FamilySpec spec;
    spec.family = Family::gnm;
    spec.n = n;
    spec.m = m;
    spec.signs = {SignAssignment::Mode::exact_fraction, negative_fraction};
    spec.seed = seed;
    return generate(spec);
}

SignedGraph random_weighted_graph(int n, long long m, std::uint64_t seed) {
    SignedGraph base = random_graph(n, m, 0.0, seed);
    rng::Engine eng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(base.m()));
    for (const Edge& e : base.edges()) {
        const int decile = 1 + static_cast<int>(rng::bounded(eng, 10)); // 0.1 .. 1.0
        const int s = rng::bounded(eng, 2) == 0 ? -1 : +1;
        edges.push_back({e.u, e.v, s, s * decile / 10.0});
    }
    return SignedGraph(n, std::move(edges), "weighted-test");
}

} // namespace oracles
