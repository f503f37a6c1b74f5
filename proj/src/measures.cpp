#include "sgbal/measures.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "sgbal/jacobi.hpp"

namespace sgbal {

namespace {

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

SymMatrix adjacency(const SignedGraph& g, bool absolute) {
    SymMatrix a(g.n());
    for (const Edge& e : g.edges()) {
        const double w = absolute ? std::abs(e.weight) : e.weight;
        a.at(e.u, e.v) = w;
        a.at(e.v, e.u) = w;
    }
    return a;
}

struct CycleEnumerator {
    const SignedGraph& g;
    CycleCensus& census;
    long long count = 0;
    bool stop = false;
    std::vector<char> on_path;
    std::vector<int> path;

    void run(int start) {
        on_path.assign(static_cast<std::size_t>(g.n()), 0);
        path.assign(1, start);
        on_path[static_cast<std::size_t>(start)] = 1;
        dfs(start, start, +1);
    }

    void dfs(int start, int u, int sign) {
        for (const IncidentEdge& ie : g.incident(u)) {
            if (stop) return;
            const int v = ie.neighbour;
            const int depth = static_cast<int>(path.size());
            if (v == start && depth >= 3 && path[1] < u) {
                // Close the cycle; the path[1] < u test keeps one of the two
                // traversal directions, so each cycle is recorded once.
                if (count == census.limit) {
                    census.truncated = true;
                    stop = true;
                    return;
                }
                ++count;
                auto& bucket = sign * ie.sign > 0 ? census.balanced : census.unbalanced;
                ++bucket[static_cast<std::size_t>(depth)];
            } else if (v > start && !on_path[static_cast<std::size_t>(v)] &&
                       depth < census.cap) {
                on_path[static_cast<std::size_t>(v)] = 1;
                path.push_back(v);
                dfs(start, v, sign * ie.sign);
                path.pop_back();
                on_path[static_cast<std::size_t>(v)] = 0;
            }
        }
    }
};

void require_exact(const CycleCensus& census) {
    if (census.truncated)
        throw std::invalid_argument(
            "cycle census truncated at " + std::to_string(census.limit) +
            " cycles; raise the limit to use cycle-ratio measures");
}

} // namespace

long long CycleCensus::total_balanced() const {
    long long sum = 0;
    for (int k = 3; k <= cap; ++k) sum += balanced[static_cast<std::size_t>(k)];
    return sum;
}

long long CycleCensus::total() const {
    long long sum = 0;
    for (int k = 3; k <= cap; ++k) sum += count(k);
    return sum;
}

CycleCensus cycle_census(const SignedGraph& g, int cap, long long limit) {
    if (cap < 3) throw std::invalid_argument("cycle length cap must be at least 3");
    CycleCensus census;
    census.cap = cap;
    census.limit = limit;
    census.balanced.assign(static_cast<std::size_t>(cap) + 1, 0);
    census.unbalanced.assign(static_cast<std::size_t>(cap) + 1, 0);
    CycleEnumerator e{g, census, 0, false, {}, {}};
    for (int start = 0; start < g.n() && !e.stop; ++start) e.run(start);
    return census;
}

CycleCensus cycle_census(const SignedGraph& g) {
    return cycle_census(g, std::max(3, g.n()));
}

double Weighting::operator()(int k) const {
    switch (kind) {
        case Kind::uniform: return 1.0;
        case Kind::inverse_length: return 1.0 / k;
        case Kind::inverse_factorial: {
            double f = 1.0;
            for (int i = 2; i <= k; ++i) f /= i;
            return f;
        }
        case Kind::single_length: return k == k0 ? 1.0 : 0.0;
    }
    return 0.0;
}

double degree_of_balance(const CycleCensus& census, const Weighting& w) {
    require_exact(census);
    double numerator = 0.0, denominator = 0.0;
    for (int k = 3; k <= census.cap; ++k) {
        const double f = w(k);
        numerator += f * static_cast<double>(census.balanced[static_cast<std::size_t>(k)]);
        denominator += f * static_cast<double>(census.count(k));
    }
    if (denominator == 0.0) return 1.0;
    return clamp01(numerator / denominator);
}

double triangle_index(const SignedGraph& g) {
    // Tr(A^3) = 6 * sum over triangles of the entry product, so the two
    // traces reduce to one pass over triangles; incident lists are sorted by
    // neighbour, giving each triangle once at its lexicographically smallest
    // edge.
    double trace_signed = 0.0, trace_abs = 0.0;
    for (const Edge& e : g.edges()) {
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
                    const double product = e.weight * left[i].weight * right[j].weight;
                    trace_signed += product;
                    trace_abs += std::abs(product);
                }
                ++i;
                ++j;
            }
        }
    }
    if (trace_abs == 0.0) return 1.0;
    return clamp01((trace_signed + trace_abs) / (2.0 * trace_abs));
}

double walk_balance(const SignedGraph& g) {
    if (g.n() < 1) throw std::invalid_argument("walk balance needs at least one node");
    const std::vector<double> signed_spectrum =
        jacobi_eigenvalues(adjacency(g, false), "the adjacency matrix");
    const std::vector<double> unsigned_spectrum =
        jacobi_eigenvalues(adjacency(g, true), "the unsigned adjacency matrix");
    // K = sum e^lambda(A) / sum e^lambda(|A|), evaluated with exponents
    // shifted by the largest unsigned eigenvalue (which dominates both
    // spectra) so dense graphs do not overflow.
    const double shift = unsigned_spectrum.back();
    double numerator = 0.0, denominator = 0.0;
    for (double lambda : signed_spectrum) numerator += std::exp(lambda - shift);
    for (double lambda : unsigned_spectrum) denominator += std::exp(lambda - shift);
    const double K = numerator / denominator;
    return clamp01((K + 1.0) / 2.0);
}

AlgebraicConflict algebraic_conflict(const SignedGraph& g) {
    if (!g.connected())
        throw std::invalid_argument(
            "graph is disconnected; extract a component (e.g. --giant-component) first");
    if (g.m() < g.n())
        throw std::invalid_argument(
            "graph is acyclic, hence exactly balanced; the normalised conflict is undefined");

    SymMatrix laplacian = adjacency(g, false);
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j)
            if (i != j) laplacian.at(i, j) = -laplacian.at(i, j);
    for (int i = 0; i < g.n(); ++i) {
        double weighted_degree = 0.0;
        for (const IncidentEdge& ie : g.incident(i)) weighted_degree += std::abs(ie.weight);
        laplacian.at(i, i) = weighted_degree;
    }

    AlgebraicConflict out;
    out.lambda = std::max(
        0.0, jacobi_eigenvalues(std::move(laplacian), "the signed Laplacian").front());

    double max_mean_degree = 0.0;
    for (const Edge& e : g.edges())
        max_mean_degree = std::max(max_mean_degree, (g.degree(e.u) + g.degree(e.v)) / 2.0);
    out.normalised = clamp01(1.0 - out.lambda / (max_mean_degree - 1.0));
    return out;
}

FrustrationMeasures frustration_measures(long long L, const SignedGraph& g) {
    FrustrationMeasures out;
    out.F = g.m() == 0 ? 1.0 : clamp01(1.0 - 2.0 * static_cast<double>(L) / g.m());

    const long long denominator =
        static_cast<long long>(std::floor(g.m() / 2.0 - (g.n() - 1) / 4.0));
    if (denominator <= 0) {
        out.f_prime_skip_reason = "nonpositive denominator floor(m/2 - (n-1)/4)";
    } else {
        out.F_prime = clamp01(1.0 - static_cast<double>(L) / static_cast<double>(denominator));
    }

    out.X = g.m_minus() == 0 ? 1.0
                             : clamp01(1.0 - static_cast<double>(L) / g.m_minus());
    return out;
}

TrivialMeasures trivial_measures(const SignedGraph& g) {
    TrivialMeasures out;
    if (g.m() > 0) out.Y = static_cast<double>(g.m_plus()) / g.m();
    out.Z = is_balanced(g).balanced ? 1 : 0;
    return out;
}

SpectralBipartivity spectral_bipartivity(const SignedGraph& g) {
    SpectralBipartivity out;
    if (g.n() == 0) return out;
    const std::vector<double> spectrum =
        jacobi_eigenvalues(adjacency(g, true), "the unsigned adjacency matrix");
    const double shift = spectrum.back();
    double cosh_sum = 0.0, exp_sum = 0.0, exp_neg_sum = 0.0;
    for (double lambda : spectrum) {
        exp_sum += std::exp(lambda - shift);
        exp_neg_sum += std::exp(-lambda - shift);
        cosh_sum += 0.5 * (std::exp(lambda - shift) + std::exp(-lambda - shift));
    }
    out.beta = clamp01(cosh_sum / exp_sum);
    out.b_s = clamp01(exp_neg_sum / exp_sum);
    return out;
}

double expected_relative_k_balance(double q, int k) {
    if (q < 0.0 || q > 1.0) throw std::invalid_argument("probability q must lie in [0,1]");
    if (k < 3) throw std::invalid_argument("cycle length k must be at least 3");
    return (1.0 + std::pow(1.0 - 2.0 * q, k)) / 2.0;
}

double expected_degree_of_balance(const CycleCensus& census, double q) {
    require_exact(census);
    double numerator = 0.0;
    long long cycles = 0;
    for (int k = 3; k <= census.cap; ++k) {
        const long long o_k = census.count(k);
        numerator += (1.0 + std::pow(1.0 - 2.0 * q, k)) * static_cast<double>(o_k);
        cycles += o_k;
    }
    if (cycles == 0) return 1.0;
    return clamp01(numerator / (2.0 * static_cast<double>(cycles)));
}

FamilyTable family_oracle(int n, CompleteFamily family) {
    if (n < 3) throw std::invalid_argument("complete-family formulas need n >= 3");
    FamilyTable table;
    table.n = n;
    table.family = family;

    if (family == CompleteFamily::single_negative) {
        // Unbalanced k-cycles are exactly the cycles through the one negative
        // edge: (n-2)!/(n-k)! of them; all k-cycles: n!/(2k(n-k)!).
        double unbalanced_k = n - 2.0;            // k = 3
        double all_k = n * (n - 1.0) * (n - 2.0) / 6.0;
        double unbalanced_sum = 0.0, all_sum = 0.0;
        for (int k = 3; k <= n; ++k) {
            unbalanced_sum += unbalanced_k;
            all_sum += all_k;
            unbalanced_k *= n - k;
            all_k *= static_cast<double>(k) * (n - k) / (k + 1.0);
        }
        table.D = 1.0 - unbalanced_sum / all_sum;
        for (int k = 3; k <= n; ++k)
            table.D_k.emplace_back(k, 1.0 - 2.0 * k / (static_cast<double>(n) * (n - 1)));
        table.lambda = (n + 2.0 - std::sqrt((n - 2.0) * (n + 6.0))) / 2.0;
        table.A = 1.0 - table.lambda / (n - 2.0);
        table.L = 1;
        table.F = 1.0 - 4.0 / (static_cast<double>(n) * (n - 1));
    } else {
        for (int k = 3; k <= n; ++k) table.D_k.emplace_back(k, k % 2 == 0 ? 1.0 : 0.0);
        table.lambda = n - 2.0;
        table.A = 0.0;
        const long long nn = n;
        table.L = n % 2 == 0 ? nn * (nn - 2) / 4 : (nn - 1) * (nn - 1) / 4;
        table.F = n % 2 == 0 ? 1.0 / (n - 1) : 1.0 / n;
        // K = ((n-1)e + e^{1-n}) / ((n-1)e^{-1} + e^{n-1}), rescaled by
        // e^{1-n} so nothing overflows for large n.
        const double K = ((n - 1.0) * std::exp(2.0 - n) + std::exp(2.0 - 2.0 * n)) /
                         (1.0 + (n - 1.0) * std::exp(-static_cast<double>(n)));
        table.W = (K + 1.0) / 2.0;
    }
    return table;
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) return "nan";
    return std::string(buf, ptr);
}

std::vector<std::pair<std::string, const MeasureValue*>> MeasureReport::fields() const {
    return {{"D", &D},
            {"C_inv_k", &C_inv_k},
            {"C_inv_fact", &C_inv_fact},
            {"D_k", &D_k},
            {"T", &T},
            {"W", &W},
            {"lambda", &lambda},
            {"A", &A},
            {"L", &L},
            {"F", &F},
            {"F_prime", &F_prime},
            {"X", &X},
            {"Y", &Y},
            {"Z", &Z}};
}

std::string MeasureReport::to_text() const {
    std::string out;
    for (const auto& [name, value] : fields()) {
        out += name;
        out += " = ";
        out += value->computed ? format_double(value->value) : "skipped(" + value->reason + ")";
        out += '\n';
    }
    out += "k = " + std::to_string(k) + '\n';
    out += "cycle_cap = " + std::to_string(cycle_cap) + '\n';
    out += "cycle_limit = " + std::to_string(cycle_limit) + '\n';
    out += std::string("census_truncated = ") + (census_truncated ? "true" : "false") + '\n';
    out += "eigen_tolerance = " + format_double(eigen_tolerance) + '\n';
    return out;
}

MeasureReport measure_report(const SignedGraph& g, std::optional<long long> L,
                             const ReportOptions& opt) {
    MeasureReport report;
    report.k = opt.k;
    report.cycle_cap = opt.cycle_cap.value_or(std::max(3, g.n()));
    report.cycle_limit = opt.cycle_limit;

    const CycleCensus census = cycle_census(g, report.cycle_cap, report.cycle_limit);
    report.census_truncated = census.truncated;
    if (census.truncated) {
        const std::string why = "cycle census truncated at limit";
        report.D = report.C_inv_k = report.C_inv_fact = report.D_k =
            MeasureValue::skipped(why);
    } else {
        report.D = MeasureValue::of(degree_of_balance(census, Weighting::uniform()));
        report.C_inv_k =
            MeasureValue::of(degree_of_balance(census, Weighting::inverse_length()));
        report.C_inv_fact =
            MeasureValue::of(degree_of_balance(census, Weighting::inverse_factorial()));
        report.D_k =
            MeasureValue::of(degree_of_balance(census, Weighting::single_length(opt.k)));
    }

    report.T = MeasureValue::of(triangle_index(g));
    if (g.n() >= 1) {
        report.W = MeasureValue::of(walk_balance(g));
    } else {
        report.W = MeasureValue::skipped("graph has no nodes");
    }

    try {
        const AlgebraicConflict ac = algebraic_conflict(g);
        report.lambda = MeasureValue::of(ac.lambda);
        report.A = MeasureValue::of(ac.normalised);
    } catch (const std::invalid_argument& e) {
        report.lambda = MeasureValue::skipped(e.what());
        report.A = MeasureValue::skipped(e.what());
    }

    if (L.has_value()) {
        report.L = MeasureValue::of(static_cast<double>(*L));
        const FrustrationMeasures fm = frustration_measures(*L, g);
        report.F = MeasureValue::of(fm.F);
        report.F_prime = fm.F_prime.has_value()
                             ? MeasureValue::of(*fm.F_prime)
                             : MeasureValue::skipped(fm.f_prime_skip_reason);
        report.X = MeasureValue::of(fm.X);
    } else {
        report.L = report.F = report.F_prime = report.X =
            MeasureValue::skipped(opt.l_skip_reason);
    }

    const TrivialMeasures tm = trivial_measures(g);
    report.Y = tm.Y.has_value() ? MeasureValue::of(*tm.Y)
                                : MeasureValue::skipped("graph has no edges");
    report.Z = MeasureValue::of(tm.Z);
    return report;
}

} // namespace sgbal
