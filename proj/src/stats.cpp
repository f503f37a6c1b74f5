#include "sgbal/stats.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "sgbal/measures.hpp"
#include "sgbal/rng.hpp"

namespace sgbal {

namespace {

struct StatValue {
    std::optional<double> value; // absent = statistic refused on this graph
    std::optional<SolveStatus> solver_status;
};

// One evaluation of a named statistic.  Refusals (std::invalid_argument from
// the measure preconditions) come back as an empty value; unknown names throw.
StatValue evaluate_statistic(const SignedGraph& g, const std::string& name,
                             const ReshuffleOptions& opt) {
    const auto via_census = [&](const Weighting& w, std::optional<int> cap) -> StatValue {
        try {
            const CycleCensus census = cap ? cycle_census(g, *cap) : cycle_census(g);
            return {degree_of_balance(census, w), {}};
        } catch (const std::invalid_argument&) {
            return {};
        }
    };
    const auto via_solver = [&](auto pick) -> StatValue {
        const FrustrationResult r = solve(g, opt.solver);
        StatValue out;
        out.solver_status = r.status;
        out.value = pick(r);
        return out;
    };

    if (name == "L")
        return via_solver([](const FrustrationResult& r) {
            return std::optional<double>(static_cast<double>(r.L));
        });
    if (name == "D") return via_census(Weighting::uniform(), {});
    if (name == "C_inv_k") return via_census(Weighting::inverse_length(), {});
    if (name == "C_inv_fact") return via_census(Weighting::inverse_factorial(), {});
    if (name == "D_k") return via_census(Weighting::single_length(opt.k), opt.k);
    if (name == "T") return {triangle_index(g), {}};
    if (name == "W") return {walk_balance(g), {}};
    if (name == "lambda" || name == "A") {
        try {
            const AlgebraicConflict ac = algebraic_conflict(g);
            return {name == "lambda" ? ac.lambda : ac.normalised, {}};
        } catch (const std::invalid_argument&) {
            return {};
        }
    }
    if (name == "F" || name == "F_prime" || name == "X")
        return via_solver([&](const FrustrationResult& r) -> std::optional<double> {
            const FrustrationMeasures fm = frustration_measures(r.L, g);
            if (name == "F") return fm.F;
            if (name == "X") return fm.X;
            return fm.F_prime; // may be absent -> replica skipped
        });
    if (name == "Y") return {trivial_measures(g).Y, {}};
    if (name == "Z")
        return {trivial_measures(g).Z ? 1.0 : 0.0, {}};
    throw std::invalid_argument(
        "unknown statistic '" + name +
        "' (expected L or one of D, C_inv_k, C_inv_fact, D_k, T, W, lambda, A, "
        "F, F_prime, X, Y, Z)");
}

} // namespace

ReshuffleSummary reshuffle_experiment(const SignedGraph& g, const std::string& statistic,
                                      const ReshuffleOptions& opt) {
    if (opt.trials < 2) throw std::invalid_argument("reshuffle needs at least 2 trials");

    ReshuffleSummary summary;
    summary.statistic = statistic;
    summary.trials = opt.trials;
    summary.seed = opt.seed;

    const StatValue observed = evaluate_statistic(g, statistic, opt);
    if (!observed.value)
        throw std::invalid_argument("statistic '" + statistic +
                                    "' is not computable on this graph");
    summary.observed = *observed.value;

    const auto count_status = [&](const StatValue& v) {
        if (!v.solver_status) return;
        if (*v.solver_status == SolveStatus::gap_terminated) ++summary.gap_terminated;
        if (*v.solver_status == SolveStatus::budget_terminated) ++summary.budget_terminated;
    };
    count_status(observed);

    rng::Engine master(opt.seed);
    double sum = 0.0, sum_sq = 0.0;
    for (int t = 0; t < opt.trials; ++t) {
        const std::uint64_t sub_seed = master();
        const SignedGraph replica = reshuffle(g, sub_seed);
        if (replica.n() != g.n() || replica.m() != g.m() ||
            replica.m_minus() != g.m_minus())
            throw std::logic_error("reshuffle changed (n, m, m-)");
        const StatValue v = evaluate_statistic(replica, statistic, opt);
        count_status(v);
        if (!v.value) {
            ++summary.skipped;
            continue;
        }
        ++summary.used;
        sum += *v.value;
        sum_sq += *v.value * *v.value;
    }

    if (summary.used > 0) summary.mean = sum / summary.used;
    if (summary.used > 1) {
        const double variance =
            (sum_sq - summary.used * summary.mean * summary.mean) / (summary.used - 1);
        summary.sd = std::sqrt(std::max(0.0, variance));
    }
    if (summary.sd > 0.0) summary.z = (summary.observed - summary.mean) / summary.sd;
    return summary;
}

MonteCarloResult monte_carlo_expected_dk(const SignedGraph& g, double q, int k,
                                         int trials, std::uint64_t seed) {
    if (q < 0.0 || q > 1.0)
        throw std::invalid_argument("sign probability must lie in [0, 1]");
    if (k < 3) throw std::invalid_argument("cycle length must be at least 3");
    if (trials < 100) throw std::invalid_argument("needs at least 100 trials");
    const CycleCensus base = cycle_census(g, k);
    if (base.truncated)
        throw std::invalid_argument("cycle census truncated; raise the limit");
    if (base.count(k) == 0)
        throw std::invalid_argument("graph has no cycle of length " + std::to_string(k));

    const Weighting dk = Weighting::single_length(k);
    double sum = 0.0, sum_sq = 0.0;
    for (int t = 0; t < trials; ++t) {
        rng::Engine eng = rng::sub_engine(seed, static_cast<std::uint64_t>(t));
        std::vector<Edge> edges = g.edges();
        for (Edge& e : edges) {
            const bool negative = rng::unit(eng) < q;
            e.sign = negative ? -1 : +1;
            e.weight = negative ? -std::abs(e.weight) : std::abs(e.weight);
        }
        const SignedGraph draw(g.n(), std::move(edges));
        const double value = degree_of_balance(cycle_census(draw, k), dk);
        sum += value;
        sum_sq += value * value;
    }
    MonteCarloResult out;
    out.trials = trials;
    out.mean = sum / trials;
    const double variance = (sum_sq - trials * out.mean * out.mean) / (trials - 1);
    out.standard_error = std::sqrt(std::max(0.0, variance) / trials);
    return out;
}

} // namespace sgbal
