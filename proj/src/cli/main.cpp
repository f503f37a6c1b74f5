// Command-line front end: analyze, frustration, kbalance, generate, ztest,
// export-model and oracle verbs over signed edge-list files.
//
// Exit codes: 0 success, 2 input could not be read or parsed, 3 infeasible
// option combination, 4 the solver was stopped by a time/node budget (the
// report is still written), 5 internal failure.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgbal/edgelist.hpp"
#include "sgbal/generators.hpp"
#include "sgbal/measures.hpp"
#include "sgbal/milp.hpp"
#include "sgbal/signed_graph.hpp"
#include "sgbal/solver.hpp"
#include "sgbal/stats.hpp"

namespace {

using nlohmann::ordered_json;
using namespace sgbal;

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitOptions = 3;
constexpr int kExitBudget = 4;
constexpr int kExitInternal = 5;

struct CommonOpts {
    std::string input;
    std::uint64_t seed = 0;
    long long gap = 0;
    double time_limit = 0.0;   // seconds; 0 = none
    long long node_budget = 0; // 0 = none
    int workers = 1;
    int k = 3;
    bool giant = false;
    std::string output; // empty = stdout
    std::string format = "text";
};

SolverConfig solver_config(const CommonOpts& o) {
    SolverConfig cfg;
    if (o.time_limit > 0.0) cfg.time_limit_seconds = o.time_limit;
    if (o.node_budget > 0) cfg.node_budget = o.node_budget;
    cfg.gap = o.gap;
    cfg.workers = o.workers;
    return cfg;
}

SignedGraph load_input(const CommonOpts& o) {
    SignedGraph g = load_graph_file(o.input);
    if (o.giant && !g.connected()) return g.induced(g.largest_component());
    return g;
}

void emit(const CommonOpts& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + o.output + "'");
    out << text;
}

int status_exit(SolveStatus s) {
    return s == SolveStatus::budget_terminated ? kExitBudget : kExitOk;
}

// --- report scaffolding -----------------------------------------------------

ordered_json graph_json(const SignedGraph& g) {
    return ordered_json{{"name", g.name()},      {"n", g.n()},
                        {"m", g.m()},            {"m_minus", g.m_minus()},
                        {"density", g.density()}, {"weighted", g.weighted()}};
}

std::string graph_text(const SignedGraph& g) {
    std::ostringstream out;
    out << "graph: name=" << (g.name().empty() ? "-" : g.name()) << " n=" << g.n()
        << " m=" << g.m() << " m-=" << g.m_minus()
        << " density=" << format_double(g.density())
        << (g.weighted() ? " weighted" : "") << "\n";
    return out.str();
}

ordered_json solver_options_json(const CommonOpts& o) {
    ordered_json j;
    j["gap"] = o.gap;
    if (o.time_limit > 0.0)
        j["time_limit"] = o.time_limit;
    else
        j["time_limit"] = nullptr;
    if (o.node_budget > 0)
        j["node_budget"] = o.node_budget;
    else
        j["node_budget"] = nullptr;
    j["workers"] = o.workers;
    j["giant_component"] = o.giant;
    return j;
}

std::string options_text(const ordered_json& options) {
    std::string out = "options:";
    for (auto it = options.begin(); it != options.end(); ++it) {
        out += ' ' + it.key() + '=';
        const auto& v = it.value();
        if (v.is_string())
            out += v.get<std::string>();
        else if (v.is_null())
            out += "none";
        else
            out += v.dump();
    }
    out += '\n';
    return out;
}

ordered_json report_shell(const std::string& command, const CommonOpts& o,
                          const SignedGraph* g, ordered_json options) {
    ordered_json doc{{"tool", "sgbal"},
                     {"version", kVersion},
                     {"command", command},
                     {"seed", o.seed},
                     {"options", std::move(options)}};
    if (g) doc["graph"] = graph_json(*g);
    return doc;
}

std::string header_text(const std::string& command, const CommonOpts& o,
                        const SignedGraph* g, const ordered_json& options) {
    std::ostringstream out;
    out << "sgbal " << kVersion << " " << command << "\n";
    if (g) out << graph_text(*g);
    out << "seed: " << o.seed << "\n" << options_text(options);
    return out.str();
}

ordered_json frustrated_edges_json(const SignedGraph& g, const std::vector<int>& ids) {
    ordered_json arr = ordered_json::array();
    for (int id : ids) {
        const Edge& e = g.edge(id);
        ordered_json entry{{"u", g.labels()[e.u]}, {"v", g.labels()[e.v]}};
        if (g.weighted())
            entry["weight"] = e.weight;
        else
            entry["sign"] = e.sign;
        arr.push_back(std::move(entry));
    }
    return arr;
}

std::string frustrated_edges_text(const SignedGraph& g, const std::vector<int>& ids) {
    std::ostringstream out;
    out << "frustrated edges (" << ids.size() << "):\n";
    for (int id : ids) {
        const Edge& e = g.edge(id);
        out << "  " << g.labels()[e.u] << " -- " << g.labels()[e.v] << " (";
        if (g.weighted())
            out << format_double(e.weight);
        else
            out << (e.sign > 0 ? "+1" : "-1");
        out << ")\n";
    }
    return out.str();
}

ordered_json colouring_json(const Colouring& col) {
    ordered_json arr = ordered_json::array();
    for (std::uint8_t c : col) arr.push_back(static_cast<int>(c));
    return arr;
}

std::string groups_text(const SignedGraph& g, const Colouring& col, int max_colours) {
    std::ostringstream out;
    for (int c = 0; c < max_colours; ++c) {
        std::ostringstream line;
        bool any = false;
        for (std::size_t i = 0; i < col.size(); ++i) {
            if (col[i] == c) {
                line << ' ' << g.labels()[i];
                any = true;
            }
        }
        if (any) out << "group " << c << ":" << line.str() << "\n";
    }
    return out.str();
}

// --- verbs -------------------------------------------------------------------

int run_analyze(const CommonOpts& o, int cycle_cap, long long cycle_limit) {
    SignedGraph g = load_input(o);
    FrustrationResult res = solve(g, solver_config(o));

    ReportOptions ropt;
    ropt.k = o.k;
    if (cycle_cap > 0) ropt.cycle_cap = cycle_cap;
    if (cycle_limit > 0) ropt.cycle_limit = cycle_limit;
    std::optional<long long> L;
    if (res.status == SolveStatus::optimal)
        L = res.L;
    else
        ropt.l_skip_reason = "solver ended with status " + to_string(res.status);
    MeasureReport rep = measure_report(g, L, ropt);

    ordered_json options = solver_options_json(o);
    options["k"] = o.k;
    options["cycle_cap"] = cycle_cap > 0 ? ordered_json(cycle_cap) : ordered_json("auto");
    options["cycle_limit"] = rep.cycle_limit;
    options["format"] = o.format;

    if (o.format == "structured") {
        ordered_json doc = report_shell("analyze", o, &g, options);
        ordered_json solver{{"status", to_string(res.status)},
                            {"best", res.L},
                            {"lower_bound", res.lower_bound},
                            {"nodes_explored", res.nodes_explored}};
        doc["solver"] = std::move(solver);
        ordered_json measures;
        for (const auto& [name, mv] : rep.fields()) {
            if (mv->computed)
                measures[name] = mv->value;
            else
                measures[name] = ordered_json{{"skipped", mv->reason}};
        }
        doc["measures"] = std::move(measures);
        doc["parameters"] = ordered_json{{"k", rep.k},
                                         {"cycle_cap", rep.cycle_cap},
                                         {"cycle_limit", rep.cycle_limit},
                                         {"census_truncated", rep.census_truncated}};
        emit(o, doc.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << header_text("analyze", o, &g, options);
        out << "solver: status=" << to_string(res.status) << " best=" << res.L
            << " lower_bound=" << res.lower_bound << " nodes=" << res.nodes_explored
            << " wall_seconds=" << format_double(res.wall_seconds) << "\n";
        out << rep.to_text();
        emit(o, out.str());
    }
    return status_exit(res.status);
}

int run_frustration(const CommonOpts& o) {
    SignedGraph g = load_input(o);
    FrustrationResult res = g.weighted() ? FrustrationResult{} : solve(g, solver_config(o));
    WeightedFrustrationResult wres;
    if (g.weighted()) wres = solve_weighted(g, solver_config(o));

    ordered_json options = solver_options_json(o);
    options["format"] = o.format;

    const SolveStatus status = g.weighted() ? wres.status : res.status;
    const Colouring& col = g.weighted() ? wres.colouring : res.colouring;
    const std::vector<int>& fr = g.weighted() ? wres.frustrated_edges : res.frustrated_edges;

    if (o.format == "structured") {
        ordered_json doc = report_shell("frustration", o, &g, options);
        ordered_json result;
        if (g.weighted()) {
            result["L"] = wres.L;
            result["lower_bound"] = wres.lower_bound;
        } else {
            result["L"] = res.L;
            result["lower_bound"] = res.lower_bound;
        }
        result["status"] = to_string(status);
        result["nodes_explored"] = g.weighted() ? wres.nodes_explored : res.nodes_explored;
        result["colouring"] = colouring_json(col);
        result["frustrated_edges"] = frustrated_edges_json(g, fr);
        doc["result"] = std::move(result);
        emit(o, doc.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << header_text("frustration", o, &g, options);
        if (g.weighted())
            out << "L = " << format_double(wres.L) << "\n";
        else
            out << "L = " << res.L << "\n";
        out << "status = " << to_string(status) << "\n";
        if (g.weighted())
            out << "lower bound = " << format_double(wres.lower_bound) << "\n";
        else
            out << "lower bound = " << res.lower_bound << "\n";
        out << "nodes explored = " << (g.weighted() ? wres.nodes_explored : res.nodes_explored)
            << "\n"
            << "wall seconds = "
            << format_double(g.weighted() ? wres.wall_seconds : res.wall_seconds) << "\n";
        out << groups_text(g, col, 2);
        out << frustrated_edges_text(g, fr);
        emit(o, out.str());
    }
    return status_exit(status);
}

int run_kbalance(const CommonOpts& o, int k) {
    SignedGraph g = load_input(o);
    FrustrationResult res = solve_kcolour(g, k, solver_config(o));

    ordered_json options = solver_options_json(o);
    options["k"] = k;
    options["format"] = o.format;

    if (o.format == "structured") {
        ordered_json doc = report_shell("kbalance", o, &g, options);
        ordered_json result{{"k", k},
                            {"L", res.L},
                            {"status", to_string(res.status)},
                            {"lower_bound", res.lower_bound},
                            {"nodes_explored", res.nodes_explored}};
        result["colouring"] = colouring_json(res.colouring);
        result["frustrated_edges"] = frustrated_edges_json(g, res.frustrated_edges);
        doc["result"] = std::move(result);
        emit(o, doc.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << header_text("kbalance", o, &g, options);
        out << "k = " << k << "\n"
            << "L = " << res.L << "\n"
            << "status = " << to_string(res.status) << "\n"
            << "lower bound = " << res.lower_bound << "\n"
            << "nodes explored = " << res.nodes_explored << "\n"
            << "wall seconds = " << format_double(res.wall_seconds) << "\n";
        out << groups_text(g, res.colouring, k);
        out << frustrated_edges_text(g, res.frustrated_edges);
        emit(o, out.str());
    }
    return status_exit(res.status);
}

struct GenerateOpts {
    std::string family;
    FamilySpec spec;
    double negative_fraction = -1.0; // <0 = not given
    double negative_prob = -1.0;
};

int run_generate(const CommonOpts& o, GenerateOpts& gen) {
    gen.spec.family = family_from_string(gen.family);
    gen.spec.seed = o.seed;
    if (gen.negative_fraction >= 0.0 && gen.negative_prob >= 0.0)
        throw std::invalid_argument("--negative-fraction and --negative-prob are exclusive");
    if (gen.negative_prob >= 0.0)
        gen.spec.signs = {SignAssignment::Mode::independent, gen.negative_prob};
    else if (gen.negative_fraction >= 0.0)
        gen.spec.signs = {SignAssignment::Mode::exact_fraction, gen.negative_fraction};

    SignedGraph g;
    try {
        g = generate(gen.spec);
    } catch (const std::runtime_error& e) {
        // Feasible-looking parameters the sampler could not realise (e.g. a
        // regular degree sequence that keeps colliding) are option problems,
        // not input-file problems.
        throw std::invalid_argument(e.what());
    }

    std::ostringstream out;
    out << "# sgbal " << kVersion << " generate family=" << gen.family << " n=" << g.n()
        << " m=" << g.m() << " m-=" << g.m_minus() << " density=" << format_double(g.density())
        << " seed=" << o.seed << "\n";
    out << write_graph(g);
    emit(o, out.str());
    return kExitOk;
}

int run_ztest(const CommonOpts& o, const std::string& stat, int trials) {
    SignedGraph g = load_input(o);
    ReshuffleOptions ropt;
    ropt.trials = trials;
    ropt.seed = o.seed;
    ropt.k = o.k;
    ropt.solver = solver_config(o);
    ReshuffleSummary sum = reshuffle_experiment(g, stat, ropt);

    ordered_json options = solver_options_json(o);
    options["stat"] = stat;
    options["trials"] = trials;
    options["k"] = o.k;
    options["format"] = o.format;

    if (o.format == "structured") {
        ordered_json doc = report_shell("ztest", o, &g, options);
        ordered_json result{{"statistic", sum.statistic},
                            {"observed", sum.observed},
                            {"trials", sum.trials},
                            {"used", sum.used},
                            {"skipped", sum.skipped},
                            {"gap_terminated", sum.gap_terminated},
                            {"budget_terminated", sum.budget_terminated},
                            {"mean", sum.mean},
                            {"sd", sum.sd}};
        if (sum.z)
            result["z"] = *sum.z;
        else
            result["z"] = nullptr;
        doc["result"] = std::move(result);
        emit(o, doc.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << header_text("ztest", o, &g, options);
        out << "statistic = " << sum.statistic << "\n"
            << "observed = " << format_double(sum.observed) << "\n"
            << "trials = " << sum.trials << " (used " << sum.used << ", skipped " << sum.skipped
            << ")\n"
            << "solver replicas: gap-terminated = " << sum.gap_terminated
            << ", budget-terminated = " << sum.budget_terminated << "\n"
            << "mean = " << format_double(sum.mean) << "\n"
            << "sd = " << format_double(sum.sd) << "\n";
        if (sum.z)
            out << "z = " << format_double(*sum.z) << "\n";
        else
            out << "z = undefined (sd = 0)\n";
        emit(o, out.str());
    }
    return sum.budget_terminated > 0 ? kExitBudget : kExitOk;
}

int run_export_model(const CommonOpts& o, const std::string& form, const std::string& cuts) {
    SignedGraph g = load_input(o);
    Formulation f = formulation_from_string(form);
    CutFlags flags = cuts.empty() ? CutFlags{} : cuts_from_string(cuts);
    MilpModel model = export_milp(g, f, flags);

    std::ostringstream out;
    out << "\\ sgbal " << kVersion << " export-model form=" << to_string(f)
        << (cuts.empty() ? "" : " cuts=" + cuts) << " seed=" << o.seed << "\n";
    out << "\\ graph: name=" << (g.name().empty() ? "-" : g.name()) << " n=" << g.n()
        << " m=" << g.m() << " m-=" << g.m_minus() << " density=" << format_double(g.density())
        << "\n";
    out << model.render();
    emit(o, out.str());
    return kExitOk;
}

int run_oracle(const CommonOpts& o, const std::string& family_code, int n) {
    CompleteFamily family = family_code == "a" ? CompleteFamily::single_negative
                                               : CompleteFamily::all_negative;
    FamilyTable t = family_oracle(n, family);
    const long long m = static_cast<long long>(n) * (n - 1) / 2;
    const long long m_minus = family == CompleteFamily::single_negative ? 1 : m;

    ordered_json options{{"family", family_code}, {"n", n}, {"format", o.format}};

    if (o.format == "structured") {
        ordered_json doc = report_shell("oracle", o, nullptr, options);
        doc["graph"] = ordered_json{{"name", family_code == "a" ? "complete-single-negative"
                                                                : "complete-all-negative"},
                                    {"n", n},
                                    {"m", m},
                                    {"m_minus", m_minus},
                                    {"density", 1.0},
                                    {"weighted", false}};
        ordered_json result;
        if (t.D)
            result["D"] = *t.D;
        else
            result["D"] = nullptr;
        ordered_json dk = ordered_json::array();
        for (const auto& [k, v] : t.D_k) dk.push_back(ordered_json{{"k", k}, {"value", v}});
        result["D_k"] = std::move(dk);
        result["lambda"] = t.lambda;
        result["A"] = t.A;
        result["L"] = t.L;
        result["F"] = t.F;
        if (t.W)
            result["W"] = *t.W;
        else
            result["W"] = nullptr;
        doc["result"] = std::move(result);
        emit(o, doc.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << header_text("oracle", o, nullptr, options);
        out << "family = " << family_code
            << (family == CompleteFamily::single_negative ? " (complete, one negative edge)"
                                                          : " (complete, all edges negative)")
            << "\n"
            << "n = " << n << ", m = " << m << ", m- = " << m_minus << "\n";
        if (t.D) out << "D = " << format_double(*t.D) << "\n";
        for (const auto& [k, v] : t.D_k) out << "D_" << k << " = " << format_double(v) << "\n";
        out << "lambda = " << format_double(t.lambda) << "\n"
            << "A = " << format_double(t.A) << "\n"
            << "L = " << t.L << "\n"
            << "F = " << format_double(t.F) << "\n";
        if (t.W) out << "W = " << format_double(*t.W) << "\n";
        emit(o, out.str());
    }
    return kExitOk;
}

// --- option wiring -----------------------------------------------------------

void add_output_options(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("-o,--output", o.output, "write the report to this file instead of stdout");
    cmd->add_option("--format", o.format, "report format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
}

void add_solver_options(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--gap", o.gap, "stop once the bound is within this of the incumbent")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--time-limit", o.time_limit, "solver time limit in seconds")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--node-budget", o.node_budget, "maximum search-tree nodes")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--workers", o.workers, "parallel search workers")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

void add_input_options(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("input", o.input, "signed edge-list file")->required();
    cmd->add_flag("--giant-component", o.giant,
                  "analyse only the largest connected component");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"structural balance analysis for signed graphs"};
    app.set_version_flag("--version", std::string("sgbal ") + kVersion);
    app.require_subcommand(1);

    int code = kExitOk;

    CommonOpts an;
    int an_cycle_cap = 0;
    long long an_cycle_limit = 0;
    auto* analyze = app.add_subcommand("analyze", "full measure report for a graph");
    add_input_options(analyze, an);
    analyze->add_option("--seed", an.seed, "seed recorded in the report");
    analyze->add_option("--k", an.k, "cycle length for the single-length balance ratio")
        ->check(CLI::Range(3, 1000))
        ->capture_default_str();
    analyze->add_option("--cycle-cap", an_cycle_cap, "longest cycle length in the census")
        ->check(CLI::PositiveNumber);
    analyze->add_option("--cycle-limit", an_cycle_limit, "cycle-count budget for the census")
        ->check(CLI::PositiveNumber);
    add_solver_options(analyze, an);
    add_output_options(analyze, an);
    analyze->callback([&] { code = run_analyze(an, an_cycle_cap, an_cycle_limit); });

    CommonOpts fr;
    auto* frustration = app.add_subcommand("frustration", "minimum frustrated-edge count");
    add_input_options(frustration, fr);
    frustration->add_option("--seed", fr.seed, "seed recorded in the report");
    add_solver_options(frustration, fr);
    add_output_options(frustration, fr);
    frustration->callback([&] { code = run_frustration(fr); });

    CommonOpts kb;
    int kb_k = 2;
    auto* kbalance = app.add_subcommand("kbalance", "minimum frustration over k groups");
    add_input_options(kbalance, kb);
    kbalance->add_option("--k", kb_k, "number of groups")->required()->check(CLI::PositiveNumber);
    kbalance->add_option("--seed", kb.seed, "seed recorded in the report");
    add_solver_options(kbalance, kb);
    add_output_options(kbalance, kb);
    kbalance->callback([&] { code = run_kbalance(kb, kb_k); });

    CommonOpts ge;
    GenerateOpts gen;
    auto* generate_cmd = app.add_subcommand("generate", "write a random or structured graph");
    generate_cmd
        ->add_option("--family", gen.family,
                     "gnm, gnp, barabasi-albert, random-regular, complete-single-negative, "
                     "complete-all-negative, ising-lattice, hypercube")
        ->required();
    generate_cmd->add_option("--n", gen.spec.n, "node count");
    generate_cmd->add_option("--m", gen.spec.m, "edge count (gnm)");
    generate_cmd->add_option("--p", gen.spec.p, "edge probability (gnp)");
    generate_cmd->add_option("--attachment", gen.spec.attachment,
                             "edges per new node (barabasi-albert)");
    generate_cmd->add_option("--degree", gen.spec.degree, "node degree (random-regular)");
    generate_cmd->add_option("--dims", gen.spec.dims, "side lengths (ising-lattice)")
        ->delimiter(',');
    generate_cmd->add_option("--dimension", gen.spec.dimension, "cube dimension (hypercube)");
    generate_cmd->add_option("--negative-fraction", gen.negative_fraction,
                             "exact fraction of negative edges");
    generate_cmd->add_option("--negative-prob", gen.negative_prob,
                             "independent negative-sign probability");
    generate_cmd->add_option("--seed", ge.seed, "random seed");
    generate_cmd->add_option("-o,--output", ge.output, "write the edge list to this file");
    generate_cmd->callback([&] { code = run_generate(ge, gen); });

    CommonOpts zt;
    std::string zt_stat = "L";
    int zt_trials = 500;
    auto* ztest = app.add_subcommand("ztest", "significance of a statistic under sign reshuffling");
    add_input_options(ztest, zt);
    ztest->add_option("--stat", zt_stat,
                      "L, D, C_inv_k, C_inv_fact, D_k, T, W, lambda, A, F, F_prime, X, Y or Z")
        ->capture_default_str();
    ztest->add_option("--trials", zt_trials, "reshuffled replicas")
        ->check(CLI::Range(2, 1000000))
        ->capture_default_str();
    ztest->add_option("--seed", zt.seed, "random seed");
    ztest->add_option("--k", zt.k, "cycle length for the D_k statistic")
        ->check(CLI::Range(3, 1000))
        ->capture_default_str();
    add_solver_options(ztest, zt);
    add_output_options(ztest, zt);
    ztest->callback([&] { code = run_ztest(zt, zt_stat, zt_trials); });

    CommonOpts em;
    std::string em_form = "and";
    std::string em_cuts;
    auto* export_model = app.add_subcommand("export-model", "write the 0/1 programme in LP format");
    add_input_options(export_model, em);
    export_model->add_option("--form", em_form, "and, xor, abs or ubqp")->capture_default_str();
    export_model->add_option("--cuts", em_cuts,
                             "comma-separated: triangle, degree, triangle4, fix");
    export_model->add_option("--seed", em.seed, "seed recorded in the header");
    export_model->add_option("-o,--output", em.output, "write the model to this file");
    export_model->callback([&] { code = run_export_model(em, em_form, em_cuts); });

    CommonOpts orc;
    std::string orc_family;
    int orc_n = 0;
    auto* oracle = app.add_subcommand("oracle", "closed-form values for the complete families");
    oracle->add_option("--family", orc_family, "a (one negative edge) or c (all negative)")
        ->required()
        ->check(CLI::IsMember({"a", "c"}));
    oracle->add_option("--n", orc_n, "node count")->required()->check(CLI::Range(3, 1000));
    oracle->add_option("--seed", orc.seed, "seed recorded in the report");
    add_output_options(oracle, orc);
    oracle->callback([&] { code = run_oracle(orc, orc_family, orc_n); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? kExitOk : kExitOptions;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOptions;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return code;
}
