#include "sgbal/milp.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sgbal {

namespace {

std::string fmt_num(double v) {
    std::array<char, 32> buf;
    const auto [p, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), p);
}

// Sums duplicate variables and orders terms by variable index so the
// rendering is canonical and diffable.
std::vector<LinTerm> coalesced(const std::vector<LinTerm>& terms) {
    std::map<int, double> sums;
    for (const LinTerm& t : terms) sums[t.var] += t.coeff;
    std::vector<LinTerm> out;
    out.reserve(sums.size());
    for (const auto& [var, coeff] : sums)
        if (coeff != 0.0) out.push_back({coeff, var});
    return out;
}

void append_terms(std::string& out, const std::vector<LinTerm>& terms,
                  const std::vector<MilpVariable>& vars) {
    bool first = true;
    for (const LinTerm& t : terms) {
        const double mag = std::abs(t.coeff);
        if (first) {
            if (t.coeff < 0) out += "- ";
            first = false;
        } else {
            out += t.coeff < 0 ? " - " : " + ";
        }
        if (mag != 1.0) {
            out += fmt_num(mag);
            out += ' ';
        }
        out += vars[static_cast<std::size_t>(t.var)].name;
    }
    if (first) out += "0";
}

struct Tri {
    int a, b, c;    // nodes, a < b < c
    int ab, ac, bc; // edge ids
    int negatives;  // count of negative signs among the three edges
};

std::vector<Tri> all_triangles(const SignedGraph& g) {
    std::vector<Tri> out;
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
                if (left[i].neighbour > e.v)
                    out.push_back({e.u, e.v, left[i].neighbour, id, left[i].edge_id,
                                   right[j].edge_id,
                                   (e.sign < 0) + (left[i].sign < 0) + (right[j].sign < 0)});
                ++i;
                ++j;
            }
        }
    }
    return out;
}

// Indices of the per-edge variables; meaning depends on the formulation
// (xe for and_product, f for xor_var, e/h pair for abs_split).
struct EdgeVars {
    std::vector<int> primary;
    std::vector<int> secondary; // abs_split only
};

// Appends the frustration-state expression of edge `id` (optionally negated)
// to `c` and returns the constant the expression contributes to the lhs.
double add_state_expr(MilpConstraint& c, const SignedGraph& g, int id,
                      const EdgeVars& ev, Formulation f, double scale) {
    const Edge& e = g.edge(id);
    switch (f) {
        case Formulation::xor_var:
            c.terms.push_back({scale, ev.primary[static_cast<std::size_t>(id)]});
            return 0.0;
        case Formulation::abs_split:
            c.terms.push_back({scale, ev.primary[static_cast<std::size_t>(id)]});
            c.terms.push_back({scale, ev.secondary[static_cast<std::size_t>(id)]});
            return 0.0;
        case Formulation::and_product: {
            const double a = e.sign;
            c.terms.push_back({scale * a, e.u});
            c.terms.push_back({scale * a, e.v});
            c.terms.push_back({scale * -2.0 * a,
                               ev.primary[static_cast<std::size_t>(id)]});
            return scale * (1.0 - a) / 2.0;
        }
        case Formulation::ubqp: break;
    }
    throw std::invalid_argument("frustration-state cuts are not expressible for " +
                                to_string(f));
}

} // namespace

std::string to_string(Formulation f) {
    switch (f) {
        case Formulation::ubqp: return "ubqp";
        case Formulation::and_product: return "and";
        case Formulation::xor_var: return "xor";
        case Formulation::abs_split: return "abs";
    }
    return "unknown";
}

Formulation formulation_from_string(const std::string& text) {
    if (text == "ubqp") return Formulation::ubqp;
    if (text == "and") return Formulation::and_product;
    if (text == "xor") return Formulation::xor_var;
    if (text == "abs") return Formulation::abs_split;
    throw std::invalid_argument("unknown formulation '" + text +
                                "' (expected and, xor, abs or ubqp)");
}

CutFlags cuts_from_string(const std::string& text) {
    CutFlags flags;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        if (token == "triangle")
            flags.triangle = true;
        else if (token == "degree")
            flags.degree = true;
        else if (token == "triangle4")
            flags.triangle4 = true;
        else if (token == "fix")
            flags.colour_fix = true;
        else
            throw std::invalid_argument("unknown cut '" + token +
                                        "' (expected triangle, degree, triangle4 or fix)");
    }
    return flags;
}

double MilpModel::objective_value(const std::vector<double>& assignment) const {
    double value = objective_constant;
    for (const LinTerm& t : objective)
        value += t.coeff * assignment[static_cast<std::size_t>(t.var)];
    for (const QuadTerm& q : quadratic_objective)
        value += q.coeff * assignment[static_cast<std::size_t>(q.a)] *
                 assignment[static_cast<std::size_t>(q.b)];
    return value;
}

bool MilpModel::feasible(const std::vector<double>& assignment) const {
    constexpr double tol = 1e-9;
    for (const MilpConstraint& c : constraints) {
        double lhs = 0.0;
        for (const LinTerm& t : c.terms)
            lhs += t.coeff * assignment[static_cast<std::size_t>(t.var)];
        switch (c.rel) {
            case Relation::le:
                if (lhs > c.rhs + tol) return false;
                break;
            case Relation::ge:
                if (lhs < c.rhs - tol) return false;
                break;
            case Relation::eq:
                if (std::abs(lhs - c.rhs) > tol) return false;
                break;
        }
    }
    return true;
}

std::string MilpModel::render() const {
    if (formulation == Formulation::ubqp)
        throw std::invalid_argument(
            "the ubqp model has a quadratic objective; this renderer emits "
            "linear models only (choose and, xor or abs)");
    std::string out;
    out += "Minimize\n obj: ";
    append_terms(out, coalesced(objective), variables);
    if (objective_constant != 0.0) {
        out += objective_constant < 0 ? " - " : " + ";
        out += fmt_num(std::abs(objective_constant));
    }
    out += "\nSubject To\n";
    for (const MilpConstraint& c : constraints) {
        out += ' ';
        out += c.name;
        out += ": ";
        append_terms(out, coalesced(c.terms), variables);
        switch (c.rel) {
            case Relation::le: out += " <= "; break;
            case Relation::ge: out += " >= "; break;
            case Relation::eq: out += " = "; break;
        }
        out += fmt_num(c.rhs);
        out += '\n';
    }
    bool any_interval = false;
    for (const MilpVariable& v : variables) any_interval |= v.kind == VarKind::unit_interval;
    if (any_interval) {
        out += "Bounds\n";
        for (const MilpVariable& v : variables)
            if (v.kind == VarKind::unit_interval) out += " 0 <= " + v.name + " <= 1\n";
    }
    out += "Binary\n";
    for (const MilpVariable& v : variables)
        if (v.kind == VarKind::binary) out += ' ' + v.name + '\n';
    out += "End\n";
    return out;
}

MilpModel export_milp(const SignedGraph& g, Formulation f, CutFlags cuts) {
    MilpModel model;
    model.formulation = f;

    for (int i = 0; i < g.n(); ++i)
        model.variables.push_back({"x_" + std::to_string(i), VarKind::binary});

    EdgeVars ev;
    ev.primary.assign(static_cast<std::size_t>(g.m()), -1);
    if (f == Formulation::abs_split)
        ev.secondary.assign(static_cast<std::size_t>(g.m()), -1);
    const auto edge_suffix = [&](const Edge& e) {
        return std::to_string(e.u) + "_" + std::to_string(e.v);
    };
    for (int id = 0; id < g.m(); ++id) {
        const Edge& e = g.edge(id);
        switch (f) {
            case Formulation::ubqp: break;
            case Formulation::and_product:
                ev.primary[static_cast<std::size_t>(id)] =
                    static_cast<int>(model.variables.size());
                model.variables.push_back({"xe_" + edge_suffix(e), VarKind::binary});
                break;
            case Formulation::xor_var:
                ev.primary[static_cast<std::size_t>(id)] =
                    static_cast<int>(model.variables.size());
                model.variables.push_back({"f_" + edge_suffix(e), VarKind::binary});
                break;
            case Formulation::abs_split:
                ev.primary[static_cast<std::size_t>(id)] =
                    static_cast<int>(model.variables.size());
                model.variables.push_back({"e_" + edge_suffix(e), VarKind::binary});
                ev.secondary[static_cast<std::size_t>(id)] =
                    static_cast<int>(model.variables.size());
                model.variables.push_back({"h_" + edge_suffix(e), VarKind::binary});
                break;
        }
    }

    int next_constraint = 0;
    const auto constraint_name = [&]() { return "c" + std::to_string(next_constraint++); };
    const auto add = [&](MilpConstraint c) {
        c.name = constraint_name();
        model.constraints.push_back(std::move(c));
    };

    // Per-edge objective (1-w)/2 + w*(x_u + x_v - 2*product); the product is
    // the quadratic term (ubqp), the xe variable (and_product), or folded into
    // the frustration variable(s) via |w| (xor_var, abs_split).
    for (int id = 0; id < g.m(); ++id) {
        const Edge& e = g.edge(id);
        const double w = e.weight;
        switch (f) {
            case Formulation::ubqp:
                model.objective.push_back({w, e.u});
                model.objective.push_back({w, e.v});
                model.quadratic_objective.push_back({-2.0 * w, e.u, e.v});
                model.objective_constant += (1.0 - w) / 2.0;
                break;
            case Formulation::and_product: {
                const int xe = ev.primary[static_cast<std::size_t>(id)];
                model.objective.push_back({w, e.u});
                model.objective.push_back({w, e.v});
                model.objective.push_back({-2.0 * w, xe});
                model.objective_constant += (1.0 - w) / 2.0;
                if (e.sign > 0) {
                    add({{}, {{1.0, xe}, {-1.0, e.u}}, Relation::le, 0.0});
                    add({{}, {{1.0, xe}, {-1.0, e.v}}, Relation::le, 0.0});
                } else {
                    add({{}, {{1.0, e.u}, {1.0, e.v}, {-1.0, xe}}, Relation::le, 1.0});
                }
                break;
            }
            case Formulation::xor_var: {
                const int fv = ev.primary[static_cast<std::size_t>(id)];
                model.objective.push_back({std::abs(w), fv});
                model.objective_constant += (1.0 - std::abs(w)) / 2.0;
                if (e.sign > 0) {
                    add({{}, {{1.0, e.u}, {-1.0, e.v}, {-1.0, fv}}, Relation::le, 0.0});
                    add({{}, {{1.0, e.v}, {-1.0, e.u}, {-1.0, fv}}, Relation::le, 0.0});
                } else {
                    add({{}, {{1.0, e.u}, {1.0, e.v}, {-1.0, fv}}, Relation::le, 1.0});
                    add({{}, {{-1.0, e.u}, {-1.0, e.v}, {-1.0, fv}}, Relation::le, -1.0});
                }
                break;
            }
            case Formulation::abs_split: {
                const int pe = ev.primary[static_cast<std::size_t>(id)];
                const int ph = ev.secondary[static_cast<std::size_t>(id)];
                model.objective.push_back({std::abs(w), pe});
                model.objective.push_back({std::abs(w), ph});
                model.objective_constant += (1.0 - std::abs(w)) / 2.0;
                if (e.sign > 0)
                    add({{},
                         {{1.0, e.u}, {-1.0, e.v}, {-1.0, pe}, {1.0, ph}},
                         Relation::eq,
                         0.0});
                else
                    add({{},
                         {{1.0, e.u}, {1.0, e.v}, {-1.0, pe}, {1.0, ph}},
                         Relation::eq,
                         1.0});
                break;
            }
        }
    }

    if ((cuts.triangle || cuts.degree || cuts.triangle4) && f == Formulation::ubqp)
        throw std::invalid_argument(
            "triangle, degree and triangle4 cuts need edge variables; the ubqp "
            "model has none");
    if (cuts.triangle4 && f != Formulation::and_product)
        throw std::invalid_argument("triangle4 cuts speak about product variables and "
                                    "require the and formulation");
    if (cuts.degree && g.weighted())
        throw std::invalid_argument(
            "degree cuts count frustrated edges and are only optimum-preserving "
            "with unit weights");

    if (cuts.triangle) {
        // Each triangle with an odd number of negative edges keeps at least
        // one frustrated edge under any two-colouring.
        for (const Tri& t : all_triangles(g)) {
            if (t.negatives % 2 == 0) continue;
            MilpConstraint c;
            double constant = 0.0;
            constant += add_state_expr(c, g, t.ab, ev, f, 1.0);
            constant += add_state_expr(c, g, t.ac, ev, f, 1.0);
            constant += add_state_expr(c, g, t.bc, ev, f, 1.0);
            c.rel = Relation::ge;
            c.rhs = 1.0 - constant;
            add(std::move(c));
        }
    }
    if (cuts.degree) {
        // Some optimum has at most half of each node's incident edges
        // frustrated (otherwise flipping the node improves it).
        for (int v = 0; v < g.n(); ++v) {
            const auto inc = g.incident(v);
            if (inc.empty()) continue;
            MilpConstraint c;
            double constant = 0.0;
            for (const IncidentEdge& ie : inc)
                constant += add_state_expr(c, g, ie.edge_id, ev, f, 1.0);
            c.rel = Relation::le;
            c.rhs = static_cast<double>(inc.size()) / 2.0 - constant;
            add(std::move(c));
        }
    }
    if (cuts.triangle4) {
        // Product-consistency inequalities, valid for every triangle.
        for (const Tri& t : all_triangles(g)) {
            const int ab = ev.primary[static_cast<std::size_t>(t.ab)];
            const int ac = ev.primary[static_cast<std::size_t>(t.ac)];
            const int bc = ev.primary[static_cast<std::size_t>(t.bc)];
            add({{}, {{1.0, ab}, {1.0, ac}, {-1.0, t.a}, {-1.0, bc}}, Relation::le, 0.0});
            add({{}, {{1.0, ab}, {1.0, bc}, {-1.0, t.b}, {-1.0, ac}}, Relation::le, 0.0});
            add({{}, {{1.0, ac}, {1.0, bc}, {-1.0, t.c}, {-1.0, ab}}, Relation::le, 0.0});
            add({{},
                 {{1.0, t.a}, {1.0, t.b}, {1.0, t.c}, {-1.0, ab}, {-1.0, ac}, {-1.0, bc}},
                 Relation::le,
                 1.0});
        }
    }
    if (cuts.colour_fix && g.n() > 0)
        add({{}, {{1.0, g.max_degree_node()}}, Relation::eq, 1.0});

    return model;
}

} // namespace sgbal
