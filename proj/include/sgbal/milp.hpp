#pragma once

#include <string>
#include <vector>

#include "sgbal/signed_graph.hpp"

namespace sgbal {

// Which 0/1 programming model of the minimum-frustration problem to emit.
//  ubqp - quadratic objective over node variables only
//  and_product - linearised products x_ij = x_i * x_j
//  xor_var     - one frustration variable f_ij per edge, bounded from below
//  abs_split   - slack pair e_ij, h_ij with an equality per edge
enum class Formulation { ubqp, and_product, xor_var, abs_split };

std::string to_string(Formulation f);
// Accepts "ubqp", "and", "xor", "abs"; throws std::invalid_argument otherwise.
Formulation formulation_from_string(const std::string& text);

// Optional valid-inequality blocks appended after the core constraints.
struct CutFlags {
    bool triangle = false;  // f_ij + f_ik + f_jk >= 1 per unbalanced triangle
    bool degree = false;    // sum of f over edges at i <= degree(i)/2
    bool triangle4 = false; // four product inequalities per triangle (AND only)
    bool colour_fix = false;// pin the maximum-degree node's variable to 1
};

// Accepts a comma-separated list of "triangle", "degree", "triangle4", "fix".
CutFlags cuts_from_string(const std::string& text);

enum class VarKind { binary, unit_interval };

struct MilpVariable {
    std::string name;
    VarKind kind = VarKind::binary;
};

struct LinTerm {
    double coeff = 0.0;
    int var = 0; // index into MilpModel::variables
};

struct QuadTerm {
    double coeff = 0.0;
    int a = 0, b = 0; // variable indices of the product a*b
};

enum class Relation { le, ge, eq };

struct MilpConstraint {
    std::string name;
    std::vector<LinTerm> terms;
    Relation rel = Relation::le;
    double rhs = 0.0;
};

struct MilpModel {
    Formulation formulation = Formulation::xor_var;
    std::vector<MilpVariable> variables;
    std::vector<LinTerm> objective; // minimise
    double objective_constant = 0.0;
    std::vector<QuadTerm> quadratic_objective; // nonempty only for ubqp
    std::vector<MilpConstraint> constraints;

    // Objective value of a full 0/1 (or fractional) assignment.
    double objective_value(const std::vector<double>& assignment) const;
    // True when `assignment` satisfies every constraint (tolerance 1e-9).
    bool feasible(const std::vector<double>& assignment) const;

    // LP-format text: Minimize / Subject To / Bounds / Binary / General / End,
    // one constraint per line, stable ordering.  Throws std::invalid_argument
    // for ubqp (the objective is quadratic, which this renderer does not emit).
    std::string render() const;
};

// Builds the chosen model of minimum frustration for g.  The optimum of every
// formulation equals the frustration index (weighted objective on weighted
// graphs).  Base variable/constraint counts per formulation on n nodes and
// m = m+ + m- edges:
//   and_product: n+m variables, 2m+ + m- constraints
//   xor_var:     n+m variables, 2m constraints
//   abs_split:   n+2m variables, m constraints
//   ubqp:        n variables, no constraints
// Optional cut blocks add constraints on top.  triangle4 cuts require the
// and_product formulation (they speak about product variables).
MilpModel export_milp(const SignedGraph& g, Formulation f, CutFlags cuts = {});

} // namespace sgbal
