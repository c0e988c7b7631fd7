// Exact rational LP solver: two-phase primal simplex on a dense tableau
// with Bland's anti-cycling rule. Built for the tiny decision problems
// here (a handful of variables and constraints), not for scale.
#pragma once

#include <vector>

#include "posvote/linalg.hpp"

namespace posvote {

enum class Relation { LessEq, Eq, GreaterEq };
enum class VarBound { NonNegative, Free };
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpProblem {
    RatVector objective;              // maximize objective . x
    RatMatrix constraints;            // one row per constraint
    std::vector<Relation> relations;  // per row
    RatVector rhs;                    // per row
    std::vector<VarBound> bounds;     // per variable

    std::size_t num_vars() const { return objective.dim(); }
    std::size_t num_rows() const { return rhs.dim(); }
    void validate() const;  // throws std::invalid_argument on inconsistent dims
};

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    RatVector x;               // meaningful only when status == Optimal
    Rational objective_value;  // likewise
};

LpResult simplex_max(const LpProblem& p);

}  // namespace posvote
