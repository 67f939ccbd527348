#pragma once

#include <string>
#include <vector>

#include "schedgame/model.hpp"

namespace schedgame {

enum class Sense { Maximize, Minimize };
enum class Relation { LessEq, Equal, GreaterEq };

enum class LpVariant { Generic, PrimalWeak, PrimalSum, DualWeak, DualSum };

/// An exact-rational linear program in constraint-list form. Variables carry
/// a sign flag: nonneg[j] restricts x_j >= 0, otherwise x_j is free. Sign
/// conditions that the source formulation displays as constraint rows are
/// kept as rows as well.
struct LinearProgram {
  Sense sense = Sense::Maximize;
  std::vector<std::string> variables;
  std::vector<bool> nonneg;
  RationalVector objective;
  RationalMatrix coefficients;  // rows() x variables
  std::vector<Relation> relations;
  RationalVector rhs;
  LpVariant variant = LpVariant::Generic;

  int rows() const { return static_cast<int>(coefficients.rows()); }
  int cols() const { return static_cast<int>(coefficients.cols()); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Exact solver output. For Optimal, primal_point is feasible and dual_point
/// (one multiplier per constraint row) certifies optimality: both are
/// verified by complementary slackness before being returned. For Unbounded,
/// ray is an improving feasible direction; for Infeasible, ray is a Farkas
/// multiplier vector on the rows.
struct LpSolution {
  LpStatus status = LpStatus::Optimal;
  Rational value;
  RationalVector primal_point;
  RationalVector dual_point;
  RationalVector ray;
};

/// Which deviation structure the paper LP uses: one combined row summed over
/// all jobs (Sum) or one row per job (Weak).
enum class DeviationForm { Weak, Sum };

/// The processing-time maximization program for the given optimal-role and
/// equilibrium-role schedules: the equilibrium social cost is maximized
/// subject to the optimal cost normalized to one, the deviation
/// constraint(s), the priority-order rows p_j <= p_{j+1}, and the explicit
/// sign row -p_1 <= 0. The roles are taken as given and not re-verified.
LinearProgram build_primal(const Instance& instance, const Schedule& opt, const Schedule& ne,
                           DeviationForm form);

/// The matching dual minimization over (beta, y or y_1..y_n, z_1..z_{n-1}):
/// one >= constraint per job, followed by the sign rows z_k >= 0 and then
/// y >= 0. z_0 and z_n are identically zero and never appear as variables.
LinearProgram build_dual(const Instance& instance, const Schedule& opt, const Schedule& ne,
                         DeviationForm form);

/// Generic algebraic transpose. Single-variable sign rows that merely repeat
/// a variable's nonnegativity flag are absorbed before transposing, and the
/// dual expresses its own sign conditions through variable flags rather than
/// rows. dualize(build_primal(...)) therefore reproduces the constraint
/// block and variable signs of build_dual(...) exactly.
LinearProgram dualize(const LinearProgram& lp);

/// Two-phase primal simplex on exact rationals with Bland's anti-cycling
/// rule. Never fails on valid input: every outcome is one of the three
/// statuses, and optimal certificates are self-checked.
LpSolution simplex_solve(const LinearProgram& lp);

struct FeasibilityReport {
  bool feasible = false;
  // Slack of row r oriented so that feasible <=> slack >= 0 for inequalities
  // and slack == 0 for equalities (reported sign: lhs - rhs for >=,
  // rhs - lhs for <=).
  RationalVector slacks;
};

/// Exact evaluation of every constraint row at `point` (variable sign flags
/// are checked as well).
FeasibilityReport check_point_feasible(const LinearProgram& lp, const RationalVector& point);

}  // namespace schedgame
