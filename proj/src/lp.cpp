#include "schedgame/lp.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "schedgame/errors.hpp"

namespace schedgame {

namespace {

void validate_lp(const LinearProgram& lp) {
  const int rows = lp.rows();
  const int cols = lp.cols();
  if (static_cast<int>(lp.variables.size()) != cols ||
      static_cast<int>(lp.nonneg.size()) != cols || lp.objective.size() != cols) {
    throw validation_error("linear program: variable metadata does not match column count");
  }
  if (static_cast<int>(lp.relations.size()) != rows || lp.rhs.size() != rows) {
    throw validation_error("linear program: row metadata does not match row count");
  }
}

// Positional coefficient of job k in the social cost of `sched`:
// (psi + 1) / speed on k's machine.
Rational positional_coefficient(const Instance& instance, const Schedule& sched,
                                const Eigen::MatrixXi& table, int k) {
  const int machine = sched.machine_of(k);
  return Rational(table(k, machine - 1) + 1) / instance.speed(machine);
}

}  // namespace

LinearProgram build_primal(const Instance& instance, const Schedule& opt, const Schedule& ne,
                           DeviationForm form) {
  validate(instance, opt);
  validate(instance, ne);
  const int n = instance.job_count();
  const int m = instance.machine_count();
  const Eigen::MatrixXi psi_opt = psi_table(opt, m);
  const Eigen::MatrixXi psi_ne = psi_table(ne, m);

  LinearProgram lp;
  lp.sense = Sense::Maximize;
  lp.variant = form == DeviationForm::Sum ? LpVariant::PrimalSum : LpVariant::PrimalWeak;
  for (int k = 1; k <= n; ++k) {
    lp.variables.push_back("p" + std::to_string(k));
  }
  lp.nonneg.assign(n, true);

  lp.objective.resize(n);
  for (int k = 1; k <= n; ++k) {
    lp.objective(k - 1) = positional_coefficient(instance, ne, psi_ne, k);
  }

  const int deviation_rows = form == DeviationForm::Sum ? 1 : n;
  const int rows = 1 + deviation_rows + (n - 1) + 1;
  lp.coefficients = RationalMatrix::Zero(rows, n);
  lp.rhs = RationalVector::Zero(rows);
  lp.relations.assign(rows, Relation::LessEq);

  // Normalization: the optimal-role social cost equals one.
  int row = 0;
  for (int k = 1; k <= n; ++k) {
    lp.coefficients(row, k - 1) = positional_coefficient(instance, opt, psi_opt, k);
  }
  lp.relations[row] = Relation::Equal;
  lp.rhs(row) = 1;
  ++row;

  // Deviation rows: cost on the chosen machine minus cost after moving to
  // the optimal-role machine, per job (Weak) or summed over jobs (Sum).
  if (form == DeviationForm::Sum) {
    for (int k = 1; k <= n; ++k) {
      const int ne_machine = ne.machine_of(k);
      lp.coefficients(row, k - 1) = positional_coefficient(instance, ne, psi_ne, k) -
                                    1 / instance.speed(opt.machine_of(k)) -
                                    Rational(psi_opt(k, ne_machine - 1)) /
                                        instance.speed(ne_machine);
    }
    ++row;
  } else {
    for (int j = 1; j <= n; ++j, ++row) {
      const int ne_machine = ne.machine_of(j);
      const int opt_machine = opt.machine_of(j);
      for (int k = 1; k <= j; ++k) {
        if (ne.machine_of(k) == ne_machine) {
          lp.coefficients(row, k - 1) += 1 / instance.speed(ne_machine);
        }
      }
      lp.coefficients(row, j - 1) -= 1 / instance.speed(opt_machine);
      for (int k = 1; k < j; ++k) {
        if (ne.machine_of(k) == opt_machine) {
          lp.coefficients(row, k - 1) -= 1 / instance.speed(opt_machine);
        }
      }
    }
  }

  // Priority-order rows p_k <= p_{k+1}.
  for (int k = 1; k <= n - 1; ++k, ++row) {
    lp.coefficients(row, k - 1) = 1;
    lp.coefficients(row, k) = -1;
  }

  // Explicit sign row -p_1 <= 0, as displayed.
  lp.coefficients(row, 0) = -1;

  return lp;
}

LinearProgram build_dual(const Instance& instance, const Schedule& opt, const Schedule& ne,
                         DeviationForm form) {
  validate(instance, opt);
  validate(instance, ne);
  const int n = instance.job_count();
  const int m = instance.machine_count();
  const Eigen::MatrixXi psi_opt = psi_table(opt, m);
  const Eigen::MatrixXi psi_ne = psi_table(ne, m);

  LinearProgram lp;
  lp.sense = Sense::Minimize;
  lp.variant = form == DeviationForm::Sum ? LpVariant::DualSum : LpVariant::DualWeak;

  const int y_count = form == DeviationForm::Sum ? 1 : n;
  lp.variables.push_back("beta");
  lp.nonneg.push_back(false);
  if (form == DeviationForm::Sum) {
    lp.variables.push_back("y");
    lp.nonneg.push_back(true);
  } else {
    for (int j = 1; j <= n; ++j) {
      lp.variables.push_back("y" + std::to_string(j));
      lp.nonneg.push_back(true);
    }
  }
  for (int k = 1; k <= n - 1; ++k) {
    lp.variables.push_back("z" + std::to_string(k));
    lp.nonneg.push_back(true);
  }
  const int cols = 1 + y_count + (n - 1);
  const int z_base = 1 + y_count;  // column of z_1

  lp.objective = RationalVector::Zero(cols);
  lp.objective(0) = 1;  // min beta

  const int rows = n + (n - 1) + y_count;  // job rows, z sign rows, y sign rows
  lp.coefficients = RationalMatrix::Zero(rows, cols);
  lp.rhs = RationalVector::Zero(rows);
  lp.relations.assign(rows, Relation::GreaterEq);

  for (int k = 1; k <= n; ++k) {
    const int row = k - 1;
    const int ne_machine = ne.machine_of(k);
    const int opt_machine = opt.machine_of(k);
    lp.coefficients(row, 0) = positional_coefficient(instance, opt, psi_opt, k);
    if (form == DeviationForm::Sum) {
      lp.coefficients(row, 1) = positional_coefficient(instance, ne, psi_ne, k) -
                                1 / instance.speed(opt_machine) -
                                Rational(psi_opt(k, ne_machine - 1)) / instance.speed(ne_machine);
    } else {
      for (int j = k; j <= n; ++j) {
        if (ne.machine_of(j) == ne_machine) {
          lp.coefficients(row, j) += 1 / instance.speed(ne_machine);
        }
      }
      lp.coefficients(row, k) -= 1 / instance.speed(opt_machine);
      for (int j = k + 1; j <= n; ++j) {
        if (opt.machine_of(j) == ne_machine) {
          lp.coefficients(row, j) -= 1 / instance.speed(ne_machine);
        }
      }
    }
    if (k <= n - 1) lp.coefficients(row, z_base + k - 1) = 1;   // +z_k
    if (k >= 2) lp.coefficients(row, z_base + k - 2) = -1;      // -z_{k-1}
    lp.rhs(row) = positional_coefficient(instance, ne, psi_ne, k);
  }

  int row = n;
  for (int k = 1; k <= n - 1; ++k, ++row) {
    lp.coefficients(row, z_base + k - 1) = 1;  // z_k >= 0
  }
  for (int j = 0; j < y_count; ++j, ++row) {
    lp.coefficients(row, 1 + j) = 1;  // y >= 0
  }
  return lp;
}

LinearProgram dualize(const LinearProgram& lp) {
  validate_lp(lp);
  const int cols = lp.cols();

  // Absorb rows that merely restate a flagged variable's sign
  // (c * x_j <= 0 with c < 0, or c * x_j >= 0 with c > 0).
  std::vector<int> kept_rows;
  for (int r = 0; r < lp.rows(); ++r) {
    int nonzeros = 0;
    int var = -1;
    for (int j = 0; j < cols; ++j) {
      if (lp.coefficients(r, j) != 0) {
        ++nonzeros;
        var = j;
      }
    }
    const bool sign_row =
        nonzeros == 1 && lp.rhs(r) == 0 && var >= 0 && lp.nonneg[var] &&
        ((lp.relations[r] == Relation::LessEq && lp.coefficients(r, var) < 0) ||
         (lp.relations[r] == Relation::GreaterEq && lp.coefficients(r, var) > 0));
    if (!sign_row) kept_rows.push_back(r);
  }

  // Orient inequalities so every row's dual multiplier is nonnegative:
  // <= for a maximization primal, >= for a minimization one.
  const bool primal_max = lp.sense == Sense::Maximize;
  const int rows = static_cast<int>(kept_rows.size());
  RationalMatrix a(rows, cols);
  RationalVector b(rows);
  std::vector<bool> is_equality(rows, false);
  for (int i = 0; i < rows; ++i) {
    const int r = kept_rows[i];
    Rational flip = 1;
    if (lp.relations[r] == Relation::Equal) {
      is_equality[i] = true;
    } else if (primal_max && lp.relations[r] == Relation::GreaterEq) {
      flip = -1;
    } else if (!primal_max && lp.relations[r] == Relation::LessEq) {
      flip = -1;
    }
    a.row(i) = lp.coefficients.row(r) * flip;
    b(i) = lp.rhs(r) * flip;
  }

  LinearProgram dual;
  dual.sense = primal_max ? Sense::Minimize : Sense::Maximize;
  dual.variant = LpVariant::Generic;
  for (int i = 0; i < rows; ++i) {
    dual.variables.push_back("u" + std::to_string(kept_rows[i] + 1));
    dual.nonneg.push_back(!is_equality[i]);
  }
  dual.objective = b;
  dual.coefficients = a.transpose();
  dual.rhs = lp.objective;
  dual.relations.assign(cols, Relation::Equal);
  for (int j = 0; j < cols; ++j) {
    if (lp.nonneg[j]) {
      dual.relations[j] = primal_max ? Relation::GreaterEq : Relation::LessEq;
    }
  }
  return dual;
}

FeasibilityReport check_point_feasible(const LinearProgram& lp, const RationalVector& point) {
  validate_lp(lp);
  if (point.size() != lp.cols()) {
    throw validation_error("check_point_feasible: point has " + std::to_string(point.size()) +
                           " entries, program has " + std::to_string(lp.cols()) + " variables");
  }
  FeasibilityReport report;
  report.feasible = true;
  for (int j = 0; j < lp.cols(); ++j) {
    if (lp.nonneg[j] && point(j) < 0) report.feasible = false;
  }
  const RationalVector lhs = lp.coefficients * point;
  report.slacks.resize(lp.rows());
  for (int r = 0; r < lp.rows(); ++r) {
    switch (lp.relations[r]) {
      case Relation::LessEq:
        report.slacks(r) = lp.rhs(r) - lhs(r);
        if (report.slacks(r) < 0) report.feasible = false;
        break;
      case Relation::GreaterEq:
        report.slacks(r) = lhs(r) - lp.rhs(r);
        if (report.slacks(r) < 0) report.feasible = false;
        break;
      case Relation::Equal:
        report.slacks(r) = lhs(r) - lp.rhs(r);
        if (report.slacks(r) != 0) report.feasible = false;
        break;
    }
  }
  return report;
}

namespace {

// Internal standard form: maximize over expanded nonnegative columns with all
// rows turned into equalities via slack/surplus columns plus one artificial
// column per equality/surplus row.
struct Tableau {
  RationalMatrix t;           // body rows + objective row; last column = rhs
  std::vector<int> basis;     // basic column per body row
  int body_rows = 0;
  int total_cols = 0;         // excluding rhs
  int artificial_begin = 0;   // columns >= this are artificial

  Rational& at(int r, int c) { return t(r, c); }
  int rhs_col() const { return total_cols; }
  int obj_row() const { return body_rows; }

  void pivot(int row, int col) {
    t.row(row) /= t(row, col);
    for (int i = 0; i <= body_rows; ++i) {
      if (i != row && t(i, col) != 0) {
        t.row(i) -= t(i, col) * t.row(row);
      }
    }
    basis[row] = col;
  }

  // Bland's rule; banning artificial columns keeps them out after phase 1.
  // Returns false when the current objective row is optimal.
  bool bland_step(bool ban_artificials, bool* unbounded, int* unbounded_col) {
    const int limit = ban_artificials ? artificial_begin : total_cols;
    int entering = -1;
    for (int j = 0; j < limit; ++j) {
      if (t(obj_row(), j) < 0) {
        entering = j;
        break;
      }
    }
    if (entering < 0) return false;
    int leaving = -1;
    for (int i = 0; i < body_rows; ++i) {
      if (t(i, entering) <= 0) continue;
      if (leaving < 0) {
        leaving = i;
        continue;
      }
      const Rational current = t(i, rhs_col()) / t(i, entering);
      const Rational best = t(leaving, rhs_col()) / t(leaving, entering);
      if (current < best || (current == best && basis[i] < basis[leaving])) {
        leaving = i;
      }
    }
    if (leaving < 0) {
      *unbounded = true;
      *unbounded_col = entering;
      return false;
    }
    pivot(leaving, entering);
    return true;
  }
};

}  // namespace

LpSolution simplex_solve(const LinearProgram& lp) {
  validate_lp(lp);
  const int rows = lp.rows();
  const int vars = lp.cols();
  const bool originally_min = lp.sense == Sense::Minimize;

  // Column expansion: nonneg variables map to one column, free variables to
  // a positive/negative pair.
  std::vector<int> col_var;
  std::vector<int> col_sign;
  for (int j = 0; j < vars; ++j) {
    col_var.push_back(j);
    col_sign.push_back(1);
    if (!lp.nonneg[j]) {
      col_var.push_back(j);
      col_sign.push_back(-1);
    }
  }
  const int structural = static_cast<int>(col_var.size());

  RationalVector objective(structural);
  for (int c = 0; c < structural; ++c) {
    objective(c) = lp.objective(col_var[c]) * col_sign[c];
    if (originally_min) objective(c) = -objective(c);
  }

  // Row signs are flipped so every right-hand side is nonnegative.
  std::vector<Rational> flip(rows, 1);
  std::vector<Relation> relation(rows);
  for (int r = 0; r < rows; ++r) {
    relation[r] = lp.relations[r];
    if (lp.rhs(r) < 0) {
      flip[r] = -1;
      if (relation[r] == Relation::LessEq) {
        relation[r] = Relation::GreaterEq;
      } else if (relation[r] == Relation::GreaterEq) {
        relation[r] = Relation::LessEq;
      }
    }
  }

  int slack_count = 0;
  for (int r = 0; r < rows; ++r) {
    if (relation[r] != Relation::Equal) ++slack_count;
  }
  int artificial_count = 0;
  for (int r = 0; r < rows; ++r) {
    if (relation[r] != Relation::LessEq) ++artificial_count;
  }

  Tableau tab;
  tab.body_rows = rows;
  tab.total_cols = structural + slack_count + artificial_count;
  tab.artificial_begin = structural + slack_count;
  tab.t = RationalMatrix::Zero(rows + 1, tab.total_cols + 1);
  tab.basis.assign(rows, -1);

  std::vector<int> indicator(rows, -1);  // slack col for <=, artificial otherwise
  int next_slack = structural;
  int next_artificial = tab.artificial_begin;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < structural; ++c) {
      tab.at(r, c) = lp.coefficients(r, col_var[c]) * col_sign[c] * flip[r];
    }
    tab.at(r, tab.rhs_col()) = lp.rhs(r) * flip[r];
    switch (relation[r]) {
      case Relation::LessEq:
        tab.at(r, next_slack) = 1;
        tab.basis[r] = next_slack;
        indicator[r] = next_slack;
        ++next_slack;
        break;
      case Relation::GreaterEq:
        tab.at(r, next_slack) = -1;
        ++next_slack;
        tab.at(r, next_artificial) = 1;
        tab.basis[r] = next_artificial;
        indicator[r] = next_artificial;
        ++next_artificial;
        break;
      case Relation::Equal:
        tab.at(r, next_artificial) = 1;
        tab.basis[r] = next_artificial;
        indicator[r] = next_artificial;
        ++next_artificial;
        break;
    }
  }

  LpSolution solution;

  // Phase 1: maximize minus the artificial sum. The objective row holds
  // reduced costs z_j - c_j; the rhs cell holds the objective value.
  if (artificial_count > 0) {
    for (int j = 0; j <= tab.total_cols; ++j) {
      Rational z = 0;
      for (int r = 0; r < rows; ++r) {
        if (tab.basis[r] >= tab.artificial_begin) z -= tab.at(r, j);
      }
      tab.at(tab.obj_row(), j) = z;
    }
    for (int j = tab.artificial_begin; j < tab.total_cols; ++j) {
      tab.at(tab.obj_row(), j) += 1;  // minus c_j with c_j = -1
    }

    bool unbounded = false;
    int unbounded_col = -1;
    while (tab.bland_step(false, &unbounded, &unbounded_col)) {
    }
    if (unbounded) {
      throw internal_error("phase-1 objective is bounded by construction");
    }
    if (tab.at(tab.obj_row(), tab.rhs_col()) != 0) {
      // Infeasible. The phase-1 duals, negated, are a Farkas certificate.
      solution.status = LpStatus::Infeasible;
      solution.ray.resize(rows);
      for (int r = 0; r < rows; ++r) {
        Rational y = tab.at(tab.obj_row(), indicator[r]);
        if (indicator[r] >= tab.artificial_begin) y -= 1;  // undo -c_j = +1
        solution.ray(r) = -y * flip[r];
      }
      return solution;
    }
    // Degenerate basic artificials are pivoted out where possible; rows with
    // no eligible pivot are redundant and keep a zero-valued artificial.
    for (int r = 0; r < rows; ++r) {
      if (tab.basis[r] < tab.artificial_begin) continue;
      for (int j = 0; j < tab.artificial_begin; ++j) {
        if (tab.at(r, j) != 0) {
          tab.pivot(r, j);
          break;
        }
      }
    }
  }

  // Phase 2 objective row over the current basis.
  for (int j = 0; j <= tab.total_cols; ++j) {
    Rational z = 0;
    for (int r = 0; r < rows; ++r) {
      if (tab.basis[r] < structural) {
        z += objective(tab.basis[r]) * tab.at(r, j);
      }
    }
    tab.at(tab.obj_row(), j) = z;
  }
  for (int j = 0; j < structural; ++j) {
    tab.at(tab.obj_row(), j) -= objective(j);
  }

  bool unbounded = false;
  int unbounded_col = -1;
  while (tab.bland_step(true, &unbounded, &unbounded_col)) {
  }
  if (unbounded) {
    solution.status = LpStatus::Unbounded;
    solution.ray = RationalVector::Zero(vars);
    solution.ray(col_var[unbounded_col]) += col_sign[unbounded_col];
    for (int r = 0; r < rows; ++r) {
      if (tab.basis[r] < structural && tab.at(r, unbounded_col) != 0) {
        solution.ray(col_var[tab.basis[r]]) -=
            col_sign[tab.basis[r]] * tab.at(r, unbounded_col);
      }
    }
    return solution;
  }

  solution.status = LpStatus::Optimal;
  solution.primal_point = RationalVector::Zero(vars);
  for (int r = 0; r < rows; ++r) {
    if (tab.basis[r] < structural) {
      solution.primal_point(col_var[tab.basis[r]]) +=
          col_sign[tab.basis[r]] * tab.at(r, tab.rhs_col());
    }
  }
  solution.dual_point.resize(rows);
  for (int r = 0; r < rows; ++r) {
    Rational y = tab.at(tab.obj_row(), indicator[r]);
    if (originally_min) y = -y;
    solution.dual_point(r) = y * flip[r];
  }
  solution.value = lp.objective.dot(solution.primal_point);

  // Certificate self-check: primal feasibility, dual sign and feasibility,
  // complementary slackness, and matching objective values.
  {
    const FeasibilityReport primal_ok = check_point_feasible(lp, solution.primal_point);
    if (!primal_ok.feasible) {
      throw internal_error("simplex returned an infeasible primal point");
    }
    const bool max = !originally_min;
    Rational dual_value = solution.dual_point.dot(lp.rhs);
    if (dual_value != solution.value) {
      throw internal_error("simplex duality gap: primal " + format_rational(solution.value) +
                           " vs dual " + format_rational(dual_value));
    }
    for (int r = 0; r < rows; ++r) {
      const Rational& y = solution.dual_point(r);
      if (lp.relations[r] == Relation::LessEq && (max ? y < 0 : y > 0)) {
        throw internal_error("simplex dual sign violation on row " + std::to_string(r));
      }
      if (lp.relations[r] == Relation::GreaterEq && (max ? y > 0 : y < 0)) {
        throw internal_error("simplex dual sign violation on row " + std::to_string(r));
      }
      const Rational row_slack =
          lp.coefficients.row(r).dot(solution.primal_point) - lp.rhs(r);
      if (y * row_slack != 0) {
        throw internal_error("simplex complementary slackness violation on row " +
                             std::to_string(r));
      }
    }
    for (int j = 0; j < vars; ++j) {
      const Rational reduced =
          lp.coefficients.col(j).dot(solution.dual_point) - lp.objective(j);
      if (lp.nonneg[j]) {
        if (max ? reduced < 0 : reduced > 0) {
          throw internal_error("simplex dual infeasibility at variable " + lp.variables[j]);
        }
        if (solution.primal_point(j) * reduced != 0) {
          throw internal_error("simplex complementary slackness violation at variable " +
                               lp.variables[j]);
        }
      } else if (reduced != 0) {
        throw internal_error("simplex dual equality violated at free variable " +
                             lp.variables[j]);
      }
    }
  }
  return solution;
}

}  // namespace schedgame
