#include "schedgame/json_io.hpp"

#include <string>

#include "schedgame/errors.hpp"

namespace schedgame {

using nlohmann::json;

namespace {

Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_string()) {
    return parse_rational(j.get<std::string>());
  }
  if (j.is_number_integer()) {
    return Rational(j.get<long long>());
  }
  if (j.is_number()) {
    throw validation_error(where + ": floats are not accepted; use exact rational strings "
                                   "like \"3\" or \"7/2\"");
  }
  throw validation_error(where + ": expected a rational string");
}

RationalVector rational_vector_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) {
    throw validation_error(where + ": expected a non-empty array");
  }
  RationalVector out(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    out(static_cast<int>(i)) = rational_from_json(j[i], where + "[" + std::to_string(i) + "]");
  }
  return out;
}

json rational_vector_to_json(const RationalVector& v) {
  json out = json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(format_rational(v(i)));
  return out;
}

}  // namespace

json instance_to_json(const Instance& instance) {
  return json{{"jobs", rational_vector_to_json(instance.processing)},
              {"speeds", rational_vector_to_json(instance.speeds)}};
}

Instance instance_from_json(const json& j) {
  if (!j.is_object() || !j.contains("jobs") || !j.contains("speeds")) {
    throw validation_error("instance JSON must be {\"jobs\": [...], \"speeds\": [...]}");
  }
  Instance instance;
  instance.processing = rational_vector_from_json(j["jobs"], "jobs");
  instance.speeds = rational_vector_from_json(j["speeds"], "speeds");
  return instance;
}

Instance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& error) {
    throw validation_error(std::string("malformed instance JSON: ") + error.what());
  }
  return normalize(instance_from_json(j));
}

json schedule_to_json(const Schedule& schedule) {
  return json{{"assignment", schedule.assignment}};
}

Schedule schedule_from_json(const json& j) {
  if (!j.is_object() || !j.contains("assignment") || !j["assignment"].is_array()) {
    throw validation_error("schedule JSON must be {\"assignment\": [...]}");
  }
  Schedule schedule;
  for (const auto& entry : j["assignment"]) {
    if (!entry.is_number_integer()) {
      throw validation_error("schedule assignment entries must be machine indices");
    }
    schedule.assignment.push_back(entry.get<int>());
  }
  return schedule;
}

Schedule parse_schedule(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& error) {
    throw validation_error(std::string("malformed schedule JSON: ") + error.what());
  }
  return schedule_from_json(j);
}

json trace_to_json(const MftTrace& trace) {
  json steps = json::array();
  for (const MftStep& step : trace.assignment_order) {
    steps.push_back(json{{"job", step.job},
                         {"machine", step.machine},
                         {"positional_value", format_rational(step.positional_value)}});
  }
  return steps;
}

json poa_report_to_json(const PoaReport& report) {
  json equilibria = json::array();
  for (const auto& [schedule, cost] : report.equilibrium_costs) {
    equilibria.push_back(json{{"schedule", schedule_to_json(schedule)},
                              {"cost", format_rational(cost)}});
  }
  return json{{"optimal_cost", format_rational(report.optimal_cost)},
              {"equilibria", equilibria},
              {"poa", format_rational(report.poa)},
              {"poa_approx", to_double(report.poa)},
              {"bound", format_rational(report.bound)},
              {"bound_satisfied", report.bound_satisfied}};
}

namespace {

std::string relation_text(Relation relation) {
  switch (relation) {
    case Relation::LessEq: return "<=";
    case Relation::Equal: return "=";
    case Relation::GreaterEq: return ">=";
  }
  return "?";
}

std::string variant_text(LpVariant variant) {
  switch (variant) {
    case LpVariant::Generic: return "generic";
    case LpVariant::PrimalWeak: return "primal-weak";
    case LpVariant::PrimalSum: return "primal-sum";
    case LpVariant::DualWeak: return "dual-weak";
    case LpVariant::DualSum: return "dual-sum";
  }
  return "?";
}

}  // namespace

json lp_to_json(const LinearProgram& lp) {
  json rows = json::array();
  for (int r = 0; r < lp.rows(); ++r) {
    json coeffs = json::array();
    for (int c = 0; c < lp.cols(); ++c) coeffs.push_back(format_rational(lp.coefficients(r, c)));
    rows.push_back(json{{"coefficients", coeffs},
                        {"relation", relation_text(lp.relations[r])},
                        {"rhs", format_rational(lp.rhs(r))}});
  }
  return json{{"variant", variant_text(lp.variant)},
              {"sense", lp.sense == Sense::Maximize ? "maximize" : "minimize"},
              {"variables", lp.variables},
              {"nonnegative", lp.nonneg},
              {"objective", rational_vector_to_json(lp.objective)},
              {"constraints", rows}};
}

json lp_solution_to_json(const LpSolution& solution) {
  json out;
  switch (solution.status) {
    case LpStatus::Optimal:
      out["status"] = "optimal";
      out["value"] = format_rational(solution.value);
      out["value_approx"] = to_double(solution.value);
      out["primal_point"] = rational_vector_to_json(solution.primal_point);
      out["dual_point"] = rational_vector_to_json(solution.dual_point);
      break;
    case LpStatus::Infeasible:
      out["status"] = "infeasible";
      out["farkas_ray"] = rational_vector_to_json(solution.ray);
      break;
    case LpStatus::Unbounded:
      out["status"] = "unbounded";
      out["ray"] = rational_vector_to_json(solution.ray);
      break;
  }
  return out;
}

json fitting_to_json(const DualFitting& fitting) {
  std::string variant;
  switch (fitting.provenance) {
    case FittingVariant::TwoMachine: variant = "two-machine"; break;
    case FittingVariant::General: variant = "general"; break;
    case FittingVariant::Divisible: variant = "divisible"; break;
  }
  return json{{"variant", variant},
              {"beta", format_rational(fitting.beta)},
              {"beta_approx", to_double(fitting.beta)},
              {"y", format_rational(fitting.y)},
              {"z", rational_vector_to_json(fitting.z)}};
}

json fitting_check_to_json(const FittingCheck& check) {
  return json{{"feasible", check.feasible},
              {"slacks", rational_vector_to_json(check.job_slacks)},
              {"tight_jobs", check.tight_jobs}};
}

json sub_chains_to_json(const SubChains& chains) {
  json list = json::array();
  for (const SubChain& chain : chains.chains) {
    list.push_back(json{{"anchor_machine", chain.anchor_machine},
                        {"members", chain.members},
                        {"critical_members", chain.critical_members}});
  }
  return json{{"chains", list}, {"machine_order_anomaly", chains.machine_order_anomaly}};
}

}  // namespace schedgame
