#include "schedgame/search.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "schedgame/dualfit.hpp"
#include "schedgame/errors.hpp"
#include "schedgame/json_io.hpp"
#include "schedgame/lp.hpp"
#include "schedgame/optimal.hpp"

namespace schedgame {

namespace {

void validate_config(const SearchConfig& config) {
  if (config.machines < 1) throw validation_error("search config: machines must be >= 1");
  if (config.jobs < 1) throw validation_error("search config: jobs must be >= 1");
  if (config.iterations < 1) throw validation_error("search config: iterations must be >= 1");
  if (config.speed_pool.empty()) throw validation_error("search config: speed pool is empty");
  for (const Rational& s : config.speed_pool) {
    if (s <= 0) throw validation_error("search config: speed pool values must be positive");
  }
  if (config.max_numerator < 1 || config.max_denominator < 1) {
    throw validation_error("search config: processing-time grid bounds must be >= 1");
  }
}

Instance draw_instance(const SearchConfig& config, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> numerator(1, config.max_numerator);
  std::uniform_int_distribution<long long> denominator(1, config.max_denominator);
  std::uniform_int_distribution<size_t> pool(0, config.speed_pool.size() - 1);

  Instance raw;
  raw.processing.resize(config.jobs);
  for (int j = 0; j < config.jobs; ++j) {
    const long long num = numerator(rng);
    const long long den = denominator(rng);
    raw.processing(j) = Rational(num, den);
  }
  raw.speeds.resize(config.machines);
  for (int i = 0; i < config.machines; ++i) {
    raw.speeds(i) = config.speed_pool[pool(rng)];
  }
  return normalize(raw);
}

bool instance_less(const Instance& a, const Instance& b) {
  if (a.job_count() != b.job_count()) return a.job_count() < b.job_count();
  if (a.machine_count() != b.machine_count()) return a.machine_count() < b.machine_count();
  for (int j = 0; j < a.job_count(); ++j) {
    if (a.processing(j) != b.processing(j)) return a.processing(j) < b.processing(j);
  }
  for (int i = 0; i < a.machine_count(); ++i) {
    if (a.speeds(i) != b.speeds(i)) return a.speeds(i) < b.speeds(i);
  }
  return false;
}

Rational evaluate_poa(const Instance& instance, long long& evaluated) {
  const PoaReport report = compute_poa(instance);
  ++evaluated;
  if (!report.bound_satisfied) {
    throw bound_violation_error(
        "price of anarchy " + format_rational(report.poa) + " exceeds proven bound " +
        format_rational(report.bound) + " on instance " + instance_to_json(instance).dump() +
        "; this indicates an implementation bug");
  }
  return report.poa;
}

}  // namespace

Instance gen_random(const SearchConfig& config) {
  validate_config(config);
  std::mt19937_64 rng(config.seed);
  return draw_instance(config, rng);
}

RunReport search_worst_case(const SearchConfig& config) {
  validate_config(config);
  std::mt19937_64 rng(config.seed);

  constexpr int kMaxClimbSteps = 100;

  RunReport report;
  report.bound = bound_formula(config.machines, false);
  report.best_poa = 0;
  bool have_best = false;

  for (long long iter = 0; iter < config.iterations; ++iter) {
    Instance current = draw_instance(config, rng);
    Rational current_poa = evaluate_poa(current, report.instances_evaluated);

    // Greedy single-coordinate walk on the processing-time grid.
    const Rational step = Rational(1, config.max_denominator);
    const Rational low = step;
    const Rational high = Rational(config.max_numerator);
    for (int climb = 0; climb < kMaxClimbSteps; ++climb) {
      bool improved = false;
      for (int j = 0; j < config.jobs && !improved; ++j) {
        for (int direction : {-1, +1}) {
          Rational moved = current.processing(j) + direction * step;
          if (moved < low || moved > high) continue;
          Instance candidate = current;
          candidate.processing(j) = moved;
          candidate = normalize(candidate);
          Rational poa = evaluate_poa(candidate, report.instances_evaluated);
          if (poa > current_poa) {
            current = std::move(candidate);
            current_poa = std::move(poa);
            improved = true;
            break;
          }
        }
      }
      if (!improved) break;
    }

    if (!have_best || current_poa > report.best_poa ||
        (current_poa == report.best_poa && instance_less(current, report.best_instance))) {
      report.best_poa = current_poa;
      report.best_instance = current;
      have_best = true;
    }
  }
  return report;
}

namespace {

void write_csv(const std::string& path, const Instance& instance, const Schedule& opt,
               const Schedule& worst_ne, const DualFitting& fitting,
               const FittingCheck& check) {
  const int n = instance.job_count();
  const int m = instance.machine_count();
  const Eigen::MatrixXi psi_opt = psi_table(opt, m);
  const Eigen::MatrixXi psi_ne = psi_table(worst_ne, m);

  std::ofstream out(path);
  if (!out) throw validation_error("cannot write CSV file " + path);
  out << "job,p,p_approx,tau_opt,tau_ne,psi_opt,psi_ne,psi_ne_machine_in_opt,"
         "z,z_approx,slack,slack_approx\n";
  for (int k = 1; k <= n; ++k) {
    const int opt_machine = opt.machine_of(k);
    const int ne_machine = worst_ne.machine_of(k);
    const Rational z = k <= n - 1 ? fitting.z(k - 1) : Rational(0);
    out << k << ',' << format_rational(instance.ptime(k)) << ','
        << to_double(instance.ptime(k)) << ',' << opt_machine << ',' << ne_machine << ','
        << psi_opt(k, opt_machine - 1) << ',' << psi_ne(k, ne_machine - 1) << ','
        << psi_opt(k, ne_machine - 1) << ',' << format_rational(z) << ','
        << to_double(z) << ',' << format_rational(check.job_slacks(k - 1)) << ','
        << to_double(check.job_slacks(k - 1)) << '\n';
  }
}

}  // namespace

RunReport run_report(const Instance& instance, const std::string& out_dir,
                     const std::optional<Schedule>& role_opt,
                     const std::optional<Schedule>& role_ne) {
  validate_canonical(instance);
  std::filesystem::create_directories(out_dir);
  const std::string json_path = (std::filesystem::path(out_dir) / "report.json").string();
  const std::string csv_path = (std::filesystem::path(out_dir) / "report.csv").string();

  nlohmann::json doc;
  doc["instance"] = instance_to_json(instance);
  try {
    const int n = instance.job_count();
    const int m = instance.machine_count();

    // Optimal schedule and its structural checks.
    const MftTrace trace = mft_schedule(instance);
    const Rational opt_cost = social_cost(instance, trace.schedule);
    const ConsecutiveWitness consecutive = check_consecutive_property(instance, trace.schedule);
    const CriticalJobs cr = critical_jobs(instance, trace);
    const SubChains chains = sub_chains(instance, trace, cr);
    const EndpointCheck endpoint = check_subchain_endpoint(instance, trace, chains);
    doc["optimal"] = {{"schedule", schedule_to_json(trace.schedule)},
                      {"cost", format_rational(opt_cost)},
                      {"cost_approx", to_double(opt_cost)},
                      {"trace", trace_to_json(trace)},
                      {"block_star", block_star(instance, trace)},
                      {"consecutive_property", consecutive.holds},
                      {"chain_endpoint_identity", endpoint.holds}};
    doc["chains"] = sub_chains_to_json(chains);

    // Equilibria and the price of anarchy.
    const PoaReport poa = compute_poa(instance);
    doc["poa"] = poa_report_to_json(poa);
    long long space = 1;
    bool crosscheck_feasible = true;
    for (int j = 0; j < n && crosscheck_feasible; ++j) {
      if (space > 100'000 / m) crosscheck_feasible = false;
      space *= m;
    }
    if (crosscheck_feasible) {
      const std::vector<Schedule> enumerated =
          ibarra_kim(instance, TieBreakPolicy::EnumerateAll);
      std::vector<Schedule> brute = brute_force_nash(instance);
      doc["equilibria_enumeration_crosscheck"] = enumerated == brute;
    } else {
      doc["equilibria_enumeration_crosscheck"] = "skipped-guard";
    }

    const Schedule& worst_ne =
        std::max_element(poa.equilibrium_costs.begin(), poa.equilibrium_costs.end(),
                         [](const auto& a, const auto& b) { return a.second < b.second; })
            ->first;

    // Applicable dual fittings, each verified against every equilibrium.
    std::vector<FittingVariant> variants = {FittingVariant::General};
    if (m == 2) variants.push_back(FittingVariant::TwoMachine);
    if (is_divisible_speeds(instance)) variants.push_back(FittingVariant::Divisible);
    doc["fittings"] = nlohmann::json::array();
    DualFitting primary_fitting;
    FittingCheck primary_check;
    for (FittingVariant variant : variants) {
      const DualFitting fitting = make_fitting(instance, trace, variant);
      bool all_feasible = true;
      for (const auto& [ne, cost] : poa.equilibrium_costs) {
        if (!verify_fitting(instance, trace.schedule, ne, fitting).feasible) {
          all_feasible = false;
        }
      }
      const FittingCheck worst_check =
          verify_fitting(instance, trace.schedule, worst_ne, fitting);
      nlohmann::json entry = fitting_to_json(fitting);
      entry["worst_equilibrium_check"] = fitting_check_to_json(worst_check);
      entry["feasible_for_all_equilibria"] = all_feasible;
      doc["fittings"].push_back(entry);
      const bool primary =
          (m == 2 && variant == FittingVariant::TwoMachine) ||
          (m != 2 && variant == (is_divisible_speeds(instance) ? FittingVariant::Divisible
                                                               : FittingVariant::General));
      if (primary) {
        primary_fitting = fitting;
        primary_check = worst_check;
      }
    }

    // The summed linear program and its dual for the chosen role pair.
    const Schedule lp_opt = role_opt.value_or(trace.schedule);
    const Schedule lp_ne = role_ne.value_or(worst_ne);
    const LinearProgram primal = build_primal(instance, lp_opt, lp_ne, DeviationForm::Sum);
    const LinearProgram dual = build_dual(instance, lp_opt, lp_ne, DeviationForm::Sum);
    const LpSolution primal_solution = simplex_solve(primal);
    const LpSolution dual_solution = simplex_solve(dual);
    doc["lp"] = {{"roles_overridden", role_opt.has_value() || role_ne.has_value()},
                 {"role_opt", schedule_to_json(lp_opt)},
                 {"role_ne", schedule_to_json(lp_ne)},
                 {"role_ne_is_nash", static_cast<bool>(is_nash(instance, lp_ne))},
                 {"role_opt_is_optimal", static_cast<bool>(is_optimal(instance, lp_opt))},
                 {"primal", lp_solution_to_json(primal_solution)},
                 {"dual", lp_solution_to_json(dual_solution)},
                 {"strong_duality", primal_solution.status == LpStatus::Optimal &&
                                        dual_solution.status == LpStatus::Optimal &&
                                        primal_solution.value == dual_solution.value}};

    write_csv(csv_path, instance, trace.schedule, worst_ne, primary_fitting, primary_check);
    doc["csv"] = csv_path;

    RunReport report;
    report.instances_evaluated = 1;
    report.best_poa = poa.poa;
    report.best_instance = instance;
    report.bound = poa.bound;
    report.csv_path = csv_path;
    if (!poa.bound_satisfied) {
      report.violations.push_back("price of anarchy exceeds proven bound");
      doc["violations"] = report.violations;
      std::ofstream(json_path) << doc.dump(2) << '\n';
      throw bound_violation_error("price of anarchy " + format_rational(poa.poa) +
                                  " exceeds proven bound " + format_rational(poa.bound));
    }

    std::ofstream json_out(json_path);
    if (!json_out) throw validation_error("cannot write report file " + json_path);
    json_out << doc.dump(2) << '\n';
    return report;
  } catch (const std::exception& error) {
    // Flush what we have with an error marker, then propagate.
    doc["error"] = error.what();
    std::ofstream json_out(json_path);
    if (json_out) json_out << doc.dump(2) << '\n';
    throw;
  }
}

}  // namespace schedgame
