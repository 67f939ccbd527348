// Command-line front end: exact analysis of priority-order scheduling games
// on speed-related machines. All I/O is JSON; rationals are exact strings.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "schedgame/dualfit.hpp"
#include "schedgame/equilibrium.hpp"
#include "schedgame/errors.hpp"
#include "schedgame/json_io.hpp"
#include "schedgame/lp.hpp"
#include "schedgame/optimal.hpp"
#include "schedgame/search.hpp"

namespace {

using namespace schedgame;
using nlohmann::json;

std::string read_all(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw validation_error("cannot read file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Instance load_instance(const std::string& path) { return parse_instance(read_all(path)); }

std::optional<Schedule> load_schedule(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return parse_schedule(read_all(path));
}

void emit(const json& j) { std::cout << j.dump(2) << std::endl; }

int run(int argc, char** argv) {
  CLI::App app{"Exact schedules, equilibria, price-of-anarchy bounds and dual "
               "fittings for priority-order scheduling games on related machines"};
  app.require_subcommand(1);

  std::string instance_path = "-";
  app.add_option("-i,--instance", instance_path,
                 "Instance JSON file ('-' or omitted reads stdin)")
      ->capture_default_str();

  auto* opt_cmd = app.add_subcommand("opt", "Optimal schedule via the backward greedy");
  bool with_trace = false;
  opt_cmd->add_flag("--trace", with_trace, "Include the assignment trace");

  auto* nash_cmd = app.add_subcommand("nash", "Pure equilibria via the forward greedy");
  std::string policy_name = "lowest";
  bool all_ties = false;
  nash_cmd->add_option("--policy", policy_name, "Tie-break policy: lowest|highest|all")
      ->check(CLI::IsMember({"lowest", "highest", "all"}))
      ->capture_default_str();
  nash_cmd->add_flag("--all", all_ties, "Shorthand for --policy all");

  auto* poa_cmd = app.add_subcommand("poa", "Exact price of anarchy and theorem bound");

  auto* lp_cmd = app.add_subcommand("lp", "Build (and optionally solve) the paper programs");
  std::string variant_name = "sum";
  std::string role_opt_path, role_ne_path;
  bool solve = false, want_dual = false;
  lp_cmd->add_option("--variant", variant_name, "Deviation structure: weak|sum")
      ->check(CLI::IsMember({"weak", "sum"}))
      ->capture_default_str();
  lp_cmd->add_option("--role-opt", role_opt_path, "Schedule JSON for the optimal role");
  lp_cmd->add_option("--role-ne", role_ne_path, "Schedule JSON for the equilibrium role");
  lp_cmd->add_flag("--solve", solve, "Solve with the exact simplex");
  lp_cmd->add_flag("--dual", want_dual, "Emit the dual program instead of the primal");

  auto* verify_cmd = app.add_subcommand("verify", "Verify a dual fitting constraint-by-constraint");
  std::string fitting_name = "general";
  std::string verify_ne_path;
  verify_cmd->add_option("--fitting", fitting_name,
                         "Fitting variant: two-machine|general|divisible")
      ->check(CLI::IsMember({"two-machine", "general", "divisible"}))
      ->capture_default_str();
  verify_cmd->add_option("--role-ne", verify_ne_path,
                         "Verify against this schedule only (default: every equilibrium)");

  auto* search_cmd = app.add_subcommand("search", "Randomized worst-case instance hunt");
  SearchConfig config;
  std::string pool_text = "1,2";
  search_cmd->add_option("--machines", config.machines)->capture_default_str();
  search_cmd->add_option("--jobs", config.jobs)->capture_default_str();
  search_cmd->add_option("--seed", config.seed)->capture_default_str();
  search_cmd->add_option("--iters", config.iterations)->capture_default_str();
  search_cmd->add_option("--speed-pool", pool_text, "Comma-separated rational speeds")
      ->capture_default_str();
  search_cmd->add_option("--max-num", config.max_numerator, "Largest numerator in the grid")
      ->capture_default_str();
  search_cmd->add_option("--max-den", config.max_denominator, "Largest denominator in the grid")
      ->capture_default_str();

  auto* report_cmd = app.add_subcommand("report", "Full pipeline report (JSON + CSV)");
  std::string out_dir = ".";
  std::string report_opt_path, report_ne_path;
  report_cmd->add_option("--out", out_dir, "Output directory")->capture_default_str();
  report_cmd->add_option("--role-opt", report_opt_path, "Override the optimal-role schedule");
  report_cmd->add_option("--role-ne", report_ne_path, "Override the equilibrium-role schedule");

  CLI11_PARSE(app, argc, argv);

  if (opt_cmd->parsed()) {
    const Instance instance = load_instance(instance_path);
    const MftTrace trace = mft_schedule(instance);
    json out{{"schedule", schedule_to_json(trace.schedule)},
             {"cost", format_rational(social_cost(instance, trace.schedule))}};
    if (with_trace) out["trace"] = trace_to_json(trace);
    emit(out);
  } else if (nash_cmd->parsed()) {
    const Instance instance = load_instance(instance_path);
    TieBreakPolicy policy = TieBreakPolicy::LowestIndex;
    if (all_ties || policy_name == "all") policy = TieBreakPolicy::EnumerateAll;
    else if (policy_name == "highest") policy = TieBreakPolicy::HighestIndex;
    json out = json::array();
    for (const Schedule& schedule : ibarra_kim(instance, policy)) {
      out.push_back(schedule_to_json(schedule));
    }
    emit(out);
  } else if (poa_cmd->parsed()) {
    const Instance instance = load_instance(instance_path);
    const PoaReport report = compute_poa(instance);
    emit(poa_report_to_json(report));
    if (!report.bound_satisfied) {
      throw bound_violation_error("price of anarchy exceeds the proven bound");
    }
  } else if (lp_cmd->parsed()) {
    const Instance instance = load_instance(instance_path);
    const DeviationForm form =
        variant_name == "weak" ? DeviationForm::Weak : DeviationForm::Sum;
    Schedule opt = load_schedule(role_opt_path)
                       .value_or(mft_schedule(instance).schedule);
    Schedule ne;
    if (auto loaded = load_schedule(role_ne_path)) {
      ne = *loaded;
    } else {
      const PoaReport poa = compute_poa(instance);
      ne = std::max_element(poa.equilibrium_costs.begin(), poa.equilibrium_costs.end(),
                            [](const auto& a, const auto& b) { return a.second < b.second; })
               ->first;
    }
    const LinearProgram program = want_dual ? build_dual(instance, opt, ne, form)
                                            : build_primal(instance, opt, ne, form);
    json out{{"lp", lp_to_json(program)}};
    if (solve) out["solution"] = lp_solution_to_json(simplex_solve(program));
    emit(out);
  } else if (verify_cmd->parsed()) {
    const Instance instance = load_instance(instance_path);
    FittingVariant variant = FittingVariant::General;
    if (fitting_name == "two-machine") variant = FittingVariant::TwoMachine;
    else if (fitting_name == "divisible") variant = FittingVariant::Divisible;
    const MftTrace trace = mft_schedule(instance);
    const DualFitting fitting = make_fitting(instance, trace, variant);
    const SubChains chains = sub_chains(instance, trace, critical_jobs(instance, trace));

    std::vector<Schedule> targets;
    if (auto loaded = load_schedule(verify_ne_path)) {
      targets.push_back(*loaded);
    } else {
      targets = ibarra_kim(instance, TieBreakPolicy::EnumerateAll);
    }
    json results = json::array();
    bool verdict = true;
    for (const Schedule& ne : targets) {
      const FittingCheck check = verify_fitting(instance, trace.schedule, ne, fitting);
      verdict = verdict && check.feasible;
      json entry = fitting_check_to_json(check);
      entry["schedule"] = schedule_to_json(ne);
      results.push_back(entry);
    }
    emit(json{{"fitting", fitting_to_json(fitting)},
              {"chains", sub_chains_to_json(chains)},
              {"optimal_schedule", schedule_to_json(trace.schedule)},
              {"results", results},
              {"verdict", verdict}});
  } else if (search_cmd->parsed()) {
    std::stringstream pool_stream(pool_text);
    config.speed_pool.clear();
    for (std::string item; std::getline(pool_stream, item, ',');) {
      config.speed_pool.push_back(parse_rational(item));
    }
    const RunReport report = search_worst_case(config);
    emit(json{{"instances_evaluated", report.instances_evaluated},
              {"best_poa", format_rational(report.best_poa)},
              {"best_poa_approx", to_double(report.best_poa)},
              {"best_instance", instance_to_json(report.best_instance)},
              {"bound", format_rational(report.bound)},
              {"violations", report.violations},
              {"csv_path", report.csv_path}});
  } else if (report_cmd->parsed()) {
    const Instance instance = load_instance(instance_path);
    const RunReport report = run_report(instance, out_dir, load_schedule(report_opt_path),
                                        load_schedule(report_ne_path));
    emit(json{{"instances_evaluated", report.instances_evaluated},
              {"poa", format_rational(report.best_poa)},
              {"bound", format_rational(report.bound)},
              {"violations", report.violations},
              {"csv_path", report.csv_path},
              {"json_path", out_dir + std::string("/report.json")}});
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const validation_error& error) {
    std::cerr << "validation error: " << error.what() << std::endl;
    return 2;
  } catch (const guard_error& error) {
    std::cerr << "guard exceeded: " << error.what() << std::endl;
    return 3;
  } catch (const bound_violation_error& error) {
    std::cerr << "THEOREM BOUND VIOLATION (implementation bug): " << error.what() << std::endl;
    return 4;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << std::endl;
    return 1;
  }
}
