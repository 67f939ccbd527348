#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schedgame/equilibrium.hpp"
#include "schedgame/model.hpp"

namespace schedgame {

/// Parameters of the randomized worst-case hunt. Processing times are drawn
/// from the rational grid {num/den : 1 <= num <= max_numerator,
/// 1 <= den <= max_denominator}, speeds uniformly from speed_pool.
struct SearchConfig {
  int machines = 2;
  int jobs = 3;
  std::uint64_t seed = 0;
  long long iterations = 1;
  std::vector<Rational> speed_pool = {Rational(1), Rational(2)};
  long long max_numerator = 8;
  long long max_denominator = 1;
};

struct RunReport {
  long long instances_evaluated = 0;
  Rational best_poa;
  Instance best_instance;
  Rational bound;
  std::vector<std::string> violations;  // empty on every healthy run
  std::string csv_path;
};

/// Deterministic function of the config: same seed, same instance.
Instance gen_random(const SearchConfig& config);

/// Evaluates `iterations` random instances plus greedy single-coordinate
/// grid perturbations (kept while the price of anarchy strictly improves)
/// and returns the worst instance found. Every evaluation asserts the
/// theorem bound; a violation throws bound_violation_error with the
/// counterexample attached, since it would disprove a theorem.
RunReport search_worst_case(const SearchConfig& config);

/// Full pipeline on one instance: optimal schedule with its structural
/// checks, equilibrium set with the enumeration cross-check, price of
/// anarchy, every applicable dual fitting verified against every
/// equilibrium, and the primal/dual programs solved. Writes report.json and
/// report.csv under out_dir. Optional role overrides feed the LP section
/// (e.g. a hand-picked schedule pair); the report notes when the
/// equilibrium-role schedule is not actually an equilibrium.
RunReport run_report(const Instance& instance, const std::string& out_dir,
                     const std::optional<Schedule>& role_opt = std::nullopt,
                     const std::optional<Schedule>& role_ne = std::nullopt);

}  // namespace schedgame
