#include "schedgame/optimal.hpp"

#include <algorithm>
#include <string>

#include "schedgame/errors.hpp"

namespace schedgame {

MftTrace mft_schedule(const Instance& instance) {
  validate_canonical(instance);
  const int n = instance.job_count();
  const int m = instance.machine_count();

  MftTrace trace;
  trace.schedule.assignment.assign(n, 0);
  trace.assignment_order.reserve(n);

  std::vector<int> counts(m, 0);
  for (int job = n; job >= 1; --job) {
    int best = 1;
    Rational best_value = Rational(counts[0] + 1) / instance.speed(1);
    for (int i = 2; i <= m; ++i) {
      Rational value = Rational(counts[i - 1] + 1) / instance.speed(i);
      if (value <= best_value) {  // ties go to the highest machine index
        best = i;
        best_value = value;
      }
    }
    counts[best - 1] += 1;
    trace.schedule.assignment[job - 1] = best;
    trace.assignment_order.push_back({job, best, best_value});
  }

  if (OptimalityWitness check = is_optimal(instance, trace.schedule); !check) {
    throw internal_error("greedy produced a non-optimal schedule; violated at (i=" +
                         std::to_string(check.machine_i) + ", l=" + std::to_string(check.machine_l) +
                         ", j=" + std::to_string(check.job) + ")");
  }
  return trace;
}

OptimalityWitness is_optimal(const Instance& instance, const Schedule& schedule) {
  validate(instance, schedule);
  const int n = instance.job_count();
  const int m = instance.machine_count();
  const Eigen::MatrixXi counts = psi_table(schedule, m);

  // Row j = 0 covers the boundary: opening a fresh slot on any machine must
  // not beat the slot of the last job placed on any other machine. Without it
  // the family is necessary but not sufficient.
  for (int j = 0; j <= n; ++j) {
    for (int i = 1; i <= m; ++i) {
      const Rational lhs = Rational(counts(j, i - 1) + 1) / instance.speed(i);
      for (int l = 1; l <= m; ++l) {
        const Rational rhs = Rational(counts(j, l - 1)) / instance.speed(l);
        if (lhs < rhs) {
          return OptimalityWitness{false, i, l, j};
        }
      }
    }
  }
  return OptimalityWitness{true, 0, 0, -1};
}

namespace {

Rational assignment_cost(const Instance& instance, const std::vector<int>& machine_of,
                         RationalVector& load_scratch) {
  // Independent costing: walk jobs in priority order feeding per-machine
  // prefix sums, exactly the per-machine queue simulation.
  load_scratch.setZero();
  Rational total = 0;
  const int n = static_cast<int>(machine_of.size());
  for (int j = 0; j < n; ++j) {
    const int i = machine_of[j];
    load_scratch(i) += instance.processing(j);
    total += load_scratch(i) / instance.speeds(i);
  }
  return total;
}

}  // namespace

BruteForceOptimum brute_force_optimal(const Instance& instance, long long guard) {
  validate(instance);
  const int n = instance.job_count();
  const int m = instance.machine_count();

  long long space = 1;
  for (int j = 0; j < n; ++j) {
    if (space > guard / m) {
      throw guard_error("brute_force_optimal: m^n = " + std::to_string(m) + "^" +
                        std::to_string(n) + " exceeds guard " + std::to_string(guard) +
                        "; use mft_schedule instead");
    }
    space *= m;
  }

  std::vector<int> machine_of(n, 0);  // 0-based machine indices
  RationalVector load(m);
  BruteForceOptimum best;
  bool first = true;
  while (true) {
    Rational cost = assignment_cost(instance, machine_of, load);
    if (first || cost < best.cost) {
      best.cost = cost;
      best.schedules.clear();
      first = false;
    }
    if (cost == best.cost) {
      Schedule s;
      s.assignment.resize(n);
      for (int j = 0; j < n; ++j) s.assignment[j] = machine_of[j] + 1;
      best.schedules.push_back(std::move(s));
    }
    // Odometer step (last job varies fastest => lexicographic output order).
    int pos = n - 1;
    while (pos >= 0 && machine_of[pos] == m - 1) {
      machine_of[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    machine_of[pos] += 1;
  }
  return best;
}

std::vector<int> block_star(const Instance& instance, const MftTrace& trace) {
  const int m = instance.machine_count();
  std::vector<int> block;
  for (const MftStep& step : trace.assignment_order) {
    if (step.machine != m) break;
    block.push_back(step.job);
  }
  std::sort(block.begin(), block.end());
  return block;
}

ConsecutiveWitness check_consecutive_property(const Instance& instance,
                                              const Schedule& schedule) {
  if (OptimalityWitness check = is_optimal(instance, schedule); !check) {
    throw validation_error("check_consecutive_property requires an optimal schedule");
  }
  const int n = instance.job_count();
  const int m = instance.machine_count();
  for (int k = 2; k <= n; ++k) {
    if (schedule.machine_of(k) != m && schedule.machine_of(k - 1) == schedule.machine_of(k)) {
      return ConsecutiveWitness{false, k};
    }
  }
  return ConsecutiveWitness{true, -1};
}

}  // namespace schedgame
