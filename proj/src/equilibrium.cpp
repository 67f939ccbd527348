#include "schedgame/equilibrium.hpp"

#include <algorithm>
#include <string>

#include "schedgame/dualfit.hpp"
#include "schedgame/errors.hpp"
#include "schedgame/optimal.hpp"

namespace schedgame {

namespace {

struct Branch {
  std::vector<int> assignment;   // 1-based machines for jobs 1..j
  RationalVector load;           // per-machine load of jobs 1..j
};

}  // namespace

std::vector<Schedule> ibarra_kim(const Instance& instance, TieBreakPolicy policy,
                                 long long leaf_guard) {
  validate_canonical(instance);
  const int n = instance.job_count();
  const int m = instance.machine_count();

  std::vector<Branch> branches;
  branches.push_back(Branch{{}, RationalVector::Zero(m)});
  branches.front().assignment.reserve(n);

  for (int job = 1; job <= n; ++job) {
    std::vector<Branch> next;
    next.reserve(branches.size());
    for (Branch& branch : branches) {
      Rational best_value;
      std::vector<int> argmin;
      for (int i = 1; i <= m; ++i) {
        Rational value = (branch.load(i - 1) + instance.ptime(job)) / instance.speed(i);
        if (argmin.empty() || value < best_value) {
          best_value = value;
          argmin.assign(1, i);
        } else if (value == best_value) {
          argmin.push_back(i);
        }
      }
      std::vector<int> chosen;
      switch (policy) {
        case TieBreakPolicy::LowestIndex:
          chosen.assign(1, argmin.front());
          break;
        case TieBreakPolicy::HighestIndex:
          chosen.assign(1, argmin.back());
          break;
        case TieBreakPolicy::EnumerateAll:
          chosen = argmin;  // ascending machine index
          break;
      }
      if (static_cast<long long>(next.size() + chosen.size()) > leaf_guard) {
        throw guard_error("ibarra_kim: tie branching exceeds guard of " +
                          std::to_string(leaf_guard) + " leaves");
      }
      for (size_t c = 0; c + 1 < chosen.size(); ++c) {
        Branch copy = branch;
        copy.assignment.push_back(chosen[c]);
        copy.load(chosen[c] - 1) += instance.ptime(job);
        next.push_back(std::move(copy));
      }
      branch.assignment.push_back(chosen.back());
      branch.load(chosen.back() - 1) += instance.ptime(job);
      next.push_back(std::move(branch));
    }
    branches = std::move(next);
  }

  std::vector<Schedule> result;
  result.reserve(branches.size());
  for (Branch& branch : branches) {
    result.push_back(Schedule{std::move(branch.assignment)});
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

NashWitness is_nash(const Instance& instance, const Schedule& schedule) {
  validate(instance, schedule);
  const int n = instance.job_count();
  const int m = instance.machine_count();

  RationalVector load_before = RationalVector::Zero(m);  // jobs with index < j
  for (int j = 1; j <= n; ++j) {
    const int mine = schedule.machine_of(j);
    const Rational own = (load_before(mine - 1) + instance.ptime(j)) / instance.speed(mine);
    for (int i = 1; i <= m; ++i) {
      if (i == mine) continue;
      const Rational moved = (load_before(i - 1) + instance.ptime(j)) / instance.speed(i);
      if (moved < own) {
        return NashWitness{false, j, i};
      }
    }
    load_before(mine - 1) += instance.ptime(j);
  }
  return NashWitness{true, -1, -1};
}

std::vector<Schedule> brute_force_nash(const Instance& instance, long long guard) {
  validate(instance);
  const int n = instance.job_count();
  const int m = instance.machine_count();

  long long space = 1;
  for (int j = 0; j < n; ++j) {
    if (space > guard / m) {
      throw guard_error("brute_force_nash: m^n = " + std::to_string(m) + "^" +
                        std::to_string(n) + " exceeds guard " + std::to_string(guard));
    }
    space *= m;
  }

  std::vector<Schedule> result;
  Schedule candidate;
  candidate.assignment.assign(n, 1);
  while (true) {
    if (is_nash(instance, candidate)) {
      result.push_back(candidate);
    }
    int pos = n - 1;
    while (pos >= 0 && candidate.assignment[pos] == m) {
      candidate.assignment[pos] = 1;
      --pos;
    }
    if (pos < 0) break;
    candidate.assignment[pos] += 1;
  }
  return result;  // odometer order == lexicographic
}

Rational bound_formula(int machines, bool divisible) {
  if (machines < 1) {
    throw validation_error("bound_formula: machine count must be >= 1");
  }
  Rational bound = 2 - Rational(1, 2 * (2 * machines - 1));
  if (machines == 2) {
    bound = std::min(bound, Rational(3, 2));
  }
  if (divisible) {
    bound = std::min(bound, 2 - Rational(1, 2 * machines));
  }
  return bound;
}

PoaReport compute_poa(const Instance& instance, long long guard) {
  validate_canonical(instance);
  const int n = instance.job_count();
  const int m = instance.machine_count();

  PoaReport report;
  report.optimal_cost = social_cost(instance, mft_schedule(instance).schedule);
  if (report.optimal_cost == 0) {
    throw validation_error("compute_poa: degenerate instance with zero optimal cost");
  }

  // Exhaustive when affordable; otherwise tie-break enumeration, which
  // produces the same set.
  std::vector<Schedule> equilibria;
  long long space = 1;
  bool within_guard = true;
  for (int j = 0; j < n && within_guard; ++j) {
    if (space > guard / m) within_guard = false;
    space *= m;
  }
  if (within_guard) {
    equilibria = brute_force_nash(instance, guard);
  } else {
    equilibria = ibarra_kim(instance, TieBreakPolicy::EnumerateAll);
  }
  if (equilibria.empty()) {
    throw internal_error("compute_poa: equilibrium set is empty");
  }

  Rational worst = 0;
  for (const Schedule& ne : equilibria) {
    Rational cost = social_cost(instance, ne);
    worst = std::max(worst, cost);
    report.equilibrium_costs.emplace_back(ne, std::move(cost));
  }
  report.poa = worst / report.optimal_cost;
  report.bound = bound_formula(m, is_divisible_speeds(instance));
  report.bound_satisfied = report.poa <= report.bound;
  return report;
}

}  // namespace schedgame
