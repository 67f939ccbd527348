#pragma once

#include <vector>

#include "schedgame/model.hpp"

namespace schedgame {

struct MftStep {
  int job;
  int machine;
  Rational positional_value;  // (psi_i + 1) / s_i at assignment time
};

/// Result of the backward greedy: the produced schedule plus the assignment
/// order (jobs n, n-1, ..., 1) with the positional value each job was bought
/// at. The trace is what the block/chain analysis consumes.
struct MftTrace {
  Schedule schedule;
  std::vector<MftStep> assignment_order;
};

struct OptimalityWitness {
  bool optimal = false;
  // Violated inequality (psi_i + 1)/s_i >= psi_l/s_l at job index `job`.
  // job = 0 denotes the whole-schedule boundary row of the same family
  // (counts taken over all jobs), which is part of the exact criterion.
  int machine_i = 0;
  int machine_l = 0;
  int job = -1;

  explicit operator bool() const { return optimal; }
};

/// Backward greedy: assigns jobs from largest to smallest, each to a machine
/// minimizing (psi_i + 1) / s_i, ties resolved toward the highest machine
/// index. The output is checked against is_optimal before returning.
MftTrace mft_schedule(const Instance& instance);

/// Exact optimality test: (psi_i(tau,j) + 1)/s_i >= psi_l(tau,j)/s_l must
/// hold for every machine pair (i, l) and every j in 0..n. A schedule passes
/// iff it attains the minimum social cost. Returns the first violating
/// triple otherwise (scanning j ascending from 0, then i, then l).
OptimalityWitness is_optimal(const Instance& instance, const Schedule& schedule);

struct BruteForceOptimum {
  Rational cost;
  std::vector<Schedule> schedules;  // all minimizers, lexicographically sorted
};

/// Exhaustive oracle over all m^n assignments. Costs each assignment by an
/// independent per-machine prefix-sum pass. Throws guard_error when m^n
/// exceeds `guard`.
BruteForceOptimum brute_force_optimal(const Instance& instance, long long guard = 1'000'000);

/// The maximal run of largest jobs that the greedy places on the fastest
/// machine before any job goes elsewhere, as a sorted set of job indices.
std::vector<int> block_star(const Instance& instance, const MftTrace& trace);

struct ConsecutiveWitness {
  bool holds = false;
  int job = -1;  // k with tau_k != m and tau_{k-1} == tau_k

  explicit operator bool() const { return holds; }
};

/// Structural property of optimal schedules: two consecutive jobs never share
/// a machine other than the fastest one. Requires an optimal schedule
/// (validation_error otherwise).
ConsecutiveWitness check_consecutive_property(const Instance& instance, const Schedule& schedule);

}  // namespace schedgame
