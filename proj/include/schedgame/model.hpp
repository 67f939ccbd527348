#pragma once

#include <vector>

#include <Eigen/Core>

#include "schedgame/rational.hpp"

namespace schedgame {

/// A scheduling instance: n jobs with processing times p_1 <= ... <= p_n and
/// m machines with speeds s_1 <= ... <= s_m. In canonical form the slowest
/// speed is 1. Job j takes p_j / s_i time units on machine i, and every
/// machine processes its jobs in the global priority order (shorter jobs
/// first, ties by job index).
struct Instance {
  RationalVector processing;
  RationalVector speeds;

  int job_count() const { return static_cast<int>(processing.size()); }
  int machine_count() const { return static_cast<int>(speeds.size()); }

  // 1-based accessors matching the external numbering of jobs and machines.
  const Rational& ptime(int job) const { return processing(job - 1); }
  const Rational& speed(int machine) const { return speeds(machine - 1); }
};

/// An assignment of jobs to machines: assignment[j-1] is the 1-based machine
/// index chosen by job j. Order within a machine is implied by the global
/// priority, so the vector determines the schedule completely.
struct Schedule {
  std::vector<int> assignment;

  int job_count() const { return static_cast<int>(assignment.size()); }
  int machine_of(int job) const { return assignment[job - 1]; }
};

bool operator==(const Schedule& a, const Schedule& b);
bool operator<(const Schedule& a, const Schedule& b);

/// Throws validation_error unless the instance has n >= 1, m >= 1,
/// nonnegative processing times sorted non-decreasingly, and positive
/// speeds sorted non-decreasingly. Messages name the offending entry.
void validate(const Instance& instance);

/// Additionally requires the canonical normalization s_1 = 1.
void validate_canonical(const Instance& instance);

/// Throws validation_error unless the schedule matches the instance:
/// one entry per job, every entry in 1..m.
void validate(const Instance& instance, const Schedule& schedule);

/// Canonicalizes a raw instance: jobs sorted non-decreasingly by processing
/// time (ties keep their original order), speeds sorted non-decreasingly and
/// divided by the minimum speed so that s_1 = 1.
Instance normalize(const Instance& raw);

/// Number of jobs on `machine` with strictly lower priority than `job`,
/// i.e. |{k > job : assignment_k = machine}|. Indices are 1-based.
int psi(const Schedule& schedule, int machine, int job);

/// Full table of psi values: entry (j, i-1) = psi(schedule, i, j) for
/// j = 0..n and machines i = 1..m. Row 0 holds the per-machine job counts
/// (no job has priority over index 0), row n is all zeros.
Eigen::MatrixXi psi_table(const Schedule& schedule, int machines);

/// Completion time of `job`: the load of all weakly-higher-priority jobs on
/// its machine divided by the machine speed.
Rational completion_time(const Instance& instance, const Schedule& schedule, int job);

/// Sum of completion times. Evaluated both as the direct per-machine sum and
/// as the positional form sum_j p_j * (psi + 1) / s; the two must agree
/// exactly or an internal_error is thrown.
Rational social_cost(const Instance& instance, const Schedule& schedule);

}  // namespace schedgame
