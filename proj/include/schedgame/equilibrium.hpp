#pragma once

#include <utility>
#include <vector>

#include "schedgame/model.hpp"

namespace schedgame {

/// How the forward greedy resolves completion-time ties between machines.
/// EnumerateAll branches over every minimizing machine and returns the whole
/// set of reachable schedules, which is exactly the pure equilibrium set.
enum class TieBreakPolicy { LowestIndex, HighestIndex, EnumerateAll };

/// Forward greedy: jobs in priority order, each placed on a machine
/// minimizing its own completion time. Deterministic policies yield a
/// singleton; EnumerateAll yields the lexicographically sorted set of all
/// tie-break outcomes. Throws guard_error when the branch count would
/// exceed `leaf_guard`.
std::vector<Schedule> ibarra_kim(const Instance& instance, TieBreakPolicy policy,
                                 long long leaf_guard = 100'000);

struct NashWitness {
  bool nash = false;
  int job = -1;      // profitable deviation: this job ...
  int machine = -1;  // ... strictly prefers this machine

  explicit operator bool() const { return nash; }
};

/// Pure equilibrium test: no job can strictly reduce its completion time by
/// moving to another machine (all other jobs held fixed, the mover re-enters
/// the target queue at its global priority).
NashWitness is_nash(const Instance& instance, const Schedule& schedule);

/// Exhaustive equilibrium oracle over all m^n assignments.
std::vector<Schedule> brute_force_nash(const Instance& instance, long long guard = 1'000'000);

/// Proven upper bound on the price of anarchy for m machines:
/// 2 - 1/(2(2m-1)) in general, sharpened to 3/2 for m = 2 and to
/// 2 - 1/(2m) for divisible speeds; the minimum of the applicable bounds.
Rational bound_formula(int machines, bool divisible);

struct PoaReport {
  Rational optimal_cost;
  std::vector<std::pair<Schedule, Rational>> equilibrium_costs;  // sorted by schedule
  Rational poa;   // max equilibrium cost / optimal cost
  Rational bound;
  bool bound_satisfied = false;
};

/// Exact price of anarchy of one instance: equilibrium set (exhaustively when
/// m^n is within the guard, otherwise via tie-break enumeration, which yields
/// the same set), optimal cost from the backward greedy, and the applicable
/// theorem bound. Rejects instances with zero optimal cost.
PoaReport compute_poa(const Instance& instance, long long guard = 1'000'000);

}  // namespace schedgame
