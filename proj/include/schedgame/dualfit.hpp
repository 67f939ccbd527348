#pragma once

#include <map>
#include <vector>

#include "schedgame/model.hpp"
#include "schedgame/optimal.hpp"

namespace schedgame {

/// The structurally significant jobs of the canonical optimal schedule: for
/// each non-fastest machine the largest-index job it carries, plus the
/// smallest job of the fastest machine's leading block. Machines that carry
/// no job have no entry.
struct CriticalJobs {
  std::map<int, int> per_machine;  // machine i in 1..m-1 -> CR_i
  int cr_m = 0;                    // smallest job of the leading block
};

struct SubChain {
  int anchor_machine = 0;            // machine of the chain's first critical job
  std::vector<int> members;          // consecutive job indices
  std::vector<int> critical_members; // critical jobs inside, ascending
};

struct SubChains {
  std::vector<SubChain> chains;
  // Set when the machine indices of the critical jobs are not increasing
  // with job index; the z-values then follow position-in-chain order.
  bool machine_order_anomaly = false;
};

enum class FittingVariant { TwoMachine, General, Divisible };

/// An explicit dual point (beta, y, z_1..z_{n-1}) whose objective beta upper
/// bounds the price of anarchy once it is verified feasible. z_0 and z_n are
/// identically zero and not stored.
struct DualFitting {
  Rational beta;
  Rational y;
  RationalVector z;  // length n-1
  FittingVariant provenance = FittingVariant::General;
};

/// Reads the critical jobs off the canonical greedy trace.
CriticalJobs critical_jobs(const Instance& instance, const MftTrace& trace);

/// Recursive chain construction: a chain starts at the smallest uncovered
/// critical job and extends up to (excluding) the next job placed on the
/// fastest machine.
SubChains sub_chains(const Instance& instance, const MftTrace& trace, const CriticalJobs& cr);

/// Builds the dual point of the requested variant from the canonical trace.
/// TwoMachine requires m = 2; Divisible requires divisible speeds.
DualFitting make_fitting(const Instance& instance, const MftTrace& trace, FittingVariant variant);

struct FittingCheck {
  bool feasible = false;
  RationalVector job_slacks;     // one entry per job, >= 0 iff satisfied
  std::vector<int> tight_jobs;   // jobs with exactly zero slack
};

/// Evaluates the per-job dual constraint exactly for the given optimal-role
/// and equilibrium-role schedules. Feasible iff every slack is >= 0 and the
/// point respects the sign conditions y >= 0, z >= 0. The slacks agree with
/// check_point_feasible on the corresponding dual program.
FittingCheck verify_fitting(const Instance& instance, const Schedule& opt, const Schedule& ne,
                            const DualFitting& fitting);

/// True iff every faster speed is an integer multiple of every slower one.
bool is_divisible_speeds(const Instance& instance);

/// For a >= b >= 1: a/(2b) <= floor(a/b). Throws on violated precondition.
bool check_floor_lemma(const Rational& a, const Rational& b);

struct EndpointWitness {
  int anchor_machine = 0;
  int next_fast_job = 0;  // first fastest-machine job after the chain
  int observed = 0;       // psi_m(tau*, j) + 1
  Integer expected;       // floor(s_m / s_anchor)
  bool holds = false;
};

struct EndpointCheck {
  bool holds = false;
  std::vector<EndpointWitness> witnesses;  // one per chain
};

/// Chain end-point identity: right after a chain anchored at machine i, the
/// fastest machine holds exactly floor(s_m / s_i) jobs of higher index.
EndpointCheck check_subchain_endpoint(const Instance& instance, const MftTrace& trace,
                                      const SubChains& chains);

}  // namespace schedgame
