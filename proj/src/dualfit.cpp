#include "schedgame/dualfit.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "schedgame/errors.hpp"

namespace schedgame {

CriticalJobs critical_jobs(const Instance& instance, const MftTrace& trace) {
  validate_canonical(instance);
  const int n = instance.job_count();
  const int m = instance.machine_count();
  const Schedule& opt = trace.schedule;

  CriticalJobs cr;
  for (int j = 1; j <= n; ++j) {
    const int machine = opt.machine_of(j);
    if (machine != m) cr.per_machine[machine] = j;  // ascending j keeps the max
  }
  const std::vector<int> block = block_star(instance, trace);
  cr.cr_m = block.empty() ? 0 : block.front();
  return cr;
}

SubChains sub_chains(const Instance& instance, const MftTrace& trace, const CriticalJobs& cr) {
  const int n = instance.job_count();
  const int m = instance.machine_count();
  const Schedule& opt = trace.schedule;

  std::map<int, int> machine_of_critical;  // job index -> machine
  for (const auto& [machine, job] : cr.per_machine) {
    machine_of_critical[job] = machine;
  }

  SubChains result;
  std::set<int> covered;
  int previous_anchor_machine = 0;
  for (const auto& [start, anchor] : machine_of_critical) {  // ascending job index
    if (covered.count(start)) continue;
    SubChain chain;
    chain.anchor_machine = anchor;
    int j = start;
    while (j <= n && opt.machine_of(j) != m) {
      chain.members.push_back(j);
      if (machine_of_critical.count(j)) {
        chain.critical_members.push_back(j);
        covered.insert(j);
        if (machine_of_critical[j] < previous_anchor_machine) {
          result.machine_order_anomaly = true;
        }
        previous_anchor_machine = machine_of_critical[j];
      }
      ++j;
    }
    result.chains.push_back(std::move(chain));
  }
  return result;
}

DualFitting make_fitting(const Instance& instance, const MftTrace& trace,
                         FittingVariant variant) {
  validate_canonical(instance);
  const int n = instance.job_count();
  const int m = instance.machine_count();
  const Rational fastest = instance.speed(m);

  DualFitting fitting;
  fitting.provenance = variant;
  fitting.y = 1;
  fitting.z = RationalVector::Zero(std::max(0, n - 1));

  switch (variant) {
    case FittingVariant::TwoMachine: {
      if (m != 2) {
        throw validation_error("two-machine fitting requires exactly 2 machines");
      }
      fitting.beta = Rational(3, 2);
      const Integer floor_s = rational_floor(fastest);
      const int index = (Integer(n) - floor_s).convert_to<int>();  // z index of the critical job
      if (index >= 1) {
        fitting.z(index - 1) =
            (Rational(floor_s) / fastest) * (Rational(floor_s) / (fastest + Rational(floor_s)));
      }
      return fitting;
    }
    case FittingVariant::General:
    case FittingVariant::Divisible: {
      if (variant == FittingVariant::Divisible && !is_divisible_speeds(instance)) {
        throw validation_error("divisible fitting requires divisible speeds");
      }
      const int denominator = variant == FittingVariant::General ? 2 * (2 * m - 1) : 2 * m;
      fitting.beta = 2 - Rational(1, denominator);
      const SubChains chains = sub_chains(instance, trace, critical_jobs(instance, trace));
      for (const SubChain& chain : chains.chains) {
        const Rational unit = Rational(1, denominator) / instance.speed(chain.anchor_machine);
        int level = 0;
        size_t next_critical = 0;
        for (int job : chain.members) {
          if (next_critical < chain.critical_members.size() &&
              chain.critical_members[next_critical] == job) {
            ++level;
            ++next_critical;
          }
          if (job <= n - 1) {
            fitting.z(job - 1) = level * unit;
          }
        }
      }
      return fitting;
    }
  }
  throw internal_error("make_fitting: unreachable");
}

FittingCheck verify_fitting(const Instance& instance, const Schedule& opt, const Schedule& ne,
                            const DualFitting& fitting) {
  validate(instance, opt);
  validate(instance, ne);
  const int n = instance.job_count();
  const int m = instance.machine_count();
  if (fitting.z.size() != std::max(0, n - 1)) {
    throw validation_error("verify_fitting: z has " + std::to_string(fitting.z.size()) +
                           " entries, expected " + std::to_string(n - 1));
  }

  const Eigen::MatrixXi psi_opt = psi_table(opt, m);
  const Eigen::MatrixXi psi_ne = psi_table(ne, m);

  auto z_at = [&](int k) -> Rational {  // z_0 = z_n = 0
    if (k < 1 || k > n - 1) return Rational(0);
    return fitting.z(k - 1);
  };

  FittingCheck check;
  check.job_slacks.resize(n);
  check.feasible = fitting.y >= 0;
  for (int k = 1; k <= n - 1; ++k) {
    if (fitting.z(k - 1) < 0) check.feasible = false;
  }

  for (int k = 1; k <= n; ++k) {
    const int opt_machine = opt.machine_of(k);
    const int ne_machine = ne.machine_of(k);
    const Rational opt_speed = instance.speed(opt_machine);
    const Rational ne_speed = instance.speed(ne_machine);
    const Rational ne_position = Rational(psi_ne(k, ne_machine - 1) + 1) / ne_speed;

    Rational slack = fitting.beta * Rational(psi_opt(k, opt_machine - 1) + 1) / opt_speed;
    slack += fitting.y * ne_position;
    slack -= fitting.y / opt_speed;
    slack -= fitting.y * Rational(psi_opt(k, ne_machine - 1)) / ne_speed;
    slack += z_at(k) - z_at(k - 1);
    slack -= ne_position;

    if (slack < 0) check.feasible = false;
    if (slack == 0) check.tight_jobs.push_back(k);
    check.job_slacks(k - 1) = std::move(slack);
  }
  return check;
}

bool is_divisible_speeds(const Instance& instance) {
  validate(instance);
  const int m = instance.machine_count();
  for (int i = 1; i <= m; ++i) {
    for (int l = i + 1; l <= m; ++l) {
      const Rational ratio = instance.speed(l) / instance.speed(i);  // s_l >= s_i
      if (denominator(ratio) != 1) return false;
    }
  }
  return true;
}

bool check_floor_lemma(const Rational& a, const Rational& b) {
  if (!(a >= b && b >= 1)) {
    throw validation_error("check_floor_lemma requires a >= b >= 1");
  }
  return a / (2 * b) <= Rational(rational_floor(a / b));
}

EndpointCheck check_subchain_endpoint(const Instance& instance, const MftTrace& trace,
                                      const SubChains& chains) {
  const int n = instance.job_count();
  const int m = instance.machine_count();
  const Eigen::MatrixXi psi_opt = psi_table(trace.schedule, m);

  EndpointCheck check;
  check.holds = true;
  for (const SubChain& chain : chains.chains) {
    if (chain.members.empty()) continue;
    EndpointWitness witness;
    witness.anchor_machine = chain.anchor_machine;
    witness.next_fast_job = chain.members.back() + 1;
    if (witness.next_fast_job > n ||
        trace.schedule.machine_of(witness.next_fast_job) != m) {
      throw internal_error("sub-chain does not end before a fastest-machine job");
    }
    witness.observed = psi_opt(witness.next_fast_job, m - 1) + 1;
    witness.expected = rational_floor(instance.speed(m) / instance.speed(chain.anchor_machine));
    witness.holds = Integer(witness.observed) == witness.expected;
    if (!witness.holds) check.holds = false;
    check.witnesses.push_back(std::move(witness));
  }
  return check;
}

}  // namespace schedgame
