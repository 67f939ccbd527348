#include "schedgame/model.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "schedgame/errors.hpp"

namespace schedgame {

bool operator==(const Schedule& a, const Schedule& b) { return a.assignment == b.assignment; }

bool operator<(const Schedule& a, const Schedule& b) { return a.assignment < b.assignment; }

void validate(const Instance& instance) {
  const int n = instance.job_count();
  const int m = instance.machine_count();
  if (n < 1) throw validation_error("instance has no jobs");
  if (m < 1) throw validation_error("instance has no machines");
  for (int j = 1; j <= n; ++j) {
    if (instance.ptime(j) < 0) {
      throw validation_error("processing time of job " + std::to_string(j) + " is negative");
    }
    if (j > 1 && instance.ptime(j - 1) > instance.ptime(j)) {
      throw validation_error("processing times not sorted at job " + std::to_string(j));
    }
  }
  for (int i = 1; i <= m; ++i) {
    if (instance.speed(i) <= 0) {
      throw validation_error("speed of machine " + std::to_string(i) + " is not positive");
    }
    if (i > 1 && instance.speed(i - 1) > instance.speed(i)) {
      throw validation_error("speeds not sorted at machine " + std::to_string(i));
    }
  }
}

void validate_canonical(const Instance& instance) {
  validate(instance);
  if (instance.speed(1) != 1) {
    throw validation_error("instance not normalized: slowest speed is " +
                           format_rational(instance.speed(1)) + ", expected 1");
  }
}

void validate(const Instance& instance, const Schedule& schedule) {
  validate(instance);
  if (schedule.job_count() != instance.job_count()) {
    throw validation_error("schedule has " + std::to_string(schedule.job_count()) +
                           " entries, instance has " + std::to_string(instance.job_count()) +
                           " jobs");
  }
  for (int j = 1; j <= schedule.job_count(); ++j) {
    const int machine = schedule.machine_of(j);
    if (machine < 1 || machine > instance.machine_count()) {
      throw validation_error("job " + std::to_string(j) + " assigned to machine " +
                             std::to_string(machine) + ", valid range is 1.." +
                             std::to_string(instance.machine_count()));
    }
  }
}

Instance normalize(const Instance& raw) {
  const int n = static_cast<int>(raw.processing.size());
  const int m = static_cast<int>(raw.speeds.size());
  if (n < 1) throw validation_error("instance has no jobs");
  if (m < 1) throw validation_error("instance has no machines");
  for (int j = 0; j < n; ++j) {
    if (raw.processing(j) < 0) {
      throw validation_error("processing time of job " + std::to_string(j + 1) + " is negative");
    }
  }
  Rational min_speed = raw.speeds(0);
  for (int i = 0; i < m; ++i) {
    if (raw.speeds(i) <= 0) {
      throw validation_error("speed of machine " + std::to_string(i + 1) + " is not positive");
    }
    min_speed = std::min(min_speed, raw.speeds(i));
  }

  Instance out;
  out.processing = raw.processing;
  std::stable_sort(out.processing.begin(), out.processing.end());
  out.speeds = raw.speeds / min_speed;
  std::stable_sort(out.speeds.begin(), out.speeds.end());
  validate_canonical(out);
  return out;
}

int psi(const Schedule& schedule, int machine, int job) {
  const int n = schedule.job_count();
  if (job < 1 || job > n) {
    throw validation_error("psi: job index " + std::to_string(job) + " out of range 1.." +
                           std::to_string(n));
  }
  int count = 0;
  for (int k = job + 1; k <= n; ++k) {
    if (schedule.machine_of(k) == machine) ++count;
  }
  return count;
}

Eigen::MatrixXi psi_table(const Schedule& schedule, int machines) {
  const int n = schedule.job_count();
  Eigen::MatrixXi table = Eigen::MatrixXi::Zero(n + 1, machines);
  for (int j = n - 1; j >= 0; --j) {
    table.row(j) = table.row(j + 1);
    table(j, schedule.assignment[j] - 1) += 1;
  }
  return table;
}

Rational completion_time(const Instance& instance, const Schedule& schedule, int job) {
  validate(instance, schedule);
  if (job < 1 || job > instance.job_count()) {
    throw validation_error("completion_time: job index out of range");
  }
  const int machine = schedule.machine_of(job);
  Rational load = 0;
  for (int k = 1; k <= job; ++k) {
    if (schedule.machine_of(k) == machine) load += instance.ptime(k);
  }
  return load / instance.speed(machine);
}

Rational social_cost(const Instance& instance, const Schedule& schedule) {
  validate(instance, schedule);
  const int n = instance.job_count();
  const int m = instance.machine_count();

  // Direct sum of completion times, one prefix-load accumulator per machine.
  RationalVector load = RationalVector::Zero(m);
  Rational by_completion = 0;
  for (int j = 1; j <= n; ++j) {
    const int i = schedule.machine_of(j);
    load(i - 1) += instance.ptime(j);
    by_completion += load(i - 1) / instance.speed(i);
  }

  // Positional form: each job contributes p_j once per weakly lower-priority
  // job sharing its machine.
  const Eigen::MatrixXi table = psi_table(schedule, m);
  Rational by_position = 0;
  for (int j = 1; j <= n; ++j) {
    const int i = schedule.machine_of(j);
    by_position += instance.ptime(j) * Rational(table(j, i - 1) + 1) / instance.speed(i);
  }

  if (by_completion != by_position) {
    throw internal_error("social cost mismatch: completion-time sum " +
                         format_rational(by_completion) + " != positional sum " +
                         format_rational(by_position));
  }
  return by_completion;
}

}  // namespace schedgame
