#include "aoitour/aoi_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace aoitour {

namespace {

// Neumaier's compensated summation; keeps long suffix sums near working
// precision so the two average-age routes agree to ~1e-15.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

void require_position(int position, int m) {
  if (position < 1 || position > m) {
    std::ostringstream msg;
    msg << "position " << position << " outside 1.." << m;
    throw std::invalid_argument(msg.str());
  }
}

// Cost of the leg leaving the node at 0-based index k (to the next node,
// or to the data center from the last position).
inline double leg_cost(const TransitCostMatrix& eta, std::span<const int> order,
                       std::size_t k) {
  const int to = (k + 1 < order.size()) ? order[k + 1] : 0;
  return eta(order[k], to);
}

}  // namespace

void validate_trajectory(const Trajectory& traj, int sensor_count) {
  if (static_cast<int>(traj.order.size()) != sensor_count) {
    std::ostringstream msg;
    msg << "trajectory has " << traj.order.size() << " entries, expected "
        << sensor_count;
    throw std::invalid_argument(msg.str());
  }
  std::vector<bool> seen(sensor_count + 1, false);
  for (int id : traj.order) {
    if (id < 1 || id > sensor_count) {
      std::ostringstream msg;
      msg << "trajectory contains node id " << id << " outside 1.." << sensor_count;
      throw std::invalid_argument(msg.str());
    }
    if (seen[id]) {
      std::ostringstream msg;
      msg << "trajectory visits node " << id << " twice";
      throw std::invalid_argument(msg.str());
    }
    seen[id] = true;
  }
}

double path_age(const TransitCostMatrix& eta, std::span<const int> order, int position) {
  CompensatedSum age;
  for (std::size_t k = order.size(); k-- > static_cast<std::size_t>(position - 1);) {
    age.add(leg_cost(eta, order, k));
  }
  return age.value();
}

double path_weighted_partial(const TransitCostMatrix& eta, std::span<const int> order,
                             int position) {
  const double m = static_cast<double>(order.size());
  CompensatedSum age;
  for (std::size_t k = order.size(); k-- > static_cast<std::size_t>(position - 1);) {
    age.add(static_cast<double>(k + 1) / m * leg_cost(eta, order, k));
  }
  return age.value();
}

double path_average_age(const TransitCostMatrix& eta, std::span<const int> order) {
  CompensatedSum suffix;
  CompensatedSum total;
  for (std::size_t k = order.size(); k-- > 0;) {
    suffix.add(leg_cost(eta, order, k));
    total.add(suffix.value());
  }
  return total.value() / static_cast<double>(order.size());
}

double node_age(const Trajectory& traj, const TransitCostMatrix& eta, int position) {
  validate_trajectory(traj, eta.sensor_count());
  require_position(position, eta.sensor_count());
  return path_age(eta, traj.order, position);
}

double age_at_time(const Trajectory& traj, const TransitCostMatrix& eta,
                   double takeoff_leg_s, int position, double t) {
  validate_trajectory(traj, eta.sensor_count());
  require_position(position, eta.sensor_count());
  CompensatedSum sample_instant;
  sample_instant.add(takeoff_leg_s);
  for (int k = 0; k < position - 1; ++k) {
    sample_instant.add(leg_cost(eta, traj.order, k));
  }
  return std::max(0.0, t - sample_instant.value());
}

double average_age(const Trajectory& traj, const TransitCostMatrix& eta) {
  validate_trajectory(traj, eta.sensor_count());
  return path_average_age(eta, traj.order);
}

double weighted_partial_age(const Trajectory& traj, const TransitCostMatrix& eta,
                            int position) {
  validate_trajectory(traj, eta.sensor_count());
  require_position(position, eta.sensor_count());
  return path_weighted_partial(eta, traj.order, position);
}

AoiReport evaluate(const Trajectory& traj, const TransitCostMatrix& eta,
                   double takeoff_leg_s) {
  validate_trajectory(traj, eta.sensor_count());
  if (takeoff_leg_s < 0.0 || !std::isfinite(takeoff_leg_s)) {
    throw std::invalid_argument("takeoff_leg_s must be nonnegative");
  }
  const int m = eta.sensor_count();
  const double m_d = static_cast<double>(m);

  AoiReport report;
  report.ages.resize(m);
  report.weighted_partials.resize(m);
  report.timestamps.resize(m + 1, 0.0);

  CompensatedSum suffix;
  CompensatedSum weighted_suffix;
  for (int k = m - 1; k >= 0; --k) {
    const double leg = leg_cost(eta, traj.order, k);
    suffix.add(leg);
    weighted_suffix.add(static_cast<double>(k + 1) / m_d * leg);
    report.ages[k] = suffix.value();
    report.weighted_partials[k] = weighted_suffix.value();
  }

  CompensatedSum mean;
  for (double age : report.ages) mean.add(age);
  report.avg_age = mean.value() / m_d;
  report.max_age = report.ages.front();

  CompensatedSum clock;
  clock.add(takeoff_leg_s);
  report.timestamps[1] = clock.value();
  for (int k = 1; k < m; ++k) {
    clock.add(leg_cost(eta, traj.order, k - 1));
    report.timestamps[k + 1] = clock.value();
  }
  // T_{M+1} = T_1 + X_1: the first sample's age spans the rest of the mission.
  report.mission_end = report.timestamps[1] + report.ages.front();
  return report;
}

AoiReport evaluate(const Trajectory& traj, const TransitCostMatrix& eta) {
  validate_trajectory(traj, eta.sensor_count());
  return evaluate(traj, eta, eta(0, traj.order.front()));
}

}  // namespace aoitour
