#pragma once

#include <span>
#include <vector>

#include "aoitour/net_model.hpp"

namespace aoitour {

// Visit order of the sensor nodes: order[k] is the id of the (k+1)-th node
// visited. Every trajectory implicitly starts and ends at the data center
// (node 0), which never appears in the sequence.
struct Trajectory {
  std::vector<int> order;
  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

// Throws std::invalid_argument unless order is an exact permutation of
// 1..sensor_count.
void validate_trajectory(const Trajectory& traj, int sensor_count);

// Full evaluation of one trajectory. Vectors are indexed by visit position
// (index 0 = first visited node); timestamps[i] is the sampling instant of
// the i-th visited node, with timestamps[0] = 0 (takeoff).
struct AoiReport {
  std::vector<double> ages;               // final age per position, seconds
  std::vector<double> weighted_partials;  // stage-weighted suffix ages
  double max_age = 0.0;                   // == ages of position 1
  double avg_age = 0.0;                   // mean of ages
  std::vector<double> timestamps;         // size M + 1, timestamps[0] = 0
  double mission_end = 0.0;               // return instant T_{M+1}

  double age(int position) const { return ages.at(position - 1); }
  double weighted_partial(int position) const {
    return weighted_partials.at(position - 1);
  }
};

// Final age of the node at the given position (1-based): the sum of the
// inter-visit costs from that position through the closing leg to node 0.
double node_age(const Trajectory& traj, const TransitCostMatrix& eta, int position);

// Age of the position-th sample at mission time t: max(0, t - T_position).
double age_at_time(const Trajectory& traj, const TransitCostMatrix& eta,
                   double takeoff_leg_s, int position, double t);

// Mean of the per-position final ages.
double average_age(const Trajectory& traj, const TransitCostMatrix& eta);

// Stage-weighted suffix age: sum over k >= position of (k/M) * cost of leg k.
double weighted_partial_age(const Trajectory& traj, const TransitCostMatrix& eta,
                            int position);

AoiReport evaluate(const Trajectory& traj, const TransitCostMatrix& eta,
                   double takeoff_leg_s);

// Convenience: takeoff leg taken from the matrix (flight from node 0).
AoiReport evaluate(const Trajectory& traj, const TransitCostMatrix& eta);

// Allocation-free forms used by the solvers. order must already be a valid
// permutation of 1..M; position is 1-based.
double path_age(const TransitCostMatrix& eta, std::span<const int> order, int position);
double path_weighted_partial(const TransitCostMatrix& eta, std::span<const int> order,
                             int position);
double path_average_age(const TransitCostMatrix& eta, std::span<const int> order);

}  // namespace aoitour
