#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "aoitour/errors.hpp"
#include "aoitour/solve_result.hpp"

namespace aoitour {

inline constexpr int kMaxDpSensorCount = 24;
inline constexpr int kMaxBruteSensorCount = 10;

// Value and backtrace tables of the subset DP. State (node, remaining) is
// the minimum (stage-weighted, for ave-aoi) cost of leaving `node`, visiting
// every node of `remaining` exactly once and ending at the data center.
// Masks use bit b for node b + 1; `node` itself is never in `remaining`.
class DpTable {
 public:
  DpTable(int sensor_count, Objective kind);

  int sensor_count() const { return m_; }
  Objective kind() const { return kind_; }

  double cost(int node, std::uint32_t remaining) const;
  int successor(int node, std::uint32_t remaining) const;  // 0 = data center

  void set_state(int node, std::uint32_t remaining, double cost, int successor);

  // Reachable states: m * 2^(m-1), the empty set included.
  std::size_t state_count() const;
  std::size_t computed_states() const { return computed_; }

 private:
  std::size_t index(int node, std::uint32_t remaining) const;

  int m_;
  Objective kind_;
  std::vector<double> cost_;
  std::vector<std::uint8_t> next_;
  std::size_t computed_ = 0;
};

// Exact minimum of the position-1 age over all trajectories.
SolveResult dp_max_aoi(const TransitCostMatrix& eta);

// Exact minimum of the average age over all trajectories, via the
// stage-weighted recursion. m must equal eta.sensor_count().
SolveResult dp_ave_aoi(const TransitCostMatrix& eta, int m);
SolveResult dp_ave_aoi(const TransitCostMatrix& eta);

// Same solve, returning the filled table for inspection.
std::pair<SolveResult, DpTable> dp_solve_with_table(const TransitCostMatrix& eta,
                                                    Objective objective);

// Exhaustive enumeration of all M! trajectories, evaluated through the age
// metrics (the mean-of-suffix-sums route for ave-aoi). Ties break to the
// lexicographically smallest trajectory. Enforces M <= 10.
SolveResult brute_force(const TransitCostMatrix& eta, Objective objective);

}  // namespace aoitour
