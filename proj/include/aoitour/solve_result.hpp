#pragma once

#include <string>

#include "aoitour/aoi_metrics.hpp"

namespace aoitour {

enum class Objective { max_aoi, ave_aoi };
enum class Algorithm { dp, ga, greedy, brute };

std::string to_string(Objective objective);
std::string to_string(Algorithm algorithm);
Objective objective_from_string(const std::string& name);   // "max-aoi" | "ave-aoi"
Algorithm algorithm_from_string(const std::string& name);   // "dp" | "ga" | "greedy" | "brute"

struct SolveResult {
  Trajectory trajectory;
  double objective_value = 0.0;  // seconds
  Objective objective_kind = Objective::max_aoi;
  Algorithm algorithm = Algorithm::dp;
  double wall_time_s = 0.0;  // informational only; never written to result files
};

// Objective value of a path: the position-1 age for max-aoi, the
// stage-weighted position-1 suffix age for ave-aoi.
inline double path_objective(const TransitCostMatrix& eta, std::span<const int> order,
                             Objective objective) {
  return objective == Objective::max_aoi ? path_age(eta, order, 1)
                                         : path_weighted_partial(eta, order, 1);
}

}  // namespace aoitour
