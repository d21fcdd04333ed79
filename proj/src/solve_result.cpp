#include "aoitour/solve_result.hpp"

#include <stdexcept>

namespace aoitour {

std::string to_string(Objective objective) {
  return objective == Objective::max_aoi ? "max-aoi" : "ave-aoi";
}

std::string to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::dp: return "dp";
    case Algorithm::ga: return "ga";
    case Algorithm::greedy: return "greedy";
    case Algorithm::brute: return "brute";
  }
  throw std::logic_error("unknown algorithm");
}

Objective objective_from_string(const std::string& name) {
  if (name == "max-aoi") return Objective::max_aoi;
  if (name == "ave-aoi") return Objective::ave_aoi;
  throw std::invalid_argument("unknown objective '" + name + "' (max-aoi | ave-aoi)");
}

Algorithm algorithm_from_string(const std::string& name) {
  if (name == "dp") return Algorithm::dp;
  if (name == "ga") return Algorithm::ga;
  if (name == "greedy") return Algorithm::greedy;
  if (name == "brute") return Algorithm::brute;
  throw std::invalid_argument("unknown algorithm '" + name +
                              "' (dp | ga | greedy | brute)");
}

}  // namespace aoitour
