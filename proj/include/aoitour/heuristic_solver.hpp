#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "aoitour/rng.hpp"
#include "aoitour/solve_result.hpp"

namespace aoitour {

struct GaParams {
  int population_size = 1000;        // N_c
  int generations = 10000;           // N_g
  double acceleration = 2.0;         // alpha, must be > 1
  double selection_threshold = 0.8;  // gamma_c, in [0, 1]
  double mutation_prob = 0.01;       // gamma_m, in [0, 1]
  double epsilon = 1e-9;             // fitness denominator guard, seconds
  int mutation_swaps = 3;            // transpositions per mutation
  int elitism = 1;                   // chromosomes copied unchanged
  std::uint64_t seed = 1;
};

// Throws std::invalid_argument naming the offending field.
void validate(const GaParams& params);

// A generation of chromosomes, stored row-major (size() x m).
struct Population {
  int m = 0;
  std::vector<int> genes;
  std::vector<double> lengths;  // objective value per chromosome
  std::vector<double> fitness;  // normalized, in [0, 1]

  int size() const { return static_cast<int>(lengths.size()); }
  std::span<const int> chromosome(int k) const {
    return {genes.data() + static_cast<std::size_t>(k) * m, static_cast<std::size_t>(m)};
  }
  std::span<int> chromosome(int k) {
    return {genes.data() + static_cast<std::size_t>(k) * m, static_cast<std::size_t>(m)};
  }
};

// Normalized fitness (1 - (l - l_min)/(l_max - l_min + eps))^alpha per
// chromosome; the shortest path scores 1.
std::vector<double> fitness(std::span<const double> lengths, double alpha, double eps);

// Partially mapped crossover with 1-based inclusive cut positions,
// 1 <= cut1 < cut2 <= M. The first offspring carries parent_b's segment
// (the second parent_a's); genes outside the segment come from the other
// parent, with duplicates chased through the segment mapping
// donor[p] -> receiver[p] until they leave the segment.
std::pair<Trajectory, Trajectory> pmx_crossover(const Trajectory& parent_a,
                                                const Trajectory& parent_b,
                                                int cut1, int cut2);

// Exchanges `swaps` random pairs of distinct positions. A single-node
// trajectory is returned unchanged.
Trajectory mutate(const Trajectory& traj, int swaps, Rng& rng);

struct GaDebugInfo {
  std::vector<double> best_per_generation;
  Population final_population;
};

// Genetic search over trajectories. Deterministic for a fixed params.seed.
SolveResult ga_solve(const TransitCostMatrix& eta, Objective objective,
                     const GaParams& params, GaDebugInfo* debug = nullptr);

// Backward nearest-neighbor: the node with the cheapest closing leg is
// visited last, then each predecessor is the unmarked node with the
// cheapest leg into the current one. Ties break to the smaller id.
// The construction never looks at the objective.
Trajectory greedy_trajectory(const TransitCostMatrix& eta);

SolveResult greedy_solve(const TransitCostMatrix& eta, Objective objective);

}  // namespace aoitour
