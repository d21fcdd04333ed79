#include "aoitour/exact_solver.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace aoitour {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void require_dp_capacity(int m) {
  if (m > kMaxDpSensorCount) {
    std::ostringstream msg;
    msg << "exact DP supports at most " << kMaxDpSensorCount
        << " sensor nodes, got " << m
        << "; use the genetic algorithm (ga) for larger instances";
    throw CapacityError(msg.str());
  }
}

}  // namespace

DpTable::DpTable(int sensor_count, Objective kind) : m_(sensor_count), kind_(kind) {
  if (m_ < 1) throw std::invalid_argument("DP table needs at least one node");
  require_dp_capacity(m_);
  const std::size_t slots = static_cast<std::size_t>(m_) << m_;
  cost_.assign(slots, std::numeric_limits<double>::quiet_NaN());
  next_.assign(slots, 0);
}

std::size_t DpTable::index(int node, std::uint32_t remaining) const {
  assert(node >= 1 && node <= m_);
  assert((remaining >> m_) == 0);
  assert((remaining & (1u << (node - 1))) == 0 && "node cannot be in its own remaining set");
  return (static_cast<std::size_t>(node - 1) << m_) | remaining;
}

double DpTable::cost(int node, std::uint32_t remaining) const {
  return cost_[index(node, remaining)];
}

int DpTable::successor(int node, std::uint32_t remaining) const {
  return next_[index(node, remaining)];
}

void DpTable::set_state(int node, std::uint32_t remaining, double cost, int successor) {
  const std::size_t i = index(node, remaining);
  assert(std::isnan(cost_[i]) && "state already computed");
  cost_[i] = cost;
  next_[i] = static_cast<std::uint8_t>(successor);
  ++computed_;
}

std::size_t DpTable::state_count() const {
  return static_cast<std::size_t>(m_) << (m_ - 1);
}

std::pair<SolveResult, DpTable> dp_solve_with_table(const TransitCostMatrix& eta,
                                                    Objective objective) {
  const int m = eta.sensor_count();
  require_dp_capacity(m);
  const auto start = Clock::now();
  assert(eta.complete());

  DpTable table(m, objective);
  const std::uint32_t full = (1u << m) - 1;

  // Base: leave node i and fly straight back to the data center.
  for (int i = 1; i <= m; ++i) table.set_state(i, 0, eta(i, 0), 0);

  // Remaining sets grouped by cardinality, so every lookup below is final
  // and the stage weight is one division per level. The full set is never a
  // remaining set (the current node is always outside it).
  std::vector<std::vector<std::uint32_t>> by_card(m);
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    by_card[std::popcount(mask)].push_back(mask);
  }

  for (int card = 1; card <= m - 1; ++card) {
    const double weight = objective == Objective::max_aoi
                              ? 1.0
                              : static_cast<double>(m - card) / static_cast<double>(m);
    for (const std::uint32_t remaining : by_card[card]) {
      std::uint32_t outside = full & ~remaining;
      while (outside != 0) {
        const int i = std::countr_zero(outside) + 1;
        outside &= outside - 1;

        double best = std::numeric_limits<double>::infinity();
        int best_next = 0;
        std::uint32_t candidates = remaining;
        while (candidates != 0) {
          const int k = std::countr_zero(candidates) + 1;
          candidates &= candidates - 1;
          const double value =
              weight * eta(i, k) + table.cost(k, remaining & ~(1u << (k - 1)));
          if (value < best) {  // ascending k: ties keep the smaller id
            best = value;
            best_next = k;
          }
        }
        table.set_state(i, remaining, best, best_next);
      }
    }
  }

  // Best first visit.
  double best_value = std::numeric_limits<double>::infinity();
  int first = 0;
  for (int i = 1; i <= m; ++i) {
    const double value = table.cost(i, full & ~(1u << (i - 1)));
    if (value < best_value) {
      best_value = value;
      first = i;
    }
  }

  SolveResult result;
  result.trajectory.order.reserve(m);
  result.trajectory.order.push_back(first);
  std::uint32_t remaining = full & ~(1u << (first - 1));
  int current = first;
  while (remaining != 0) {
    const int next = table.successor(current, remaining);
    result.trajectory.order.push_back(next);
    remaining &= ~(1u << (next - 1));
    current = next;
  }
  result.objective_value = best_value;
  result.objective_kind = objective;
  result.algorithm = Algorithm::dp;
  result.wall_time_s = seconds_since(start);
  return {std::move(result), std::move(table)};
}

SolveResult dp_max_aoi(const TransitCostMatrix& eta) {
  return dp_solve_with_table(eta, Objective::max_aoi).first;
}

SolveResult dp_ave_aoi(const TransitCostMatrix& eta) {
  return dp_solve_with_table(eta, Objective::ave_aoi).first;
}

SolveResult dp_ave_aoi(const TransitCostMatrix& eta, int m) {
  if (m != eta.sensor_count()) {
    std::ostringstream msg;
    msg << "m (" << m << ") does not match the matrix node count ("
        << eta.sensor_count() << ")";
    throw std::invalid_argument(msg.str());
  }
  return dp_ave_aoi(eta);
}

SolveResult brute_force(const TransitCostMatrix& eta, Objective objective) {
  const int m = eta.sensor_count();
  if (m > kMaxBruteSensorCount) {
    std::ostringstream msg;
    msg << "brute force supports at most " << kMaxBruteSensorCount
        << " sensor nodes, got " << m;
    throw CapacityError(msg.str());
  }
  const auto start = Clock::now();
  assert(eta.complete());

  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 1);

  SolveResult result;
  result.objective_value = std::numeric_limits<double>::infinity();
  do {
    const double value = objective == Objective::max_aoi ? path_age(eta, perm, 1)
                                                         : path_average_age(eta, perm);
    // strict <: lexicographic enumeration keeps the first minimizer
    if (value < result.objective_value) {
      result.objective_value = value;
      result.trajectory.order = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  result.objective_kind = objective;
  result.algorithm = Algorithm::brute;
  result.wall_time_s = seconds_since(start);
  return result;
}

}  // namespace aoitour
