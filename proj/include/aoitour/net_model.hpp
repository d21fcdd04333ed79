#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <vector>

namespace aoitour {

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

inline double distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

// Radio link and flight parameters. All values are linear SI units; dB/dBm
// conversion happens at the file/CLI boundary only.
struct RadioParams {
  double bandwidth_hz = 5e6;     // B
  double ref_gain = 1e-6;        // beta: linear channel power gain at 1 m
  double altitude_m = 50.0;      // h
  double noise_power_w = 1e-14;  // sigma^2 at the receiver
  double speed_mps = 20.0;       // V, constant flight speed
  friend bool operator==(const RadioParams&, const RadioParams&) = default;
};

struct SensorNode {
  int id = 0;  // 1..M, contiguous; nodes[k].id == k + 1
  Point position;
  double tx_power_w = 0.1;    // P_i
  double packet_bits = 1e6;   // L_i
  friend bool operator==(const SensorNode&, const SensorNode&) = default;
};

// A problem instance: the data center, the sensor field and the radio.
struct Scenario {
  Point data_center;
  std::vector<SensorNode> nodes;
  RadioParams radio;

  int sensor_count() const { return static_cast<int>(nodes.size()); }
  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// Both throw std::invalid_argument naming the offending field.
void validate(const RadioParams& radio);
void validate(const Scenario& scenario);

// Inter-visit costs in seconds over nodes 0..M, node 0 being the data
// center. Row i >= 1 carries node i's upload time plus the flight time of
// the leg; row 0 is pure flight time (the data center uploads nothing).
// The matrix is generally asymmetric. The diagonal is meaningless and never
// set; reading it trips an assert in debug builds.
class TransitCostMatrix {
 public:
  explicit TransitCostMatrix(int sensor_count);

  // Builds from (M+1)x(M+1) row-major values; diagonal entries are ignored.
  static TransitCostMatrix from_rows(const std::vector<std::vector<double>>& rows);

  int sensor_count() const { return m_; }
  int dim() const { return m_ + 1; }

  double operator()(int i, int j) const {
    assert(i >= 0 && i <= m_ && j >= 0 && j <= m_);
    assert(i != j && "diagonal transit cost is undefined");
    return entries_[static_cast<std::size_t>(i) * (m_ + 1) + j];
  }

  // value must be strictly positive and finite; i != j.
  void set(int i, int j, double value);

  bool complete() const;  // every off-diagonal entry has been set

  TransitCostMatrix scaled(double factor) const;

 private:
  int m_;
  std::vector<double> entries_;
};

// Linear receive SNR beta / (h^2 sigma^2) * P. Kept as a separate step so
// the canonical parameter set evaluates without rounding drift.
double snr_linear(const RadioParams& radio, double tx_power_w);

// Uplink rate B log2(1 + SNR) in bit/s.
double uplink_rate(const RadioParams& radio, double tx_power_w);

// packet_bits / rate_bps; both must be strictly positive.
double upload_time(double packet_bits, double rate_bps);

TransitCostMatrix transit_matrix(const Scenario& scenario);

// Data center and m nodes drawn uniformly (by area) over the disk of the
// given radius. Deterministic for a fixed seed; coincident draws are
// rejected and redrawn.
Scenario random_scenario(int m, double radius_m, const RadioParams& radio,
                         double tx_power_w, double packet_bits,
                         std::uint64_t seed);

}  // namespace aoitour
