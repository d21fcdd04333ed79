#include "aoitour/net_model.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "aoitour/rng.hpp"

namespace aoitour {

namespace {

void require_positive(double value, const char* field) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    std::ostringstream msg;
    msg << field << " must be strictly positive, got " << value;
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

void validate(const RadioParams& radio) {
  require_positive(radio.bandwidth_hz, "bandwidth_hz");
  require_positive(radio.ref_gain, "ref_gain");
  require_positive(radio.altitude_m, "altitude_m");
  require_positive(radio.noise_power_w, "noise_power_w");
  require_positive(radio.speed_mps, "speed_mps");
}

void validate(const Scenario& scenario) {
  validate(scenario.radio);
  const int m = scenario.sensor_count();
  if (m < 1) throw std::invalid_argument("scenario must contain at least one sensor node");
  for (int k = 0; k < m; ++k) {
    const SensorNode& node = scenario.nodes[k];
    if (node.id != k + 1) {
      std::ostringstream msg;
      msg << "node ids must be contiguous from 1 in listing order: entry " << k
          << " has id " << node.id;
      throw std::invalid_argument(msg.str());
    }
    require_positive(node.tx_power_w, "tx_power_w");
    require_positive(node.packet_bits, "packet_bits");
  }
  for (int i = 0; i < m; ++i) {
    if (scenario.nodes[i].position == scenario.data_center) {
      std::ostringstream msg;
      msg << "node " << scenario.nodes[i].id << " coincides with the data center";
      throw std::invalid_argument(msg.str());
    }
    for (int j = i + 1; j < m; ++j) {
      if (scenario.nodes[i].position == scenario.nodes[j].position) {
        std::ostringstream msg;
        msg << "nodes " << scenario.nodes[i].id << " and " << scenario.nodes[j].id
            << " share the same position";
        throw std::invalid_argument(msg.str());
      }
    }
  }
}

TransitCostMatrix::TransitCostMatrix(int sensor_count) : m_(sensor_count) {
  if (sensor_count < 1) {
    throw std::invalid_argument("transit matrix needs at least one sensor node");
  }
  const std::size_t dim = static_cast<std::size_t>(m_) + 1;
  entries_.assign(dim * dim, std::numeric_limits<double>::quiet_NaN());
}

TransitCostMatrix TransitCostMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const int dim = static_cast<int>(rows.size());
  if (dim < 2) throw std::invalid_argument("transit matrix needs at least 2 rows");
  TransitCostMatrix matrix(dim - 1);
  for (int i = 0; i < dim; ++i) {
    if (static_cast<int>(rows[i].size()) != dim) {
      throw std::invalid_argument("transit matrix rows must be square");
    }
    for (int j = 0; j < dim; ++j) {
      if (i != j) matrix.set(i, j, rows[i][j]);
    }
  }
  return matrix;
}

void TransitCostMatrix::set(int i, int j, double value) {
  if (i < 0 || i > m_ || j < 0 || j > m_) {
    throw std::invalid_argument("transit matrix index out of range");
  }
  if (i == j) throw std::invalid_argument("diagonal transit cost is undefined");
  if (!(value > 0.0) || !std::isfinite(value)) {
    std::ostringstream msg;
    msg << "transit cost [" << i << "][" << j << "] must be strictly positive, got "
        << value;
    throw std::invalid_argument(msg.str());
  }
  entries_[static_cast<std::size_t>(i) * (m_ + 1) + j] = value;
}

bool TransitCostMatrix::complete() const {
  for (int i = 0; i <= m_; ++i) {
    for (int j = 0; j <= m_; ++j) {
      if (i != j && std::isnan((*this)(i, j))) return false;
    }
  }
  return true;
}

TransitCostMatrix TransitCostMatrix::scaled(double factor) const {
  require_positive(factor, "scale factor");
  TransitCostMatrix out(m_);
  for (int i = 0; i <= m_; ++i) {
    for (int j = 0; j <= m_; ++j) {
      if (i != j) out.set(i, j, (*this)(i, j) * factor);
    }
  }
  return out;
}

double snr_linear(const RadioParams& radio, double tx_power_w) {
  validate(radio);
  require_positive(tx_power_w, "tx_power_w");
  // Grouped as beta / (h^2 sigma^2) * P: with the canonical parameter set
  // (5 MHz, -60 dB, 50 m, -110 dBm, 0.1 W) this evaluates to exactly 4000.
  return radio.ref_gain / (radio.altitude_m * radio.altitude_m * radio.noise_power_w) *
         tx_power_w;
}

double uplink_rate(const RadioParams& radio, double tx_power_w) {
  return radio.bandwidth_hz * std::log2(1.0 + snr_linear(radio, tx_power_w));
}

double upload_time(double packet_bits, double rate_bps) {
  require_positive(packet_bits, "packet_bits");
  require_positive(rate_bps, "rate_bps");
  return packet_bits / rate_bps;
}

TransitCostMatrix transit_matrix(const Scenario& scenario) {
  validate(scenario);
  const int m = scenario.sensor_count();
  const double speed = scenario.radio.speed_mps;
  TransitCostMatrix eta(m);

  auto position = [&](int k) -> const Point& {
    return k == 0 ? scenario.data_center : scenario.nodes[k - 1].position;
  };

  std::vector<double> upload(m + 1, 0.0);
  for (int i = 1; i <= m; ++i) {
    const SensorNode& node = scenario.nodes[i - 1];
    upload[i] = upload_time(node.packet_bits, uplink_rate(scenario.radio, node.tx_power_w));
  }

  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= m; ++j) {
      if (i == j) continue;
      const double d = distance(position(i), position(j));
      if (!(d > 0.0)) {
        std::ostringstream msg;
        msg << "nodes " << i << " and " << j << " are coincident";
        throw std::invalid_argument(msg.str());
      }
      eta.set(i, j, upload[i] + d / speed);
    }
  }
  return eta;
}

namespace {

Point sample_disk(Rng& rng, double radius) {
  const double r = radius * std::sqrt(rng.unit());
  const double theta = 2.0 * std::numbers::pi * rng.unit();
  return {r * std::cos(theta), r * std::sin(theta)};
}

}  // namespace

Scenario random_scenario(int m, double radius_m, const RadioParams& radio,
                         double tx_power_w, double packet_bits, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  require_positive(radius_m, "radius_m");
  validate(radio);
  require_positive(tx_power_w, "tx_power_w");
  require_positive(packet_bits, "packet_bits");

  Rng rng(seed);
  Scenario scenario;
  scenario.radio = radio;
  scenario.data_center = sample_disk(rng, radius_m);
  scenario.nodes.reserve(m);
  while (scenario.sensor_count() < m) {
    const Point p = sample_disk(rng, radius_m);
    bool fresh = !(p == scenario.data_center);
    for (const SensorNode& node : scenario.nodes) {
      if (p == node.position) {
        fresh = false;
        break;
      }
    }
    if (!fresh) continue;  // measure-zero event: redraw
    scenario.nodes.push_back(
        {scenario.sensor_count() + 1, p, tx_power_w, packet_bits});
  }
  return scenario;
}

}  // namespace aoitour
