#pragma once

#include <filesystem>
#include <string>

#include "aoitour/net_model.hpp"

namespace aoitour {

double db_to_linear(double db);
double dbm_to_watts(double dbm);

// Inverses of the above. The result is nudged by up to a few ulps so that
// converting it back reproduces the input value bit-exactly whenever a
// bit-exact preimage exists (it always does for values produced by
// db_to_linear / dbm_to_watts).
double linear_to_db(double linear);
double watts_to_dbm(double watts);

// Scenario document schema (JSON):
//   {
//     "data_center": {"x": ..., "y": ...},
//     "radio": {"bandwidth_hz": ..., "ref_gain_db": ..., "altitude_m": ...,
//               "noise_power_dbm": ..., "speed_mps": ...},
//     "nodes": [{"id": 1, "x": ..., "y": ..., "tx_power_w": ...,
//                "packet_bits": ...}, ...]
//   }
// dB/dBm fields are converted to linear SI units on load. Loading validates
// every Scenario invariant and throws std::invalid_argument with the field
// name on violations. load(save(s)) == s holds exactly.
std::string scenario_to_json(const Scenario& scenario);
Scenario scenario_from_json(const std::string& text);

Scenario load_scenario(const std::filesystem::path& path);
void save_scenario(const Scenario& scenario, const std::filesystem::path& path);

}  // namespace aoitour
