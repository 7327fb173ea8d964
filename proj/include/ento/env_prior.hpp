// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "ento/error.hpp"

namespace ento {

// One reading of the environmental sensor stack. Spectral channels follow the
// 10-channel light sensor layout: 415, 445, 480, 515, 550, 590, 660, 690 nm
// (+-10 nm), near-IR (850-1050 nm), clear.
struct EnvSnapshot {
  double timestamp = 0.0;  // seconds since epoch
  double temperature_c = 20.0;
  double humidity_pct = 50.0;
  double pressure_hpa = 1013.25;
  double lux = 0.0;
  std::array<double, 10> spectral_channels{};
};

struct SpeciesPriorRow {
  std::string species_id;
  double temp_min_c = 0.0;
  double temp_max_c = 40.0;
  double hour_start = 0.0;  // local hour, [0, 24)
  double hour_end = 24.0;   // window may wrap past midnight
  double base_rate = 1.0;   // relative abundance, >= 0
};

// Per-species activity envelope used as a Bayes prior over species.
// CSV columns: species_id,temp_min_c,temp_max_c,hour_start,hour_end,base_rate.
struct SpeciesPriorTable {
  std::vector<SpeciesPriorRow> rows;

  static SpeciesPriorTable load_csv(const std::filesystem::path& path);
  void save_csv(const std::filesystem::path& path) const;
};

// Blue/red band ratio proxy: 0 for a blue-dominated clear sky, 1 when
// scattering has flattened or reddened the spectrum.
double cloudage_index(const std::array<double, 10>& spectral_channels);

// Fractional local hour of day derived from the snapshot timestamp.
double local_hour(double timestamp, double utc_offset_hours);

// prior(s) proportional to base_rate * [temperature in range] * [hour in
// activity window]; falls back to the base-rate distribution when every
// indicator is zero. Rows keep their table order.
std::vector<double> species_prior(const EnvSnapshot& env, const SpeciesPriorTable& table,
                                  double utc_offset_hours = 0.0);

// Elementwise Bayes update: output proportional to posterior * prior. Returns
// the posterior unchanged when the product vanishes everywhere.
std::vector<double> apply_prior(const std::vector<double>& classifier_posterior,
                                const std::vector<double>& prior);

}  // namespace ento
