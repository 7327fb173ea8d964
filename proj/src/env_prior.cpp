// SPDX-License-Identifier: Apache-2.0

#include "ento/env_prior.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace ento {

namespace {

bool hour_in_window(double hour, double start, double end) {
  if (start <= end) return hour >= start && hour < end;
  return hour >= start || hour < end;  // wraps past midnight
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

}  // namespace

SpeciesPriorTable SpeciesPriorTable::load_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MissingFile, "cannot open '" + path.string() + "'");

  SpeciesPriorTable table;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    if (lineno == 1 && line.rfind("species_id", 0) == 0) continue;  // header
    auto fields = split_csv_line(line);
    if (fields.size() != 6)
      throw Error(ErrorCode::ParseError,
                  path.string() + ":" + std::to_string(lineno) + ": expected 6 columns");
    SpeciesPriorRow row;
    try {
      row.species_id = fields[0];
      row.temp_min_c = std::stod(fields[1]);
      row.temp_max_c = std::stod(fields[2]);
      row.hour_start = std::stod(fields[3]);
      row.hour_end = std::stod(fields[4]);
      row.base_rate = std::stod(fields[5]);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError,
                  path.string() + ":" + std::to_string(lineno) + ": bad numeric field");
    }
    if (!(row.temp_min_c < row.temp_max_c))
      throw Error(ErrorCode::ParseError, path.string() + ":" + std::to_string(lineno) +
                                             ": temp_min must be < temp_max");
    if (row.base_rate < 0.0)
      throw Error(ErrorCode::ParseError,
                  path.string() + ":" + std::to_string(lineno) + ": base_rate must be >= 0");
    table.rows.push_back(std::move(row));
  }
  if (table.rows.empty())
    throw Error(ErrorCode::EmptyTable, "'" + path.string() + "' has no rows");
  return table;
}

void SpeciesPriorTable::save_csv(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path.string() + "'");
  out << "species_id,temp_min_c,temp_max_c,hour_start,hour_end,base_rate\n";
  for (const auto& r : rows) {
    out << r.species_id << ',' << r.temp_min_c << ',' << r.temp_max_c << ',' << r.hour_start
        << ',' << r.hour_end << ',' << r.base_rate << '\n';
  }
}

double cloudage_index(const std::array<double, 10>& ch) {
  for (double v : ch)
    if (v < 0.0) throw Error(ErrorCode::InvalidArgument, "spectral channels must be >= 0");
  const double blue = (ch[0] + ch[1] + ch[2]) / 3.0;  // 415, 445, 480 nm
  const double red = (ch[5] + ch[6] + ch[7]) / 3.0;   // 590, 660, 690 nm
  if (red == 0.0) throw Error(ErrorCode::ZeroSpectrum, "red-band mean is zero");
  const double idx = 1.0 - blue / red;
  return std::clamp(idx, 0.0, 1.0);
}

double local_hour(double timestamp, double utc_offset_hours) {
  double hour = std::fmod(timestamp / 3600.0 + utc_offset_hours, 24.0);
  if (hour < 0.0) hour += 24.0;
  return hour;
}

std::vector<double> species_prior(const EnvSnapshot& env, const SpeciesPriorTable& table,
                                  double utc_offset_hours) {
  if (table.rows.empty()) throw Error(ErrorCode::EmptyTable, "prior table is empty");

  const double hour = local_hour(env.timestamp, utc_offset_hours);
  std::vector<double> weights(table.rows.size(), 0.0);
  double total = 0.0, base_total = 0.0;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& r = table.rows[i];
    base_total += r.base_rate;
    const bool temp_ok = env.temperature_c >= r.temp_min_c && env.temperature_c <= r.temp_max_c;
    const bool hour_ok = hour_in_window(hour, r.hour_start, r.hour_end);
    weights[i] = temp_ok && hour_ok ? r.base_rate : 0.0;
    total += weights[i];
  }
  if (base_total <= 0.0)
    throw Error(ErrorCode::EmptyTable, "all base rates are zero");

  if (total <= 0.0) {
    // nothing matches the snapshot; fall back to relative abundance
    for (std::size_t i = 0; i < weights.size(); ++i)
      weights[i] = table.rows[i].base_rate / base_total;
    return weights;
  }
  for (double& w : weights) w /= total;
  return weights;
}

std::vector<double> apply_prior(const std::vector<double>& classifier_posterior,
                                const std::vector<double>& prior) {
  if (classifier_posterior.size() != prior.size())
    throw Error(ErrorCode::LengthMismatch,
                "posterior has " + std::to_string(classifier_posterior.size()) +
                    " entries, prior has " + std::to_string(prior.size()));
  if (classifier_posterior.empty())
    throw Error(ErrorCode::LengthMismatch, "empty probability vectors");

  auto check = [](const std::vector<double>& v, const char* what) {
    double sum = 0.0;
    for (double x : v) {
      if (x < 0.0) throw Error(ErrorCode::NotNormalized, std::string(what) + " has negative entries");
      sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-6)
      throw Error(ErrorCode::NotNormalized, std::string(what) + " does not sum to 1");
  };
  check(classifier_posterior, "posterior");
  check(prior, "prior");

  std::vector<double> out(prior.size());
  double total = 0.0;
  for (std::size_t i = 0; i < prior.size(); ++i) {
    out[i] = classifier_posterior[i] * prior[i];
    total += out[i];
  }
  if (total <= 0.0) return classifier_posterior;
  for (double& x : out) x /= total;
  return out;
}

}  // namespace ento
