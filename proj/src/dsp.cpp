// SPDX-License-Identifier: Apache-2.0

#include "ento/dsp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fft.hpp"

namespace ento {

namespace detail {

void validate_signal(const TimeSeries& signal) {
  if (signal.samples.empty())
    throw Error(ErrorCode::EmptySignal, "signal has no samples");
  if (!(signal.sample_rate > 0.0))
    throw Error(ErrorCode::InvalidArgument, "sample_rate must be positive");
}

std::vector<double> make_window(Window w, std::size_t n) {
  std::vector<double> win(n, 1.0);
  if (w == Window::hann) {
    // periodic Hann, the usual choice for averaged periodograms
    for (std::size_t i = 0; i < n; ++i)
      win[i] = 0.5 * (1.0 - std::cos(2.0 * M_PI * static_cast<double>(i) /
                                     static_cast<double>(n)));
  }
  return win;
}

}  // namespace detail

namespace {

// Accumulates the one-sided periodogram of one detrended, windowed segment.
void accumulate_segment(const std::vector<double>& samples, std::size_t offset,
                        const std::vector<double>& window,
                        std::vector<double>& acc) {
  const std::size_t n = window.size();
  std::vector<double> seg(n);
  double mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) mean += samples[offset + i];
  mean /= static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i)
    seg[i] = (samples[offset + i] - mean) * window[i];

  const auto spec = detail::fft_real(seg);
  for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += std::norm(spec[k]);
}

PowerSpectrum scale_one_sided(std::vector<double> acc, std::size_t segment_len,
                              std::size_t segments, double sample_rate,
                              const std::vector<double>& window) {
  double wsq = 0.0;
  for (double w : window) wsq += w * w;
  const double scale = 1.0 / (static_cast<double>(segments) * sample_rate * wsq);

  const bool even = segment_len % 2 == 0;
  const std::size_t bins = acc.size();
  PowerSpectrum out;
  out.resolution = sample_rate / static_cast<double>(segment_len);
  out.frequencies.resize(bins);
  out.psd.resize(bins);
  for (std::size_t k = 0; k < bins; ++k) {
    out.frequencies[k] = static_cast<double>(k) * out.resolution;
    double p = acc[k] * scale;
    const bool interior = k > 0 && !(even && k == bins - 1);
    if (interior) p *= 2.0;  // fold the negative frequencies in
    out.psd[k] = p;
  }
  return out;
}

std::size_t one_sided_bins(std::size_t n) { return n % 2 == 0 ? n / 2 + 1 : (n + 1) / 2; }

// Quadratic vertex through (x-1,ym), (x,y0), (x+1,yp); returns bin offset and
// interpolated peak value.
std::pair<double, double> quad_interp(double ym, double y0, double yp) {
  const double denom = ym - 2.0 * y0 + yp;
  if (denom == 0.0 || !std::isfinite(denom)) return {0.0, y0};
  double delta = 0.5 * (ym - yp) / denom;
  delta = std::clamp(delta, -0.5, 0.5);
  const double value = y0 - 0.25 * (ym - yp) * delta;
  return {delta, std::max(value, y0)};
}

}  // namespace

Window window_from_name(const std::string& name) {
  if (name == "hann") return Window::hann;
  if (name == "rect") return Window::rect;
  throw Error(ErrorCode::InvalidArgument, "unknown window '" + name + "'");
}

const char* window_name(Window w) { return w == Window::hann ? "hann" : "rect"; }

TimeSeries remove_dc(const TimeSeries& signal) {
  detail::validate_signal(signal);
  double mean = std::accumulate(signal.samples.begin(), signal.samples.end(), 0.0) /
                static_cast<double>(signal.samples.size());
  TimeSeries out = signal;
  for (double& s : out.samples) s -= mean;
  return out;
}

TimeSeries highpass_filter(const TimeSeries& signal, double cutoff_hz, int order) {
  detail::validate_signal(signal);
  const double nyquist = signal.sample_rate / 2.0;
  if (!(cutoff_hz > 0.0) || !(cutoff_hz < nyquist))
    throw Error(ErrorCode::InvalidCutoff,
                "cutoff must lie in (0, " + std::to_string(nyquist) + ") Hz");
  if (order < 1)
    throw Error(ErrorCode::InvalidArgument, "filter order must be >= 1");

  // Per-stage cutoff widened so the n-stage cascade is -3 dB at cutoff_hz.
  const double stage_factor = std::sqrt(std::pow(2.0, 1.0 / order) - 1.0);
  const double c = std::tan(M_PI * cutoff_hz / signal.sample_rate) * stage_factor;
  const double a = 1.0 / (1.0 + c);
  const double b = (1.0 - c) * a;

  TimeSeries out = signal;
  for (int stage = 0; stage < order; ++stage) {
    double x_prev = 0.0, y_prev = 0.0;
    for (double& s : out.samples) {
      const double x = s;
      const double y = a * (x - x_prev) + b * y_prev;
      s = y;
      x_prev = x;
      y_prev = y;
    }
  }
  return out;
}

PowerSpectrum welch_psd(const TimeSeries& signal, std::size_t segment_len,
                        double overlap_fraction, Window window) {
  detail::validate_signal(signal);
  if (segment_len < 16)
    throw Error(ErrorCode::InvalidArgument, "segment_len must be >= 16");
  if (segment_len > signal.samples.size())
    throw Error(ErrorCode::SegmentTooLong,
                "segment_len " + std::to_string(segment_len) + " exceeds signal length " +
                    std::to_string(signal.samples.size()));
  if (!(overlap_fraction >= 0.0 && overlap_fraction <= 0.9))
    throw Error(ErrorCode::InvalidOverlap, "overlap_fraction must lie in [0, 0.9]");

  const std::size_t hop = std::max<std::size_t>(
      1, segment_len - static_cast<std::size_t>(
                           std::floor(overlap_fraction * static_cast<double>(segment_len))));
  const auto win = detail::make_window(window, segment_len);

  std::vector<double> acc(one_sided_bins(segment_len), 0.0);
  std::size_t segments = 0;
  for (std::size_t off = 0; off + segment_len <= signal.samples.size(); off += hop) {
    accumulate_segment(signal.samples, off, win, acc);
    ++segments;
  }
  return scale_one_sided(std::move(acc), segment_len, segments, signal.sample_rate, win);
}

Spectrogram stft_spectrogram(const TimeSeries& signal, std::size_t segment_len,
                             std::size_t hop, Window window) {
  detail::validate_signal(signal);
  if (hop < 1) throw Error(ErrorCode::InvalidHop, "hop must be >= 1");
  if (segment_len < 16)
    throw Error(ErrorCode::InvalidArgument, "segment_len must be >= 16");
  if (segment_len > signal.samples.size())
    throw Error(ErrorCode::SegmentTooLong,
                "segment_len " + std::to_string(segment_len) + " exceeds signal length " +
                    std::to_string(signal.samples.size()));

  const auto win = detail::make_window(window, segment_len);
  const std::size_t bins = one_sided_bins(segment_len);
  const std::size_t frames = (signal.samples.size() - segment_len) / hop + 1;

  Spectrogram out;
  out.times.reserve(frames);
  out.power.reserve(frames * bins);
  for (std::size_t f = 0; f < frames; ++f) {
    const std::size_t off = f * hop;
    std::vector<double> acc(bins, 0.0);
    accumulate_segment(signal.samples, off, win, acc);
    auto frame = scale_one_sided(std::move(acc), segment_len, 1, signal.sample_rate, win);
    if (f == 0) out.frequencies = frame.frequencies;
    out.times.push_back(signal.start_time +
                        (static_cast<double>(off) + static_cast<double>(segment_len) / 2.0) /
                            signal.sample_rate);
    out.power.insert(out.power.end(), frame.psd.begin(), frame.psd.end());
  }
  return out;
}

HarmonicProfile extract_harmonics(const PowerSpectrum& spectrum,
                                  const HarmonicSearch& search) {
  const auto& f = spectrum.frequencies;
  const auto& p = spectrum.psd;
  if (f.empty() || f.size() != p.size())
    throw Error(ErrorCode::InvalidArgument, "malformed spectrum");
  if (!(search.band_low_hz < search.band_high_hz))
    throw Error(ErrorCode::InvalidArgument, "empty search band");

  const double res = spectrum.resolution;
  const std::size_t n = f.size();

  auto in_band = [&](std::size_t i) {
    return f[i] >= search.band_low_hz && f[i] <= search.band_high_hz;
  };
  auto is_local_max = [&](std::size_t i) {
    const double left = i > 0 ? p[i - 1] : -1.0;
    const double right = i + 1 < n ? p[i + 1] : -1.0;
    return p[i] > 0.0 && p[i] >= left && p[i] >= right;
  };

  const double global_max = *std::max_element(p.begin(), p.end());

  // Strongest local maximum in the band; plain argmax would latch onto the
  // leakage skirt of out-of-band content decaying across the band edge.
  std::size_t best = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (!in_band(i) || !is_local_max(i)) continue;
    if (best == n || p[i] > p[best]) best = i;
  }
  if (best == n || global_max <= 0.0 || p[best] < search.relative_floor * global_max)
    throw Error(ErrorCode::NoPeak, "no spectral peak in band");

  HarmonicProfile profile;
  double delta = 0.0;
  if (best > 0 && best + 1 < n) {
    auto [d, v] = quad_interp(p[best - 1], p[best], p[best + 1]);
    delta = d;
    profile.fundamental_power = v;
  } else {
    profile.fundamental_power = p[best];
  }
  profile.fundamental_hz = std::clamp(f[best] + delta * res, search.band_low_hz,
                                      search.band_high_hz);

  for (int k = 2; k <= search.max_harmonic_order; ++k) {
    const double target = static_cast<double>(k) * profile.fundamental_hz;
    if (target > f.back() + 1.5 * res) break;

    std::size_t peak = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(f[i] - target) > 1.5 * res) continue;
      if (!is_local_max(i)) continue;
      if (peak == n || p[i] > p[peak]) peak = i;
    }
    if (peak == n) continue;

    double value = p[peak];
    double off = 0.0;
    if (peak > 0 && peak + 1 < n) {
      auto [d, v] = quad_interp(p[peak - 1], p[peak], p[peak + 1]);
      off = d;
      value = v;
    }
    if (value < search.power_floor * profile.fundamental_power) continue;

    Harmonic h;
    h.order = k;
    h.frequency_hz = std::clamp(f[peak] + off * res, target - 1.5 * res, target + 1.5 * res);
    h.relative_power = std::min(1.0, value / profile.fundamental_power);
    profile.harmonics.push_back(h);
  }
  return profile;
}

double expected_beats_in_path(double wingbeat_hz, double speed_mps,
                              const SensorGeometry& geometry) {
  if (!(speed_mps > 0.0)) throw Error(ErrorCode::ZeroSpeed, "speed must be positive");
  if (wingbeat_hz < 0.0)
    throw Error(ErrorCode::InvalidArgument, "wingbeat_hz must be >= 0");
  return wingbeat_hz * geometry.active_length_m / speed_mps;
}

}  // namespace ento
