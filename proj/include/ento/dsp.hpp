// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "ento/error.hpp"

namespace ento {

// Uniformly sampled photodiode waveform, amplitudes nominally in [-1, 1].
struct TimeSeries {
  std::vector<double> samples;
  double sample_rate = 96000.0;  // Hz; the ADC runs at 24 bit / 96 kHz
  double start_time = 0.0;       // seconds since epoch

  std::size_t size() const { return samples.size(); }
  double duration() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate : 0.0;
  }
};

// One-sided power spectral density on a uniform frequency grid.
struct PowerSpectrum {
  std::vector<double> frequencies;  // Hz, ascending, spacing == resolution
  std::vector<double> psd;          // power per Hz, >= 0
  double resolution = 0.0;          // Hz
};

// Time-frequency power map; power is row-major [frame][bin].
struct Spectrogram {
  std::vector<double> times;        // s, frame centers
  std::vector<double> frequencies;  // Hz
  std::vector<double> power;

  std::size_t frame_count() const { return times.size(); }
  std::size_t bin_count() const { return frequencies.size(); }
  double at(std::size_t frame, std::size_t bin) const {
    return power[frame * frequencies.size() + bin];
  }
};

struct Harmonic {
  int order = 0;               // 2, 3, ...
  double frequency_hz = 0.0;
  double relative_power = 0.0;  // in [0, 1], relative to the fundamental
};

struct HarmonicProfile {
  double fundamental_hz = 0.0;
  double fundamental_power = 0.0;  // absolute PSD value at the peak
  std::vector<Harmonic> harmonics; // ascending order index
};

// Physical sizing of the optical gate. Flight path runs along active_length_m.
struct SensorGeometry {
  double active_length_m = 0.06;
  std::array<double, 2> sensor_area_mm{100.0, 100.0};
  std::array<double, 2> freq_band_hz{200.0, 600.0};
  std::array<double, 2> speed_band_mps{0.556, 8.333};  // 2-30 km/h
};

enum class Window { hann, rect };

Window window_from_name(const std::string& name);
const char* window_name(Window w);

// Subtracts the signal mean (the body-shadow DC component).
TimeSeries remove_dc(const TimeSeries& signal);

// Cascade of `order` identical single-pole high-pass sections (bilinear
// design, per-stage cutoff adjusted so the cascade is -3 dB at cutoff_hz).
TimeSeries highpass_filter(const TimeSeries& signal, double cutoff_hz, int order = 1);

// Welch PSD estimate: mean-detrended, windowed, overlapping segments.
// One-sided scaling, so sum(psd) * resolution tracks the signal variance.
PowerSpectrum welch_psd(const TimeSeries& signal, std::size_t segment_len,
                        double overlap_fraction, Window window);

// Short-time transform; each frame is the single-segment periodogram of its
// slice (same detrend/window/scaling as welch_psd with one segment).
Spectrogram stft_spectrogram(const TimeSeries& signal, std::size_t segment_len,
                             std::size_t hop, Window window);

struct HarmonicSearch {
  double band_low_hz = 30.0;
  double band_high_hz = 1200.0;
  int max_harmonic_order = 4;      // report orders 2..max
  double power_floor = 0.01;       // harmonic accepted at >= 1% of fundamental
  // A candidate fundamental must rise above this fraction of the spectrum-wide
  // maximum; window leakage from the transit envelope sits far below it.
  double relative_floor = 1e-6;
};

// Fundamental = strongest local PSD maximum inside the band, refined by
// 3-point quadratic interpolation. Harmonic k is reported when a local peak
// lies within 1.5 * resolution of k * fundamental and carries >= power_floor
// of the fundamental's power.
HarmonicProfile extract_harmonics(const PowerSpectrum& spectrum,
                                  const HarmonicSearch& search = {});

// Wing beats seen along the active path: wingbeat_hz * L / v.
double expected_beats_in_path(double wingbeat_hz, double speed_mps,
                              const SensorGeometry& geometry = {});

namespace detail {
void validate_signal(const TimeSeries& signal);
std::vector<double> make_window(Window w, std::size_t n);
}  // namespace detail

}  // namespace ento
