// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>

#include "ento/dsp.hpp"

namespace ento {

// Reads a mono PCM WAV (16- or 24-bit, any rate); samples are normalized by
// full scale into [-1, 1). Multichannel files are rejected.
TimeSeries read_wav(const std::filesystem::path& path);

// Writes mono 24-bit PCM at the series' sample rate (nominally 96 kHz).
// Samples are clamped to [-1, 1].
void write_wav(const TimeSeries& signal, const std::filesystem::path& path);

}  // namespace ento
