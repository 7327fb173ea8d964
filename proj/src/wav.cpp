// SPDX-License-Identifier: Apache-2.0

#include "ento/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

namespace ento {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint32_t read_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void put_u32(std::vector<unsigned char>& v, std::uint32_t x) {
  v.push_back(x & 0xFF);
  v.push_back((x >> 8) & 0xFF);
  v.push_back((x >> 16) & 0xFF);
  v.push_back((x >> 24) & 0xFF);
}

void put_u16(std::vector<unsigned char>& v, std::uint16_t x) {
  v.push_back(x & 0xFF);
  v.push_back((x >> 8) & 0xFF);
}

}  // namespace

TimeSeries read_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::MissingFile, "cannot open '" + path.string() + "'");
  std::vector<unsigned char> data((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (data.size() < 44 || std::memcmp(data.data(), "RIFF", 4) != 0 ||
      std::memcmp(data.data() + 8, "WAVE", 4) != 0)
    throw Error(ErrorCode::InvalidWav, "'" + path.string() + "' is not a RIFF/WAVE file");

  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t rate = 0;
  const unsigned char* pcm = nullptr;
  std::size_t pcm_len = 0;

  std::size_t pos = 12;
  while (pos + 8 <= data.size()) {
    const char* id = reinterpret_cast<const char*>(data.data() + pos);
    const std::uint32_t len = read_u32(data.data() + pos + 4);
    const std::size_t body = pos + 8;
    if (body + len > data.size())
      throw Error(ErrorCode::InvalidWav, "truncated chunk in '" + path.string() + "'");
    if (std::memcmp(id, "fmt ", 4) == 0) {
      if (len < 16) throw Error(ErrorCode::InvalidWav, "short fmt chunk");
      format = read_u16(data.data() + body);
      channels = read_u16(data.data() + body + 2);
      rate = read_u32(data.data() + body + 4);
      bits = read_u16(data.data() + body + 14);
    } else if (std::memcmp(id, "data", 4) == 0) {
      pcm = data.data() + body;
      pcm_len = len;
    }
    pos = body + len + (len % 2);  // chunks are word-aligned
  }

  if (!pcm || rate == 0) throw Error(ErrorCode::InvalidWav, "missing fmt or data chunk");
  if (format != kFormatPcm && format != kFormatExtensible)
    throw Error(ErrorCode::InvalidWav, "only PCM WAV is supported");
  if (channels != 1)
    throw Error(ErrorCode::MultichannelWav,
                "'" + path.string() + "' has " + std::to_string(channels) +
                    " channels; expected mono");
  if (bits != 16 && bits != 24)
    throw Error(ErrorCode::InvalidWav,
                std::to_string(bits) + "-bit PCM is not supported (16/24 only)");

  const std::size_t bytes = bits / 8;
  const std::size_t count = pcm_len / bytes;
  TimeSeries out;
  out.sample_rate = static_cast<double>(rate);
  out.samples.resize(count);
  if (bits == 16) {
    const double scale = 1.0 / 32768.0;
    for (std::size_t i = 0; i < count; ++i) {
      std::int16_t s = static_cast<std::int16_t>(pcm[2 * i] | (pcm[2 * i + 1] << 8));
      out.samples[i] = s * scale;
    }
  } else {
    const double scale = 1.0 / 8388608.0;
    for (std::size_t i = 0; i < count; ++i) {
      std::int32_t s = pcm[3 * i] | (pcm[3 * i + 1] << 8) | (pcm[3 * i + 2] << 16);
      if (s & 0x800000) s |= ~0xFFFFFF;  // sign-extend
      out.samples[i] = s * scale;
    }
  }
  return out;
}

void write_wav(const TimeSeries& signal, const std::filesystem::path& path) {
  if (!(signal.sample_rate > 0.0))
    throw Error(ErrorCode::InvalidArgument, "sample_rate must be positive");
  const std::uint32_t rate = static_cast<std::uint32_t>(std::lround(signal.sample_rate));
  const std::uint32_t data_len = static_cast<std::uint32_t>(signal.samples.size() * 3);

  std::vector<unsigned char> out;
  out.reserve(44 + data_len);
  out.insert(out.end(), {'R', 'I', 'F', 'F'});
  put_u32(out, 36 + data_len);
  out.insert(out.end(), {'W', 'A', 'V', 'E', 'f', 'm', 't', ' '});
  put_u32(out, 16);
  put_u16(out, kFormatPcm);
  put_u16(out, 1);  // mono
  put_u32(out, rate);
  put_u32(out, rate * 3);  // byte rate
  put_u16(out, 3);         // block align
  put_u16(out, 24);
  out.insert(out.end(), {'d', 'a', 't', 'a'});
  put_u32(out, data_len);

  for (double s : signal.samples) {
    const double clamped = std::clamp(s, -1.0, 1.0);
    std::int32_t q = static_cast<std::int32_t>(std::lround(clamped * 8388607.0));
    out.push_back(q & 0xFF);
    out.push_back((q >> 8) & 0xFF);
    out.push_back((q >> 16) & 0xFF);
  }

  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::IoError, "cannot write '" + path.string() + "'");
  f.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
  if (!f) throw Error(ErrorCode::IoError, "short write to '" + path.string() + "'");
}

}  // namespace ento
