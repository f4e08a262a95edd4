// SPDX-License-Identifier: Apache-2.0
#include "clipsgd/rng.hpp"

#include <cmath>

#include "clipsgd/kernels.hpp"

namespace clipsgd {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += kGolden);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

Xoshiro256pp::Xoshiro256pp(std::uint64_t seed) {
  std::uint64_t sm = seed;
  for (auto& w : s_) w = splitmix64(sm);
}

std::uint64_t Xoshiro256pp::next() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

SeedStream::SeedStream(std::uint64_t base_seed, std::uint64_t stream_index)
    : base_(base_seed),
      index_(stream_index),
      eng_(base_seed + (stream_index + 1) * kGolden) {}

std::uint64_t SeedStream::next_u64() { return eng_.next(); }

double SeedStream::uniform01() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double SeedStream::uniform_centered() { return uniform01() - 0.5; }

SeedStream derive_stream(std::uint64_t base_seed, std::uint64_t stream_index) {
  return SeedStream(base_seed, stream_index);
}

void fill_gaussian(SeedStream& stream, std::span<double> out) {
  std::size_t i = 0;
  for (; i + 1 < out.size(); i += 2) {
    const double u1 = stream.uniform01();
    const double u2 = stream.uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    out[i] = r * std::cos(kTwoPi * u2);
    out[i + 1] = r * std::sin(kTwoPi * u2);
  }
  if (i < out.size()) {
    const double u1 = stream.uniform01();
    const double u2 = stream.uniform01();
    out[i] = std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  }
}

void fill_unit_sphere(SeedStream& stream, std::span<double> out) {
  for (;;) {
    fill_gaussian(stream, out);
    const double n = kernels::norm({out.data(), out.size()});
    if (n > 0.0 && std::isfinite(n)) {
      for (double& x : out) x /= n;
      return;
    }
  }
}

double draw_pareto(SeedStream& stream, double x_m, double beta) {
  return x_m * std::pow(stream.uniform01(), -1.0 / beta);
}

double draw_stable_symmetric(SeedStream& stream, double a) {
  // V uniform on (-pi/2, pi/2), W standard exponential.
  const double v = 3.14159265358979323846 * stream.uniform_centered();
  const double w = -std::log(stream.uniform01());
  const double t = std::sin(a * v) / std::pow(std::cos(v), 1.0 / a);
  const double s = std::pow(std::cos(v * (1.0 - a)) / w, (1.0 - a) / a);
  return t * s;
}

}  // namespace clipsgd
