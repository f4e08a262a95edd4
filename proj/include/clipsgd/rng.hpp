// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace clipsgd {

/// xoshiro256++ with splitmix64 seeding. Hand-rolled (instead of <random>)
/// because draw sequences must be bit-identical across platforms and standard
/// library distributions are not pinned by the standard.
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed);
  std::uint64_t next();

 private:
  std::array<std::uint64_t, 4> s_;
};

/// One reproducible substream of randomness. Distinct (base_seed,
/// stream_index) pairs give statistically independent streams; identical
/// pairs replay bit-identical draws. Each Monte Carlo trial owns its stream
/// exclusively; streams are value types and may be copied to replay a
/// sequence.
class SeedStream {
 public:
  SeedStream(std::uint64_t base_seed, std::uint64_t stream_index);

  std::uint64_t base_seed() const { return base_; }
  std::uint64_t stream_index() const { return index_; }

  std::uint64_t next_u64();
  /// Uniform draw in the open interval (0, 1): ((x >> 11) + 0.5) * 2^-53.
  /// Never returns 0 or 1, so logs and inverse CDFs are always safe.
  double uniform01();
  /// Uniform draw in (-0.5, 0.5).
  double uniform_centered();

 private:
  std::uint64_t base_ = 0;
  std::uint64_t index_ = 0;
  Xoshiro256pp eng_;
};

SeedStream derive_stream(std::uint64_t base_seed, std::uint64_t stream_index);

/// Standard normal draws via Box-Muller pairs (two uniforms per pair; the
/// spare half of a trailing odd pair is discarded).
void fill_gaussian(SeedStream& stream, std::span<double> out);

/// Uniform direction on the unit sphere: normalized isotropic Gaussian draw.
void fill_unit_sphere(SeedStream& stream, std::span<double> out);

/// Pareto draw with scale x_m and tail beta: x_m * u^(-1/beta).
double draw_pareto(SeedStream& stream, double x_m, double beta);

/// Symmetric alpha-stable draw with characteristic function exp(-|t|^a),
/// by the Chambers-Mallows-Stuck construction. Requires a in (1, 2].
double draw_stable_symmetric(SeedStream& stream, double a);

}  // namespace clipsgd
