// Copyright 2026 The gbts Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gbts/gaussian.hpp"
#include "gbts/hafnian.hpp"

namespace gbts {

/// Conditional masses below zero by less than this are rounding noise.
inline constexpr double kNegativeMassTol = 1e-8;

/// Detector outcome: per-mode counts in [0, c], or the overflow event "#".
class PhotonPattern {
 public:
  PhotonPattern() = default;
  explicit PhotonPattern(std::vector<int> counts) : counts_(std::move(counts)) {}
  static PhotonPattern overflow();

  bool is_overflow() const noexcept { return overflow_; }
  /// Empty for the overflow event.
  const std::vector<int>& counts() const noexcept { return counts_; }

  /// Space-separated counts, or "#".
  std::string to_string() const;
  /// Inverse of to_string(); throws ParseError.
  static PhotonPattern parse(std::string_view line);

  friend bool operator==(const PhotonPattern&, const PhotonPattern&) = default;

 private:
  std::vector<int> counts_;
  bool overflow_ = false;
};

struct SamplerConfig {
  int c = 1;
  std::uint64_t seed = 0;
  Engine engine = Engine::automatic;

  void validate() const;
};

/**
 * Uniform variates for one sample.
 *
 * A std::mt19937_64 seeded through std::seed_seq with the 32-bit halves of
 * (seed, index), low half first. Variates are (x >> 11) * 2^-53, in [0, 1).
 */
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t index);
  double uniform();

 private:
  std::mt19937_64 gen_;
};

/// Distribution of the next mode's count given the earlier ones.
struct ConditionalTable {
  /// q[x] for x = 0..c, then q[c + 1] for the overflow outcome.
  std::vector<double> q;
  /// p(prefix, x) for x = 0..c.
  std::vector<double> joint;
  std::uint64_t engine_calls = 0;
};

/// Index of the first outcome whose cumulative mass reaches u; outcomes of
/// zero mass are never returned.
std::size_t draw_outcome(std::span<const double> q, double u);

/**
 * Conditional table of mode k given counts on modes 1..k-1, where `st_k` is
 * the state reduced to k modes and prior = p(prefix) > 0.
 */
ConditionalTable conditional_dist(const GaussianState& st_k, std::span<const int> prefix, double prior,
                                  const SamplerConfig& cfg);

struct SampleResult {
  PhotonPattern pattern;
  std::uint64_t engine_calls = 0;
};

/// Chain-rule sampler for one circuit. The interleaved extended adjacency of
/// every reduced state is built once at construction.
class GbtsSampler {
 public:
  GbtsSampler(const CircuitSpec& circuit, SamplerConfig cfg);

  std::size_t modes() const noexcept { return reduced_.size(); }
  const SamplerConfig& config() const noexcept { return cfg_; }

  /// Table for mode k (1-based count of modes kept) given `prefix` of length k-1.
  ConditionalTable conditional(std::size_t k, std::span<const int> prefix, double prior) const;

  SampleResult sample(RandomStream& stream) const;
  /// Sample number `index` of the stream family selected by cfg.seed.
  SampleResult sample(std::uint64_t index) const;

 private:
  struct Reduced {
    InterleavedAdjacency interleaved;
    double prefactor;
  };
  SamplerConfig cfg_;
  std::vector<Reduced> reduced_;
};

SampleResult gbts_sample(const CircuitSpec& circuit, const SamplerConfig& cfg, RandomStream& stream);

/// Samples 0..n-1 of the seed's stream family. The result does not depend on
/// `threads` (0 picks the hardware concurrency).
std::vector<SampleResult> batch_sample(const CircuitSpec& circuit, const SamplerConfig& cfg, std::size_t n,
                                       unsigned threads = 1);

}  // namespace gbts
