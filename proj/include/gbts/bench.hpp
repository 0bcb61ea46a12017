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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gbts/hafnian.hpp"

namespace gbts {

inline constexpr std::string_view kBenchCsvHeader = "parameter,value,median_wall_s,engine_calls";

enum class BenchKernel { banded, banded_rep, sampler };

/// Accepts "banded", "banded-rep", "sampler"; throws PreconditionError.
BenchKernel parse_kernel(std::string_view name);

/// One varying parameter: "name=start:stop:step" (inclusive) or "name=v1,v2,...".
struct Sweep {
  std::string parameter;
  std::vector<double> values;
};

/// Throws PreconditionError on malformed specs.
Sweep parse_sweep(std::string_view spec);

/**
 * Kernel parameters and their defaults:
 *
 *   banded      n = 400, w = 3
 *   banded-rep  n = 40,  w = 1, c = 2   (every index repeated c times)
 *   sampler     M = 8,   D = 2, c = 2, samples = 20, r = 0.5, eta = 1
 *
 * Matrices and circuits are drawn from the corpus generators with `seed`.
 */
struct BenchOptions {
  std::map<std::string, double> fixed;
  Engine engine = Engine::automatic;
  int warmup = 1;
  int repetitions = 5;
  /// Least time spent on each point per timed repetition. A repetition is
  /// made of short slices that visit the sweep points in turn; it reports the
  /// time per call.
  double min_rep_seconds = 0.05;
  std::uint64_t seed = 1;
};

struct BenchRow {
  std::string parameter;
  double value = 0.0;
  double median_wall_s = 0.0;
  /// Hafnian-engine invocations per kernel call (per sample for the sampler,
  /// maximum over the samples).
  std::uint64_t engine_calls = 0;
};

std::vector<BenchRow> run_bench(BenchKernel kernel, const Sweep& sweep, const BenchOptions& opt);

/// Header line plus one line per row, LF-terminated.
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace gbts
