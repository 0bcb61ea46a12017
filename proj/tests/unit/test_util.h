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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "gbts/matrix.hpp"

namespace gbts_test {

inline std::mt19937_64 test_rng(std::uint64_t salt = 0) { return std::mt19937_64(0x5eed0000u + salt); }

/// |x - y| / (1 + |y|).
inline double rel_dev(gbts::cplx x, gbts::cplx y) { return std::abs(x - y) / (1.0 + std::abs(y)); }

inline std::vector<int> random_reps(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<int> s(n);
  for (int& v : s) v = d(rng);
  return s;
}

inline std::vector<gbts::cplx> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<gbts::cplx> v(n);
  for (auto& x : v) x = {d(rng), d(rng)};
  return v;
}

}  // namespace gbts_test
