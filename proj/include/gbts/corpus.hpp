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

#include <cstddef>
#include <random>

#include "gbts/gaussian.hpp"
#include "gbts/matrix.hpp"

namespace gbts {

/// Seeded random instances shared by the verify suites, the benchmarks and
/// the tests.

/// Complex entries with real and imaginary parts uniform in [-scale, scale].
cplx random_complex(std::mt19937_64& rng, double scale = 1.0);

/// Complex symmetric n x n matrix with bandwidth at most w.
ComplexMatrix random_banded_symmetric(std::mt19937_64& rng, std::size_t n, std::size_t w, double scale = 1.0);

/// 2k x 2k matrix whose four k x k blocks have bandwidth at most w, with
/// symmetric diagonal blocks and off-diagonal blocks transposed to each other.
ComplexMatrix random_block_banded(std::mt19937_64& rng, std::size_t k, std::size_t w);

struct CircuitOptions {
  double eta = 1.0;
  double max_r = 1.0;
  double max_displacement = 0.0;
};

/**
 * M modes, D brickwork layers. Layer l pairs modes starting at offset l % 2;
 * every pair gets a beamsplitter with random angles and leftover modes a
 * random phase. Squeezing magnitudes are uniform in [0, max_r].
 */
CircuitSpec random_circuit(std::mt19937_64& rng, std::size_t modes, std::size_t depth,
                           const CircuitOptions& opt = {});

}  // namespace gbts
