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

#include "gbts/corpus.hpp"

#include <numbers>

namespace gbts {

cplx random_complex(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  const double re = u(rng);
  const double im = u(rng);
  return {re, im};
}

ComplexMatrix random_banded_symmetric(std::mt19937_64& rng, std::size_t n, std::size_t w, double scale) {
  ComplexMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n && j <= i + w; ++j) {
      a(i, j) = random_complex(rng, scale);
      a(j, i) = a(i, j);
    }
  }
  return a;
}

ComplexMatrix random_block_banded(std::mt19937_64& rng, std::size_t k, std::size_t w) {
  ComplexMatrix a(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if ((i > j ? i - j : j - i) > w) continue;
      if (j >= i) {
        a(i, j) = a(j, i) = random_complex(rng);
        a(k + i, k + j) = a(k + j, k + i) = random_complex(rng);
      }
      a(i, k + j) = a(k + j, i) = random_complex(rng);
    }
  }
  return a;
}

CircuitSpec random_circuit(std::mt19937_64& rng, std::size_t modes, std::size_t depth, const CircuitOptions& opt) {
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  CircuitSpec c = CircuitSpec::vacuum(modes);
  c.eta = opt.eta;
  for (auto& s : c.squeezing) {
    s.r = opt.max_r * unit(rng);
    s.phase = angle(rng);
  }
  if (opt.max_displacement > 0) {
    for (auto& b : c.displacement) b = std::polar(opt.max_displacement * unit(rng), angle(rng));
  }
  for (std::size_t l = 0; l < depth; ++l) {
    Layer layer;
    const std::size_t offset = l % 2;
    if (offset == 1 && modes > 0) layer.push_back(PhaseShift{0, angle(rng)});
    std::size_t j = offset;
    for (; j + 1 < modes; j += 2) layer.push_back(Beamsplitter{j, j + 1, angle(rng), angle(rng)});
    if (j < modes) layer.push_back(PhaseShift{j, angle(rng)});
    c.layers.push_back(std::move(layer));
  }
  return c;
}

}  // namespace gbts
