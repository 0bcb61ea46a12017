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
#include <string>
#include <string_view>
#include <vector>

namespace gbts {

enum class Suite { lemmas, oracles, all };

/// Accepts "lemmas", "oracles", "all"; throws PreconditionError.
Suite parse_suite(std::string_view name);

struct CheckResult {
  std::string name;
  bool passed = false;
  /// Measured quantities, e.g. "max bandwidth(U) - D = 0 over 100 circuits".
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const;
};

/**
 * Self-checks on seeded random corpora.
 *
 * lemmas: bandwidth of circuit unitaries against the depth, block bandwidth
 * of reduced adjacency matrices against 4D (with the 2D figure reported),
 * interleaving bandwidth against 2w + 1, and the two constructions of the
 * B and C blocks against each other.
 *
 * oracles: every hafnian engine against brute-force enumeration, telephone
 * numbers, FFT against direct convolution, and single-mode probabilities
 * against closed forms.
 */
VerifyReport run_verify(Suite suite, std::uint64_t seed);

}  // namespace gbts
