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

#include <bit>
#include <string>

#include "gbts/errors.hpp"
#include "gbts/hafnian.hpp"

namespace gbts {

std::uint64_t telephone(int k) {
  if (k < 0 || k > kTelephoneMaxK) {
    throw PreconditionError("telephone: k must lie in [0, " + std::to_string(kTelephoneMaxK) +
                            "], got " + std::to_string(k));
  }
  std::uint64_t prev = 1;  // T_0
  std::uint64_t cur = 1;   // T_1
  if (k == 0) return prev;
  for (int j = 2; j <= k; ++j) {
    const std::uint64_t next = cur + static_cast<std::uint64_t>(j - 1) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

cplx t_poly(int k, cplx a) {
  if (k < 0) throw PreconditionError("t_poly: k must be non-negative");
  cplx prev = 1.0;  // T_0
  if (k == 0) return prev;
  cplx cur = a;  // T_1
  for (int j = 2; j <= k; ++j) {
    const cplx next = a * (cur + static_cast<double>(j - 1) * prev);
    prev = cur;
    cur = next;
  }
  return cur;
}

cplx block_lhaf(int k, cplx g, cplx a) {
  if (k < 0) throw PreconditionError("block_lhaf: k must be non-negative");
  cplx prev = 1.0;  // L_0
  if (k == 0) return prev;
  cplx cur = g;  // L_1
  for (int j = 2; j <= k; ++j) {
    const cplx next = g * cur + static_cast<double>(j - 1) * a * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

// Sum over perfect matchings (with loops) of the vertices in `unmatched`.
cplx enumerate_matchings(const ComplexMatrix& a, std::uint32_t unmatched) {
  if (unmatched == 0) return 1.0;
  const int i = std::countr_zero(unmatched);
  const std::uint32_t rest = unmatched & (unmatched - 1);
  cplx total = a(i, i) * enumerate_matchings(a, rest);
  for (std::uint32_t m = rest; m != 0; m &= m - 1) {
    const int j = std::countr_zero(m);
    total += a(i, j) * enumerate_matchings(a, rest & ~(std::uint32_t{1} << j));
  }
  return total;
}

}  // namespace

cplx lhaf_brute(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  if (n > kBruteMaxDim) {
    throw PreconditionError("lhaf_brute: dimension " + std::to_string(n) + " exceeds guard " +
                            std::to_string(kBruteMaxDim));
  }
  if (!a.is_symmetric()) throw PreconditionError("lhaf_brute: matrix is not symmetric");
  const std::uint32_t all = n == 0 ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  return enumerate_matchings(a, all);
}

}  // namespace gbts
