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

#include <algorithm>
#include <bit>
#include <string>

#include "gbts/errors.hpp"
#include "gbts/hafnian.hpp"

namespace gbts {

namespace {

constexpr std::size_t kMaxSubsetWindow = 26;

// Plain complex product; the library version also repairs inf/nan operands,
// which is slow and never needed here.
inline cplx mul(cplx x, cplx y) {
  return {x.real() * y.real() - x.imag() * y.imag(), x.real() * y.imag() + x.imag() * y.real()};
}

}  // namespace

BandedView check_banded(const ComplexMatrix& a, std::size_t w, double tol) {
  if (!a.is_symmetric()) throw PreconditionError("banded loop hafnian: matrix is not symmetric");
  const std::size_t measured = bandwidth(a, tol);
  if (measured > w) {
    throw PreconditionError("banded loop hafnian: declared bandwidth " + std::to_string(w) +
                            " is smaller than measured bandwidth " + std::to_string(measured));
  }
  return BandedView(a, w);
}

// Window of step t is X_t = [first, t] with first = max(t - 2w, 0); bit j of
// a key stands for index first + j and the top bit for t itself. Indices
// below `first` are always included. When the window slides by one, the
// index that leaves it is part of every subset, so an old key is rebuilt as
// (new key without t) << 1 | 1.
SubhafnianTableBanded lhaf_banded_table(const BandedView& view) {
  const ComplexMatrix& a = view.matrix();
  const std::size_t n = a.dim();
  const std::size_t w = view.width();
  if (std::min(n, 2 * w + 1) > kMaxSubsetWindow) {
    throw PreconditionError("banded loop hafnian: window of " + std::to_string(std::min(n, 2 * w + 1)) +
                            " indices exceeds the table limit");
  }

  std::vector<cplx> prev{1.0};
  std::vector<cplx> cur;
  std::vector<cplx> kept;
  std::size_t prev_first = 0;
  std::size_t first = 0;
  std::size_t width = 0;

  for (std::size_t t = 0; t < n; ++t) {
    first = t >= 2 * w ? t - 2 * w : 0;
    width = t - first + 1;
    const bool shift = first > prev_first;
    const std::uint64_t half = std::uint64_t{1} << (width - 1);
    cur.resize(2 * half);

    // Key k of step t reads key (k << 1) | 1 of step t - 1 after a slide.
    // Gathering those once keeps the loops below on contiguous memory.
    const cplx* src_row = prev.data();
    if (shift) {
      kept.resize(half);
      for (std::uint64_t k = 0; k < half; ++k) kept[k] = prev[(k << 1) | 1];
      src_row = kept.data();
    }
    const auto row_t = a.row(t);
    const cplx loop = row_t[t];
    // Partners of t are first + j with j >= jmin; the key splits into those
    // partner bits (high) and a contiguous run of lower bits.
    const std::size_t lowest = t >= w ? t - w : 0;
    const std::size_t jmin = lowest > first ? lowest - first : 0;
    const std::uint64_t block = std::uint64_t{1} << jmin;
    for (std::uint64_t high = 0; high < (half >> jmin); ++high) {
      const std::uint64_t base = high << jmin;
      cplx* dst = cur.data() + (half | base);
      for (std::uint64_t lo = 0; lo < block; ++lo) {
        const cplx p = src_row[base | lo];
        cur[base | lo] = p;
        dst[lo] = mul(loop, p);
      }
      for (std::uint64_t m = high; m != 0; m &= m - 1) {
        const int j = std::countr_zero(m);
        const cplx aij = row_t[first + jmin + static_cast<std::size_t>(j)];
        const std::uint64_t src = base ^ (std::uint64_t{1} << (jmin + static_cast<std::size_t>(j)));
        for (std::uint64_t lo = 0; lo < block; ++lo) dst[lo] += mul(aij, src_row[src | lo]);
      }
    }
    prev.swap(cur);
    prev_first = first;
  }
  return SubhafnianTableBanded{first, width, std::move(prev)};
}

cplx lhaf_banded(const BandedView& view) {
  if (view.matrix().dim() == 0) return 1.0;
  const auto table = lhaf_banded_table(view);
  return table.values.back();
}

cplx lhaf_banded(const ComplexMatrix& a, std::size_t w) { return lhaf_banded(check_banded(a, w)); }

}  // namespace gbts
