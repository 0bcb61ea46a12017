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

// Banded loop hafnian with repeated rows and columns.
//
// H_t is indexed by multi-indices d over the window X_t = [first, t] with
// d_i <= s_i, and stores the scaled subhafnian lhaf(A_{d + s|below}) / d!,
// where every index below the window is taken with its full multiplicity.
// One step of the recursion is
//
//   H_t = G_t (*) H~_{t-1}
//
// where H~_{t-1} re-indexes H_{t-1} onto X_t (zero whenever d_t > 0) and
// G_t collects the ways the copies of index t are matched: sigma copies
// among themselves, weighted by T_sigma(A_tt) / sigma!, and d_i copies with
// each earlier index i, weighted by A_it^{d_i} / d_i!. With separate loop
// weights g_t the copies of t form a block with diagonal g_t and off-diagonal
// A_tt, and T_sigma is replaced by the block loop hafnian L_sigma(g_t, A_tt).

#include <algorithm>
#include <string>

#include "gbts/errors.hpp"
#include "gbts/hafnian.hpp"

namespace gbts {
namespace {

constexpr std::size_t kMaxRepTableSize = std::size_t{1} << 26;

std::vector<double> inverse_factorials(int up_to) {
  std::vector<double> inv(static_cast<std::size_t>(up_to) + 1, 1.0);
  for (int k = 1; k <= up_to; ++k) inv[k] = inv[k - 1] / k;
  return inv;
}

SubhafnianTableRep build_coupling_table(const ComplexMatrix& a, cplx loop, std::size_t t, std::size_t first,
                                        std::size_t w, const std::vector<int>& bounds,
                                        const std::vector<double>& inv_fact) {
  SubhafnianTableRep g(first, bounds);
  const std::size_t rank = bounds.size();
  const int s_t = bounds.back();

  // L_sigma(loop, A_tt) / sigma! for sigma = 0..s_t; equals T_sigma(A_tt) / sigma!
  // when the loops carry A_tt.
  std::vector<cplx> loops(static_cast<std::size_t>(s_t) + 1);
  for (int k = 0; k <= s_t; ++k) loops[k] = block_lhaf(k, loop, a(t, t)) * inv_fact[k];

  // A_it^d / d! for every partner axis, with A^0 = 1 even when A_it = 0.
  std::vector<std::vector<cplx>> powers(rank - 1);
  for (std::size_t j = 0; j + 1 < rank; ++j) {
    const std::size_t i = first + j;
    const bool in_band = i + w >= t;
    powers[j].assign(static_cast<std::size_t>(bounds[j]) + 1, cplx{});
    powers[j][0] = 1.0;
    if (!in_band) continue;
    cplx p = 1.0;
    for (int d = 1; d <= bounds[j]; ++d) {
      p *= a(i, t);
      powers[j][d] = p * inv_fact[d];
    }
  }

  std::vector<int> d(rank, 0);
  for (std::size_t lin = 0; lin < g.size(); ++lin) {
    if (lin > 0) {
      for (std::size_t j = 0; j < rank; ++j) {
        if (++d[j] <= bounds[j]) break;
        d[j] = 0;
      }
    }
    int sigma = d.back();
    cplx value = 1.0;
    for (std::size_t j = 0; j + 1 < rank && sigma >= 0; ++j) {
      if (d[j] == 0) continue;
      sigma -= d[j];
      value *= powers[j][d[j]];
    }
    if (sigma < 0) continue;
    g[lin] = value * loops[sigma];
  }
  return g;
}

}  // namespace

SubhafnianTableRep lhaf_banded_rep_table(const BandedView& view, std::span<const int> s,
                                         ConvolutionMethod method, std::span<const cplx> loops) {
  const ComplexMatrix& a = view.matrix();
  const std::size_t n = a.dim();
  const std::size_t w = view.width();
  check_repetitions(s, n);
  if (!loops.empty() && loops.size() != n) {
    throw PreconditionError("lhaf_banded_rep: loop vector has length " + std::to_string(loops.size()) +
                            ", expected " + std::to_string(n));
  }
  int max_s = 0;
  for (int v : s) {
    if (v < 1) {
      throw PreconditionError("lhaf_banded_rep_table: repetition entries must be positive");
    }
    max_s = std::max(max_s, v);
  }
  const auto inv_fact = inverse_factorials(max_s);

  SubhafnianTableRep prev;  // empty window, value 1
  prev[0] = 1.0;
  std::size_t prev_first = 0;

  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t first = t >= 2 * w ? t - 2 * w : 0;
    std::vector<int> bounds(s.begin() + static_cast<std::ptrdiff_t>(first),
                            s.begin() + static_cast<std::ptrdiff_t>(t) + 1);
    {
      double size = 1.0;
      for (int b : bounds) size *= b + 1;
      if (size > static_cast<double>(kMaxRepTableSize)) {
        throw PreconditionError("lhaf_banded_rep: DP table over window [" + std::to_string(first) +
                                ", " + std::to_string(t) + "] exceeds the size limit");
      }
    }

    // H~_{t-1}: entries with d_t = 0 occupy the leading block of the layout.
    SubhafnianTableRep carried(first, bounds);
    const std::size_t block = carried.size() / static_cast<std::size_t>(bounds.back() + 1);
    if (first > prev_first) {
      // The index leaving the window is saturated.
      const auto leaving = static_cast<std::size_t>(s[prev_first]);
      for (std::size_t lin = 0; lin < block; ++lin) carried[lin] = prev[leaving + (leaving + 1) * lin];
    } else {
      for (std::size_t lin = 0; lin < block; ++lin) carried[lin] = prev[lin];
    }

    const cplx loop = loops.empty() ? a(t, t) : loops[t];
    const auto coupling = build_coupling_table(a, loop, t, first, w, bounds, inv_fact);
    prev = convolve(coupling, carried, method);
    prev_first = first;
  }
  return prev;
}

cplx lhaf_banded_rep_scaled(const ComplexMatrix& a, std::size_t w, std::span<const int> s,
                            ConvolutionMethod method, std::span<const cplx> loops) {
  check_repetitions(s, a.dim());
  check_banded(a, w);
  if (!loops.empty() && loops.size() != a.dim()) {
    throw PreconditionError("lhaf_banded_rep: loop vector has length " + std::to_string(loops.size()) +
                            ", expected " + std::to_string(a.dim()));
  }
  std::vector<std::size_t> keep;
  std::vector<int> reps;
  std::vector<cplx> kept_loops;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] > 0) {
      keep.push_back(i);
      reps.push_back(s[i]);
      if (!loops.empty()) kept_loops.push_back(loops[i]);
    }
  }
  if (keep.empty()) return 1.0;
  const ComplexMatrix compact = keep.size() == a.dim() ? a : extract_principal(a, keep);
  const auto table = lhaf_banded_rep_table(check_banded(compact, w), reps, method, kept_loops);
  return table[table.size() - 1];
}

cplx lhaf_banded_rep(const ComplexMatrix& a, std::size_t w, std::span<const int> s,
                     ConvolutionMethod method, std::span<const cplx> loops) {
  const cplx scaled = lhaf_banded_rep_scaled(a, w, s, method, loops);
  double sfact = 1.0;
  for (int v : s) {
    for (int k = 2; k <= v; ++k) sfact *= k;
  }
  return scaled * sfact;
}

}  // namespace gbts
