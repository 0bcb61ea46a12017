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
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gbts/matrix.hpp"
#include "gbts/subhafnian_table.hpp"

namespace gbts {

/// Largest matrix dimension accepted by lhaf_brute.
inline constexpr std::size_t kBruteMaxDim = 18;
/// Largest argument accepted by telephone().
inline constexpr int kTelephoneMaxK = 30;
/// lhaf_auto uses brute-force enumeration up to this expanded dimension.
inline constexpr std::size_t kAutoBruteMaxDim = 14;

/// Number of perfect matchings (loops allowed) of the complete graph on k
/// vertices: T_k = T_{k-1} + (k-1) T_{k-2}.
std::uint64_t telephone(int k);

/// Loop hafnian of the k x k matrix whose entries all equal a:
/// T_0 = 1, T_1 = a, T_k = a (T_{k-1} + (k-1) T_{k-2}).
cplx t_poly(int k, cplx a);

/// Loop hafnian of the k x k matrix with diagonal entries g and off-diagonal
/// entries a: L_0 = 1, L_1 = g, L_k = g L_{k-1} + (k-1) a L_{k-2}.
/// block_lhaf(k, a, a) = t_poly(k, a).
cplx block_lhaf(int k, cplx g, cplx a);

/**
 * Loop hafnian by explicit enumeration of perfect matchings with loops.
 *
 * The lowest unmatched vertex is paired either with itself or with a later
 * unmatched vertex. Cost grows like the telephone number of n, so this is
 * the reference oracle and is limited to n <= kBruteMaxDim.
 */
cplx lhaf_brute(const ComplexMatrix& a);

/// A symmetric matrix whose entries vanish (up to `tol`) outside the band
/// |i - j| <= w. Obtained through check_banded(), which scans the dense
/// storage once; the banded engines then read only in-band entries.
class BandedView {
 public:
  const ComplexMatrix& matrix() const noexcept { return *a_; }
  std::size_t width() const noexcept { return w_; }

 private:
  friend BandedView check_banded(const ComplexMatrix& a, std::size_t w, double tol);
  BandedView(const ComplexMatrix& a, std::size_t w) : a_(&a), w_(w) {}
  const ComplexMatrix* a_;
  std::size_t w_;
};

/// Validates symmetry (kSymmetryTol) and bandwidth(a, tol) <= w.
BandedView check_banded(const ComplexMatrix& a, std::size_t w, double tol = kBandTol);

/// Sliding-window subset DP for banded loop hafnians, O(n w 4^w).
cplx lhaf_banded(const BandedView& a);
cplx lhaf_banded(const ComplexMatrix& a, std::size_t w);

/// Final DP table of the subset recursion: entry D holds the loop hafnian of
/// the principal submatrix on D plus every index below the window.
SubhafnianTableBanded lhaf_banded_table(const BandedView& a);

/**
 * Loop hafnian of repeat_pattern(a, s) for a banded a, by the multi-index DP
 * with convolutions, O*(n (2c+2)^{2w+1}) with c = max(s).
 *
 * Zero entries of s are removed first by deleting the corresponding rows and
 * columns, which keeps the bandwidth.
 *
 * A non-empty `loops` evaluates repeat_with_loops(a, s, loops) instead: the
 * copies of index i carry loops[i] on the diagonal and a(i, i) between them.
 */
cplx lhaf_banded_rep(const ComplexMatrix& a, std::size_t w, std::span<const int> s,
                     ConvolutionMethod method = ConvolutionMethod::automatic, std::span<const cplx> loops = {});

/// lhaf_banded_rep(...) / prod_i s_i!.
cplx lhaf_banded_rep_scaled(const ComplexMatrix& a, std::size_t w, std::span<const int> s,
                            ConvolutionMethod method = ConvolutionMethod::automatic,
                            std::span<const cplx> loops = {});

/// Final table of the repetition DP. Requires every s_i >= 1; entry d holds
/// lhaf(repeat_pattern(a, d + s|below window)) / d!, or the same with loops.
SubhafnianTableRep lhaf_banded_rep_table(const BandedView& a, std::span<const int> s,
                                         ConvolutionMethod method = ConvolutionMethod::automatic,
                                         std::span<const cplx> loops = {});

enum class Engine { automatic, brute, banded, banded_rep };

std::string_view engine_name(Engine e);
/// Accepts "auto", "brute", "banded", "banded-rep"; throws PreconditionError.
Engine parse_engine(std::string_view name);

/// Dispatches on the expanded dimension and the measured bandwidth:
/// brute up to kAutoBruteMaxDim, otherwise the subset DP when s is absent or
/// all ones, otherwise the repetition DP. `loops` as in lhaf_banded_rep.
cplx lhaf_auto(const ComplexMatrix& a, std::optional<std::span<const int>> s = std::nullopt,
               std::span<const cplx> loops = {});

/// Loop hafnian of repeat_pattern(a, s), or of repeat_with_loops(a, s, loops)
/// when `loops` is non-empty, with an explicit engine choice. `w` overrides
/// the measured bandwidth for the banded engines; for the subset DP it refers
/// to the expanded matrix.
cplx lhaf(const ComplexMatrix& a, std::span<const int> s, Engine engine,
          std::optional<std::size_t> w = std::nullopt, std::span<const cplx> loops = {});

/// Loop hafnians for a family of repetition vectors that differ only in their
/// trailing `tail` entries.
struct TailSweep {
  /// values[x] = lhaf(repeat_pattern(a, s_x)) where s_x agrees with s on the
  /// leading entries and has all `tail` trailing entries equal to x.
  std::vector<cplx> values;
  /// Number of hafnian-engine invocations spent.
  std::uint64_t engine_calls = 0;
};

/**
 * Evaluates the sweep x = 0..max_x.
 *
 * The DP engines obtain every x from a single table: the trailing indices are
 * given the bound max_x and the final table is read at each x. The brute
 * engine evaluates each x separately. The trailing entries of `s` are ignored.
 */
TailSweep lhaf_tail_sweep(const ComplexMatrix& a, std::span<const int> s, std::size_t tail,
                          int max_x, Engine engine, std::span<const cplx> loops = {});

}  // namespace gbts
