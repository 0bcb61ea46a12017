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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace gbts {

using cplx = std::complex<double>;

/// Absolute tolerance used when asserting that a matrix is symmetric.
inline constexpr double kSymmetryTol = 1e-10;
/// Default tolerance for treating an entry as structurally zero.
inline constexpr double kBandTol = 1e-12;

/**
 * Dense square matrix of complex scalars, stored row-major.
 *
 * Used for unitaries, covariance matrices and (extended) adjacency matrices.
 * Banded structure is exploited by the algorithms, not by the storage.
 * All indices are 0-based.
 */
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t n) : n_(n), data_(n * n) {}
  ComplexMatrix(std::size_t n, cplx fill) : n_(n), data_(n * n, fill) {}
  /// Row-wise initializer; throws PreconditionError if the rows are ragged
  /// or the shape is not square.
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const cplx> values);

  std::size_t dim() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }

  cplx& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }

  std::span<cplx> row(std::size_t i) noexcept { return {data_.data() + i * n_, n_}; }
  std::span<const cplx> row(std::size_t i) const noexcept { return {data_.data() + i * n_, n_}; }

  cplx* data() noexcept { return data_.data(); }
  const cplx* data() const noexcept { return data_.data(); }

  std::vector<cplx> diag() const;

  /// max_{i,j} |A_ij - A_ji|.
  double asymmetry() const;
  bool is_symmetric(double tol = kSymmetryTol) const { return asymmetry() <= tol; }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<cplx> data_;
};

/// Multiplicity of every index of a base matrix. Entry 0 deletes the index,
/// entry k >= 1 repeats its row and column k times.
using RepetitionVector = std::vector<int>;

/// Bijection on {0, ..., n-1}. Applying it to a matrix reads old index
/// `order()[i]` into new position i.
class Permutation {
 public:
  Permutation() = default;
  /// Throws PreconditionError unless `order` is a bijection.
  explicit Permutation(std::vector<std::size_t> order);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return order_.size(); }
  std::size_t operator[](std::size_t i) const noexcept { return order_[i]; }
  const std::vector<std::size_t>& order() const noexcept { return order_; }
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> order_;
};

/// Smallest w such that |A_ij| <= tol whenever |i - j| > w.
std::size_t bandwidth(const ComplexMatrix& a, double tol = kBandTol);

/// Permutation on 2k indices moving the pair (j, k + j) to adjacent
/// positions (2j, 2j + 1). Turns a 2x2 block matrix with banded blocks of
/// bandwidth w into a banded matrix of bandwidth at most 2w + 1.
Permutation interleave_perm(std::size_t k);

/// P^T A P: simultaneous reordering of rows and columns.
ComplexMatrix permute(const ComplexMatrix& a, const Permutation& p);

/// A_s: index i replicated s[i] times in place, deleted when s[i] == 0.
ComplexMatrix repeat_pattern(const ComplexMatrix& a, std::span<const int> s);

/// Copy of `a` with its diagonal replaced by `v`.
ComplexMatrix fdiag(const ComplexMatrix& a, std::span<const cplx> v);

/// fdiag(A_s, v_s) with v_s listing v[i] s[i] times. The copies of index i
/// keep A_ii as their mutual weight; only the loops take v[i].
ComplexMatrix repeat_with_loops(const ComplexMatrix& a, std::span<const int> s, std::span<const cplx> v);

/// Principal submatrix on strictly increasing indices `idx`.
ComplexMatrix extract_principal(const ComplexMatrix& a, std::span<const std::size_t> idx);

/// Validates a repetition vector against a matrix dimension.
void check_repetitions(std::span<const int> s, std::size_t n);

}  // namespace gbts
