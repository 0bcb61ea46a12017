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
#include <span>
#include <vector>

#include "gbts/matrix.hpp"

namespace gbts {

/// Dynamic-programming table of the banded subset recursion.
///
/// The window is the contiguous index range [first, first + width). Bit j of
/// a key selects index first + j; the stored value is the loop hafnian of the
/// principal submatrix on the selected indices together with every index
/// below `first`.
struct SubhafnianTableBanded {
  std::size_t first = 0;
  std::size_t width = 0;
  std::vector<cplx> values;  // size 2^width

  cplx at(std::uint64_t mask) const { return values[mask]; }
};

/**
 * Table indexed by bounded multi-indices over a window of consecutive base
 * indices [first, first + bounds.size()).
 *
 * Axis j ranges over 0..bounds[j]; axis 0 is the fastest-varying one in the
 * linear layout. In the repetition DP an entry holds the scaled subhafnian
 * lhaf(A_{d + s|below}) / d! for the multi-index d on the window.
 */
class SubhafnianTableRep {
 public:
  SubhafnianTableRep() : strides_{1}, values_(1) {}
  SubhafnianTableRep(std::size_t first, std::vector<int> bounds);

  std::size_t first() const noexcept { return first_; }
  std::size_t rank() const noexcept { return bounds_.size(); }
  const std::vector<int>& bounds() const noexcept { return bounds_; }
  std::size_t size() const noexcept { return values_.size(); }

  /// Stride of axis j; strides()[rank()] is the total size.
  std::size_t stride(std::size_t axis) const noexcept { return strides_[axis]; }

  std::size_t linear_index(std::span<const int> digits) const;
  std::vector<int> digits(std::size_t linear) const;

  cplx& operator[](std::size_t linear) noexcept { return values_[linear]; }
  const cplx& operator[](std::size_t linear) const noexcept { return values_[linear]; }
  cplx at(std::span<const int> digits) const { return values_[linear_index(digits)]; }

  std::span<cplx> values() noexcept { return values_; }
  std::span<const cplx> values() const noexcept { return values_; }

  bool same_shape(const SubhafnianTableRep& other) const noexcept {
    return first_ == other.first_ && bounds_ == other.bounds_;
  }

 private:
  std::size_t first_ = 0;
  std::vector<int> bounds_;
  std::vector<std::size_t> strides_;
  std::vector<cplx> values_;
};

enum class ConvolutionMethod { automatic, direct, fft };

/// Box size at or below which the automatic method sums directly.
inline constexpr std::size_t kDirectConvolutionLimit = 4096;

/**
 * Truncated multi-dimensional convolution:
 * H(d) = sum_{d' + d'' = d} H'(d') H''(d'') for every d within the bounds.
 *
 * The direct method skips zero entries of `lhs`; the FFT method zero-pads
 * axis j to length 2 * bounds[j] + 2 so that no circular wrap-around occurs.
 * Throws PreconditionError if the two tables live on different windows.
 */
SubhafnianTableRep convolve(const SubhafnianTableRep& lhs, const SubhafnianTableRep& rhs,
                            ConvolutionMethod method = ConvolutionMethod::automatic);

}  // namespace gbts
