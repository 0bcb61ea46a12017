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

#include <fftw3.h>

#include <memory>
#include <mutex>
#include <string>

#include "gbts/errors.hpp"
#include "gbts/subhafnian_table.hpp"

namespace gbts {

SubhafnianTableRep::SubhafnianTableRep(std::size_t first, std::vector<int> bounds)
    : first_(first), bounds_(std::move(bounds)) {
  strides_.resize(bounds_.size() + 1);
  strides_[0] = 1;
  for (std::size_t j = 0; j < bounds_.size(); ++j) {
    if (bounds_[j] < 0) throw PreconditionError("SubhafnianTableRep: negative bound");
    strides_[j + 1] = strides_[j] * static_cast<std::size_t>(bounds_[j] + 1);
  }
  values_.assign(strides_.back(), cplx{});
}

std::size_t SubhafnianTableRep::linear_index(std::span<const int> digits) const {
  if (digits.size() != bounds_.size()) {
    throw PreconditionError("SubhafnianTableRep: multi-index has wrong rank");
  }
  std::size_t linear = 0;
  for (std::size_t j = 0; j < digits.size(); ++j) {
    if (digits[j] < 0 || digits[j] > bounds_[j]) {
      throw PreconditionError("SubhafnianTableRep: multi-index out of bounds");
    }
    linear += strides_[j] * static_cast<std::size_t>(digits[j]);
  }
  return linear;
}

std::vector<int> SubhafnianTableRep::digits(std::size_t linear) const {
  std::vector<int> d(bounds_.size());
  for (std::size_t j = 0; j < bounds_.size(); ++j) {
    d[j] = static_cast<int>(linear % static_cast<std::size_t>(bounds_[j] + 1));
    linear /= static_cast<std::size_t>(bounds_[j] + 1);
  }
  return d;
}

namespace {

SubhafnianTableRep convolve_direct(const SubhafnianTableRep& lhs, const SubhafnianTableRep& rhs) {
  SubhafnianTableRep out(lhs.first(), lhs.bounds());
  const std::size_t rank = lhs.rank();
  const auto& bounds = lhs.bounds();
  std::vector<int> d(rank, 0);   // digits of the lhs entry
  std::vector<int> e(rank, 0);   // digits of the rhs entry
  for (std::size_t a = 0; a < lhs.size(); ++a) {
    if (a > 0) {
      // increment the lhs odometer
      for (std::size_t j = 0; j < rank; ++j) {
        if (++d[j] <= bounds[j]) break;
        d[j] = 0;
      }
    }
    const cplx x = lhs[a];
    if (x == cplx{}) continue;
    // Walk every rhs multi-index e with d + e within bounds. Linear indices
    // add because both tables share strides.
    std::fill(e.begin(), e.end(), 0);
    std::size_t b = 0;
    while (true) {
      out[a + b] += x * rhs[b];
      std::size_t j = 0;
      for (; j < rank; ++j) {
        if (e[j] < bounds[j] - d[j]) {
          ++e[j];
          b += lhs.stride(j);
          break;
        }
        b -= lhs.stride(j) * static_cast<std::size_t>(e[j]);
        e[j] = 0;
      }
      if (j == rank) break;
    }
  }
  return out;
}

struct FftwFree {
  void operator()(fftw_complex* p) const noexcept { fftw_free(p); }
};
using FftwBuffer = std::unique_ptr<fftw_complex[], FftwFree>;

// The FFTW planner is not re-entrant; plan creation and destruction are
// serialized, execution on distinct arrays is thread-safe.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

class FftwPlan {
 public:
  FftwPlan(const std::vector<int>& dims, fftw_complex* buf, int sign) {
    std::lock_guard lock(planner_mutex());
    plan_ = fftw_plan_dft(static_cast<int>(dims.size()), dims.data(), buf, buf, sign,
                          FFTW_ESTIMATE);
  }
  ~FftwPlan() {
    std::lock_guard lock(planner_mutex());
    if (plan_ != nullptr) fftw_destroy_plan(plan_);
  }
  FftwPlan(const FftwPlan&) = delete;
  FftwPlan& operator=(const FftwPlan&) = delete;

  void execute(fftw_complex* buf) const { fftw_execute_dft(plan_, buf, buf); }

 private:
  fftw_plan plan_ = nullptr;
};

SubhafnianTableRep convolve_fft(const SubhafnianTableRep& lhs, const SubhafnianTableRep& rhs) {
  const std::size_t rank = lhs.rank();
  SubhafnianTableRep out(lhs.first(), lhs.bounds());
  if (rank == 0) {
    out[0] = lhs[0] * rhs[0];
    return out;
  }
  // FFTW is row-major (last dimension fastest); our axis 0 is fastest.
  std::vector<int> dims(rank);
  std::vector<std::size_t> padded_stride(rank + 1, 1);
  for (std::size_t j = 0; j < rank; ++j) {
    const int len = 2 * lhs.bounds()[j] + 2;
    dims[rank - 1 - j] = len;
    padded_stride[j + 1] = padded_stride[j] * static_cast<std::size_t>(len);
  }
  const std::size_t total = padded_stride[rank];

  FftwBuffer a(fftw_alloc_complex(total));
  FftwBuffer b(fftw_alloc_complex(total));
  if (!a || !b) throw Error("convolve: FFT buffer allocation failed");
  std::fill_n(reinterpret_cast<double*>(a.get()), 2 * total, 0.0);
  std::fill_n(reinterpret_cast<double*>(b.get()), 2 * total, 0.0);

  auto padded_index = [&](std::size_t linear) {
    std::size_t p = 0;
    for (std::size_t j = 0; j < rank; ++j) {
      const auto extent = static_cast<std::size_t>(lhs.bounds()[j] + 1);
      p += padded_stride[j] * (linear % extent);
      linear /= extent;
    }
    return p;
  };

  for (std::size_t i = 0; i < lhs.size(); ++i) {
    const std::size_t p = padded_index(i);
    a[p][0] = lhs[i].real();
    a[p][1] = lhs[i].imag();
    b[p][0] = rhs[i].real();
    b[p][1] = rhs[i].imag();
  }

  FftwPlan forward(dims, a.get(), FFTW_FORWARD);
  FftwPlan backward(dims, a.get(), FFTW_BACKWARD);
  forward.execute(a.get());
  forward.execute(b.get());
  for (std::size_t i = 0; i < total; ++i) {
    const cplx z = cplx(a[i][0], a[i][1]) * cplx(b[i][0], b[i][1]);
    a[i][0] = z.real();
    a[i][1] = z.imag();
  }
  backward.execute(a.get());

  const double scale = 1.0 / static_cast<double>(total);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::size_t p = padded_index(i);
    out[i] = cplx(a[p][0], a[p][1]) * scale;
  }
  return out;
}

}  // namespace

SubhafnianTableRep convolve(const SubhafnianTableRep& lhs, const SubhafnianTableRep& rhs,
                            ConvolutionMethod method) {
  if (!lhs.same_shape(rhs)) {
    throw PreconditionError("convolve: tables are indexed over different windows or bounds");
  }
  if (method == ConvolutionMethod::automatic) {
    method = lhs.size() <= kDirectConvolutionLimit ? ConvolutionMethod::direct
                                                   : ConvolutionMethod::fft;
  }
  return method == ConvolutionMethod::direct ? convolve_direct(lhs, rhs) : convolve_fft(lhs, rhs);
}

}  // namespace gbts
