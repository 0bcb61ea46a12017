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

#include "gbts/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gbts/errors.hpp"

namespace gbts {

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
    : n_(rows.size()), data_() {
  data_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) {
      throw PreconditionError("ComplexMatrix: initializer rows must form a square matrix");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

std::vector<cplx> ComplexMatrix::diag() const {
  std::vector<cplx> d(n_);
  for (std::size_t i = 0; i < n_; ++i) d[i] = (*this)(i, i);
  return d;
}

double ComplexMatrix::asymmetry() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
    }
  }
  return worst;
}

Permutation::Permutation(std::vector<std::size_t> order) : order_(std::move(order)) {
  std::vector<bool> seen(order_.size(), false);
  for (std::size_t v : order_) {
    if (v >= order_.size() || seen[v]) {
      throw PreconditionError("Permutation: index sequence is not a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return Permutation(std::move(order));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(order_.size());
  for (std::size_t i = 0; i < order_.size(); ++i) inv[order_[i]] = i;
  return Permutation(std::move(inv));
}

std::size_t bandwidth(const ComplexMatrix& a, double tol) {
  const std::size_t n = a.dim();
  std::size_t w = 0;
  for (std::size_t i = 0; i < n; ++i) {
    // Only entries farther out than the current w can raise it.
    for (std::size_t j = 0; j + w < i; ++j) {
      if (std::abs(a(i, j)) > tol) {
        w = i - j;
        break;
      }
    }
    for (std::size_t j = n; j-- > i + w + 1;) {
      if (std::abs(a(i, j)) > tol) {
        w = j - i;
        break;
      }
    }
  }
  return w;
}

Permutation interleave_perm(std::size_t k) {
  std::vector<std::size_t> order(2 * k);
  for (std::size_t j = 0; j < k; ++j) {
    order[2 * j] = j;
    order[2 * j + 1] = k + j;
  }
  return Permutation(std::move(order));
}

ComplexMatrix permute(const ComplexMatrix& a, const Permutation& p) {
  if (p.size() != a.dim()) {
    throw PreconditionError("permute: permutation size " + std::to_string(p.size()) +
                            " does not match matrix dimension " + std::to_string(a.dim()));
  }
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto src = a.row(p[i]);
    auto dst = out.row(i);
    for (std::size_t j = 0; j < n; ++j) dst[j] = src[p[j]];
  }
  return out;
}

void check_repetitions(std::span<const int> s, std::size_t n) {
  if (s.size() != n) {
    throw PreconditionError("repetition vector has length " + std::to_string(s.size()) +
                            ", expected " + std::to_string(n));
  }
  for (int v : s) {
    if (v < 0) throw PreconditionError("repetition vector entries must be non-negative");
  }
}

ComplexMatrix repeat_pattern(const ComplexMatrix& a, std::span<const int> s) {
  check_repetitions(s, a.dim());
  std::vector<std::size_t> source;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (int r = 0; r < s[i]; ++r) source.push_back(i);
  }
  const std::size_t m = source.size();
  ComplexMatrix out(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) out(i, j) = a(source[i], source[j]);
  }
  return out;
}

ComplexMatrix fdiag(const ComplexMatrix& a, std::span<const cplx> v) {
  if (v.size() != a.dim()) {
    throw PreconditionError("fdiag: diagonal vector has length " + std::to_string(v.size()) +
                            ", expected " + std::to_string(a.dim()));
  }
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < v.size(); ++i) out(i, i) = v[i];
  return out;
}

ComplexMatrix repeat_with_loops(const ComplexMatrix& a, std::span<const int> s, std::span<const cplx> v) {
  if (v.size() != a.dim()) {
    throw PreconditionError("repeat_with_loops: loop vector has length " + std::to_string(v.size()) +
                            ", expected " + std::to_string(a.dim()));
  }
  ComplexMatrix out = repeat_pattern(a, s);
  std::size_t k = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (int r = 0; r < s[i]; ++r, ++k) out(k, k) = v[i];
  }
  return out;
}

ComplexMatrix extract_principal(const ComplexMatrix& a, std::span<const std::size_t> idx) {
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] >= a.dim()) {
      throw PreconditionError("extract_principal: index " + std::to_string(idx[k]) +
                              " out of range for dimension " + std::to_string(a.dim()));
    }
    if (k > 0 && idx[k] <= idx[k - 1]) {
      throw PreconditionError("extract_principal: indices must be strictly increasing");
    }
  }
  ComplexMatrix out(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = a(idx[i], idx[j]);
  }
  return out;
}

}  // namespace gbts
