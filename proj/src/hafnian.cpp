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
#include <cmath>
#include <numeric>
#include <string>

#include "gbts/errors.hpp"
#include "gbts/hafnian.hpp"

namespace gbts {

std::string_view engine_name(Engine e) {
  switch (e) {
    case Engine::automatic:
      return "auto";
    case Engine::brute:
      return "brute";
    case Engine::banded:
      return "banded";
    case Engine::banded_rep:
      return "banded-rep";
  }
  return "auto";
}

Engine parse_engine(std::string_view name) {
  if (name == "auto") return Engine::automatic;
  if (name == "brute") return Engine::brute;
  if (name == "banded") return Engine::banded;
  if (name == "banded-rep" || name == "banded_rep") return Engine::banded_rep;
  throw PreconditionError("unknown engine '" + std::string(name) +
                          "' (expected auto, brute, banded or banded-rep)");
}

namespace {

struct Compacted {
  ComplexMatrix matrix;
  std::vector<int> reps;
  std::vector<cplx> loops;  // empty: the diagonal
};

Compacted drop_zero_repetitions(const ComplexMatrix& a, std::span<const int> s,
                                std::span<const cplx> loops = {}) {
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
  if (keep.size() == a.dim()) return {a, std::move(reps), std::move(kept_loops)};
  return {extract_principal(a, keep), std::move(reps), std::move(kept_loops)};
}

void check_loops(std::span<const cplx> loops, std::size_t n) {
  if (!loops.empty() && loops.size() != n) {
    throw PreconditionError("lhaf: loop vector has length " + std::to_string(loops.size()) + ", expected " +
                            std::to_string(n));
  }
}

// Expanded matrix whose diagonal carries the loop weights.
ComplexMatrix expand(const ComplexMatrix& a, std::span<const int> s, std::span<const cplx> loops) {
  return loops.empty() ? repeat_pattern(a, s) : repeat_with_loops(a, s, loops);
}

double factorial(int k) {
  double f = 1.0;
  for (int j = 2; j <= k; ++j) f *= j;
  return f;
}

}  // namespace

cplx lhaf_auto(const ComplexMatrix& a, std::optional<std::span<const int>> s, std::span<const cplx> loops) {
  if (!a.is_symmetric()) throw PreconditionError("lhaf_auto: matrix is not symmetric");
  check_loops(loops, a.dim());
  if (!s) {
    if (loops.empty()) {
      if (a.dim() <= kAutoBruteMaxDim) return lhaf_brute(a);
      return lhaf_banded(a, bandwidth(a));
    }
    const std::vector<int> ones(a.dim(), 1);
    return lhaf_auto(a, ones, loops);
  }
  check_repetitions(*s, a.dim());
  const auto expanded_dim = static_cast<std::size_t>(std::accumulate(s->begin(), s->end(), 0L));
  if (expanded_dim <= kAutoBruteMaxDim) return lhaf_brute(expand(a, *s, loops));
  Compacted c = drop_zero_repetitions(a, *s, loops);
  const bool all_ones = std::all_of(c.reps.begin(), c.reps.end(), [](int v) { return v == 1; });
  const std::size_t w = bandwidth(c.matrix);
  if (all_ones) return lhaf_banded(expand(c.matrix, c.reps, c.loops), w);
  return lhaf_banded_rep(c.matrix, w, c.reps, ConvolutionMethod::automatic, c.loops);
}

cplx lhaf(const ComplexMatrix& a, std::span<const int> s, Engine engine,
          std::optional<std::size_t> w, std::span<const cplx> loops) {
  check_repetitions(s, a.dim());
  check_loops(loops, a.dim());
  switch (engine) {
    case Engine::automatic:
      return lhaf_auto(a, s, loops);
    case Engine::brute:
      return lhaf_brute(expand(a, s, loops));
    case Engine::banded: {
      const ComplexMatrix expanded = expand(a, s, loops);
      return lhaf_banded(expanded, w.value_or(bandwidth(expanded)));
    }
    case Engine::banded_rep:
      return lhaf_banded_rep(a, w.value_or(bandwidth(a)), s, ConvolutionMethod::automatic, loops);
  }
  throw PreconditionError("lhaf: unknown engine");
}

TailSweep lhaf_tail_sweep(const ComplexMatrix& a, std::span<const int> s, std::size_t tail,
                          int max_x, Engine engine, std::span<const cplx> loops) {
  check_repetitions(s, a.dim());
  check_loops(loops, a.dim());
  if (tail == 0 || tail > a.dim()) {
    throw PreconditionError("lhaf_tail_sweep: tail must lie in [1, dim]");
  }
  if (max_x < 0) throw PreconditionError("lhaf_tail_sweep: max_x must be non-negative");
  if (!a.is_symmetric()) throw PreconditionError("lhaf_tail_sweep: matrix is not symmetric");

  const std::size_t lead = a.dim() - tail;
  std::vector<int> reps(s.begin(), s.end());
  TailSweep out;
  out.values.resize(static_cast<std::size_t>(max_x) + 1);

  if (engine == Engine::brute) {
    for (int x = 0; x <= max_x; ++x) {
      std::fill(reps.begin() + static_cast<std::ptrdiff_t>(lead), reps.end(), x);
      const ComplexMatrix expanded = expand(a, reps, loops);
      if (expanded.empty()) {
        out.values[x] = 1.0;
        continue;
      }
      out.values[x] = lhaf_brute(expanded);
      ++out.engine_calls;
    }
    return out;
  }

  // x = 0 alone: the tail is deleted.
  if (max_x == 0) {
    std::fill(reps.begin() + static_cast<std::ptrdiff_t>(lead), reps.end(), 0);
    Compacted c = drop_zero_repetitions(a, reps, loops);
    if (c.matrix.empty()) {
      out.values[0] = 1.0;
      return out;
    }
    out.values[0] = lhaf_banded_rep(c.matrix, bandwidth(c.matrix), c.reps, ConvolutionMethod::automatic, c.loops);
    out.engine_calls = 1;
    return out;
  }

  std::fill(reps.begin() + static_cast<std::ptrdiff_t>(lead), reps.end(), max_x);
  Compacted c = drop_zero_repetitions(a, reps, loops);
  if (engine == Engine::banded) {
    // Subset DP on the fully expanded matrix; each x keeps the first x copies
    // of every tail index and drops the rest.
    const ComplexMatrix expanded = expand(c.matrix, c.reps, c.loops);
    const std::size_t copies = tail * static_cast<std::size_t>(max_x);
    const std::size_t w = std::max(bandwidth(expanded), copies / 2);
    const auto table = lhaf_banded_table(check_banded(expanded, w));
    const std::size_t n = expanded.dim();
    const std::uint64_t full = (std::uint64_t{1} << table.width) - 1;
    for (int x = 0; x <= max_x; ++x) {
      std::uint64_t key = full;
      for (std::size_t q = 0; q < tail; ++q) {
        for (int r = x; r < max_x; ++r) {
          const std::size_t pos = n - copies + q * static_cast<std::size_t>(max_x) + r;
          key &= ~(std::uint64_t{1} << (pos - table.first));
        }
      }
      out.values[x] = table.at(key);
    }
    out.engine_calls = 1;
    return out;
  }

  // Repetition DP (also the automatic choice): one table, read at each x.
  const std::size_t w = std::max(bandwidth(c.matrix), tail / 2);
  const auto table = lhaf_banded_rep_table(check_banded(c.matrix, w), c.reps, ConvolutionMethod::automatic, c.loops);
  std::vector<int> digits(c.reps.begin() + static_cast<std::ptrdiff_t>(table.first()), c.reps.end());
  // Table entries carry 1 / s_i! for every index, including the saturated
  // ones that have left the window.
  double lead_fact = 1.0;
  for (std::size_t j = 0; j + tail < c.reps.size(); ++j) lead_fact *= factorial(c.reps[j]);
  for (int x = 0; x <= max_x; ++x) {
    std::fill(digits.end() - static_cast<std::ptrdiff_t>(tail), digits.end(), x);
    const double tail_fact = std::pow(factorial(x), static_cast<double>(tail));
    out.values[x] = table.at(digits) * lead_fact * tail_fact;
  }
  out.engine_calls = 1;
  return out;
}

}  // namespace gbts
