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


#include "gbts/hafnian.hpp"

#include <numeric>

#include "gbts/corpus.hpp"
#include "gbts/errors.hpp"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace gbts;
using gbts_test::rel_dev;

namespace {

ComplexMatrix five_by_five(double a, double b, double c, double d, double e, double f) {
  return ComplexMatrix{{0, a, 0, 0, 0}, {a, 0, b, 0, 0}, {0, b, c, d, 0}, {0, 0, d, 0, e}, {0, 0, 0, e, f}};
}

}  // namespace

TEST(hafnian, telephone_numbers) {
  const std::uint64_t expected[] = {1, 1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496};
  for (int k = 0; k <= 10; ++k) {
    ASSERT_EQ(telephone(k), expected[k]);
    ASSERT_EQ(t_poly(k, 1.0), cplx(static_cast<double>(expected[k])));
    ASSERT_EQ(lhaf_brute(ComplexMatrix(static_cast<std::size_t>(k), 1.0)),
              cplx(static_cast<double>(expected[k])));
  }
  ASSERT_THROW(telephone(-1), PreconditionError);
  ASSERT_THROW(telephone(kTelephoneMaxK + 1), PreconditionError);
}

TEST(hafnian, t_poly_matches_constant_matrix) {
  const cplx a(0.3, -0.7);
  for (int k = 0; k <= 9; ++k) {
    ASSERT_LT(rel_dev(t_poly(k, a), lhaf_brute(ComplexMatrix(static_cast<std::size_t>(k), a))), 1e-14);
  }
}

TEST(hafnian, block_lhaf_matches_brute) {
  const cplx g(0.4, 0.2), a(-0.6, 0.9);
  for (int k = 0; k <= 9; ++k) {
    ComplexMatrix m(static_cast<std::size_t>(k), a);
    for (int i = 0; i < k; ++i) m(i, i) = g;
    ASSERT_LT(rel_dev(block_lhaf(k, g, a), lhaf_brute(m)), 1e-14);
    ASSERT_LT(rel_dev(block_lhaf(k, a, a), t_poly(k, a)), 1e-14);
  }
  // Without loops only perfect matchings of the k-clique survive.
  ASSERT_EQ(block_lhaf(4, 0.0, 1.0), cplx(3));
  ASSERT_EQ(block_lhaf(5, 0.0, 1.0), cplx(0));
}

TEST(hafnian, small_cases) {
  ASSERT_EQ(lhaf_brute(ComplexMatrix()), cplx(1));
  ASSERT_EQ(lhaf_brute(ComplexMatrix{{cplx(2, 3)}}), cplx(2, 3));
  // a00 a11 + a01.
  ASSERT_EQ(lhaf_brute(ComplexMatrix{{2, 5}, {5, 3}}), cplx(11));
  ASSERT_EQ(lhaf_banded(ComplexMatrix{{2, 5}, {5, 3}}, 1), cplx(11));
  ASSERT_EQ(lhaf_banded(ComplexMatrix(), 0), cplx(1));
  // Diagonal matrix: product of the loops.
  const std::vector<cplx> d{2, 3, 5, 7};
  ASSERT_EQ(lhaf_banded(ComplexMatrix::diagonal(d), 0), cplx(210));
}

TEST(hafnian, five_by_five_all_engines) {
  const ComplexMatrix m = five_by_five(2, 3, 5, 7, 11, 13);
  ASSERT_EQ(lhaf_brute(m), cplx(292));
  ASSERT_EQ(lhaf_banded(m, 1), cplx(292));
  const std::vector<int> ones(5, 1);
  ASSERT_EQ(lhaf_banded_rep(m, 1, ones), cplx(292));
  for (Engine e : {Engine::automatic, Engine::brute, Engine::banded, Engine::banded_rep}) {
    ASSERT_EQ(lhaf(m, ones, e), cplx(292)) << engine_name(e);
  }
}

TEST(hafnian, five_by_five_symbolic) {
  // a c e + a d f, whatever the values.
  auto rng = gbts_test::test_rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    const auto v = gbts_test::random_vector(rng, 6);
    ComplexMatrix x{{0, v[0], 0, 0, 0},
                    {v[0], 0, v[1], 0, 0},
                    {0, v[1], v[2], v[3], 0},
                    {0, 0, v[3], 0, v[4]},
                    {0, 0, 0, v[4], v[5]}};
    const cplx want = v[0] * v[2] * v[4] + v[0] * v[3] * v[5];
    ASSERT_LT(rel_dev(lhaf_brute(x), want), 1e-14);
    ASSERT_LT(rel_dev(lhaf_banded(x, 1), want), 1e-14);
  }
}

TEST(hafnian, banded_matches_brute_every_width) {
  auto rng = gbts_test::test_rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const std::size_t w = static_cast<std::size_t>(trial / 12) % n;
    const ComplexMatrix a = random_banded_symmetric(rng, n, w);
    const cplx want = lhaf_brute(a);
    for (std::size_t wd = w; wd < n; ++wd) ASSERT_LT(rel_dev(lhaf_banded(a, wd), want), 1e-10) << n << " " << wd;
  }
}

TEST(hafnian, banded_table_entries) {
  auto rng = gbts_test::test_rng(12);
  const ComplexMatrix a = random_banded_symmetric(rng, 9, 2);
  const auto table = lhaf_banded_table(check_banded(a, 2));
  ASSERT_EQ(table.values.size(), std::size_t{1} << table.width);
  for (std::uint64_t key = 0; key < table.values.size(); ++key) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < table.first; ++i) idx.push_back(i);
    for (std::size_t j = 0; j < table.width; ++j) {
      if (key >> j & 1) idx.push_back(table.first + j);
    }
    ASSERT_LT(rel_dev(table.at(key), lhaf_brute(extract_principal(a, idx))), 1e-12);
  }
}

TEST(hafnian, banded_rejects_bad_input) {
  auto rng = gbts_test::test_rng(13);
  const ComplexMatrix a = random_banded_symmetric(rng, 6, 2);
  ASSERT_THROW(lhaf_banded(a, 1), PreconditionError);
  ComplexMatrix b = a;
  b(0, 1) += 1.0;
  ASSERT_THROW(lhaf_banded(b, 2), PreconditionError);
  ASSERT_THROW(lhaf_brute(b), PreconditionError);
  ASSERT_THROW(lhaf_brute(ComplexMatrix(kBruteMaxDim + 1)), PreconditionError);
}

TEST(hafnian, rep_matches_brute) {
  auto rng = gbts_test::test_rng(14);
  int checked = 0;
  while (checked < 150) {
    std::uniform_int_distribution<int> dn(1, 6);
    const auto n = static_cast<std::size_t>(dn(rng));
    std::uniform_int_distribution<std::size_t> dw(0, n - 1);
    const std::size_t w = dw(rng);
    const ComplexMatrix a = random_banded_symmetric(rng, n, w);
    const auto s = gbts_test::random_reps(rng, n, 0, 3);
    if (std::accumulate(s.begin(), s.end(), 0) > 14) continue;
    const cplx want = lhaf_brute(repeat_pattern(a, s));
    ASSERT_LT(rel_dev(lhaf_banded_rep(a, w, s), want), 1e-9);
    ASSERT_LT(rel_dev(lhaf_banded_rep(a, w, s, ConvolutionMethod::fft), want), 1e-9);
    ASSERT_LT(rel_dev(lhaf_banded_rep(a, w, s, ConvolutionMethod::direct), want), 1e-9);
    ++checked;
  }
}

TEST(hafnian, rep_with_loops_matches_brute) {
  auto rng = gbts_test::test_rng(15);
  int checked = 0;
  while (checked < 120) {
    std::uniform_int_distribution<int> dn(1, 6);
    const auto n = static_cast<std::size_t>(dn(rng));
    std::uniform_int_distribution<std::size_t> dw(0, n - 1);
    const std::size_t w = dw(rng);
    const ComplexMatrix a = random_banded_symmetric(rng, n, w);
    const auto g = gbts_test::random_vector(rng, n);
    const auto s = gbts_test::random_reps(rng, n, 0, 3);
    if (std::accumulate(s.begin(), s.end(), 0) > 14) continue;
    const cplx want = lhaf_brute(repeat_with_loops(a, s, g));
    ASSERT_LT(rel_dev(lhaf_banded_rep(a, w, s, ConvolutionMethod::automatic, g), want), 1e-9);
    for (Engine e : {Engine::automatic, Engine::brute, Engine::banded, Engine::banded_rep}) {
      ASSERT_LT(rel_dev(lhaf(a, s, e, std::nullopt, g), want), 1e-9) << engine_name(e);
    }
    ASSERT_LT(rel_dev(lhaf_auto(a, s, g), want), 1e-9);
    ++checked;
  }
}

TEST(hafnian, rep_edge_cases) {
  auto rng = gbts_test::test_rng(16);
  const ComplexMatrix a = random_banded_symmetric(rng, 4, 1);
  ASSERT_EQ(lhaf_banded_rep(a, 1, std::vector<int>{0, 0, 0, 0}), cplx(1));
  // s = 1 everywhere is the plain loop hafnian.
  ASSERT_LT(rel_dev(lhaf_banded_rep(a, 1, std::vector<int>(4, 1)), lhaf_brute(a)), 1e-13);
  // Zeros split the matrix into independent blocks.
  const std::vector<int> s{2, 0, 3, 1};
  ASSERT_LT(rel_dev(lhaf_banded_rep(a, 1, s), lhaf_brute(repeat_pattern(a, s))), 1e-12);
  ASSERT_THROW(lhaf_banded_rep(a, 1, std::vector<int>{1, 1}), PreconditionError);
  ASSERT_THROW(lhaf_banded_rep(a, 1, s, ConvolutionMethod::automatic, std::vector<cplx>(3)), PreconditionError);
  ASSERT_THROW(lhaf_banded_rep_table(check_banded(a, 1), s), PreconditionError);
}

TEST(hafnian, rep_scaled) {
  auto rng = gbts_test::test_rng(17);
  const ComplexMatrix a = random_banded_symmetric(rng, 5, 2);
  const std::vector<int> s{1, 3, 2, 0, 2};
  const double fact = 1 * 6 * 2 * 1 * 2;
  ASSERT_LT(rel_dev(lhaf_banded_rep_scaled(a, 2, s) * fact, lhaf_banded_rep(a, 2, s)), 1e-14);
}

TEST(hafnian, auto_dispatch) {
  auto rng = gbts_test::test_rng(18);
  const ComplexMatrix small = random_banded_symmetric(rng, 10, 3);
  ASSERT_LT(rel_dev(lhaf_auto(small), lhaf_brute(small)), 1e-12);
  // Beyond the brute limit the answer must agree with a block decomposition:
  // a matrix with bandwidth 0 is a product of its diagonal.
  std::vector<cplx> d(30, cplx(1.0, 0.1));
  const ComplexMatrix diag = ComplexMatrix::diagonal(d);
  ASSERT_LT(rel_dev(lhaf_auto(diag), std::pow(cplx(1.0, 0.1), 30)), 1e-12);
  const std::vector<int> s(30, 2);
  // Each doubled index contributes T_2(a) = a^2 + a.
  const cplx x(1.0, 0.1);
  ASSERT_LT(rel_dev(lhaf_auto(diag, s), std::pow(x * x + x, 30)), 1e-12);
  ASSERT_THROW(parse_engine("fast"), PreconditionError);
  ASSERT_EQ(parse_engine("banded-rep"), Engine::banded_rep);
  ASSERT_EQ(engine_name(Engine::automatic), "auto");
}

TEST(hafnian, tail_sweep_matches_direct) {
  auto rng = gbts_test::test_rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t modes = 1 + trial % 4;
    const std::size_t n = 2 * modes;
    const ComplexMatrix a = random_banded_symmetric(rng, n, 3 % n);
    const auto g = trial % 2 ? gbts_test::random_vector(rng, n) : std::vector<cplx>{};
    auto s = gbts_test::random_reps(rng, n, 0, 2);
    const int max_x = 1 + trial % 2;
    for (Engine e : {Engine::automatic, Engine::brute, Engine::banded, Engine::banded_rep}) {
      const TailSweep sweep = lhaf_tail_sweep(a, s, 2, max_x, e, g);
      ASSERT_EQ(sweep.values.size(), static_cast<std::size_t>(max_x) + 1);
      if (e != Engine::brute) ASSERT_EQ(sweep.engine_calls, 1u);
      for (int x = 0; x <= max_x; ++x) {
        auto sx = s;
        sx[n - 1] = sx[n - 2] = x;
        const ComplexMatrix expanded = g.empty() ? repeat_pattern(a, sx) : repeat_with_loops(a, sx, g);
        ASSERT_LT(rel_dev(sweep.values[x], lhaf_brute(expanded)), 1e-10) << engine_name(e) << " x=" << x;
      }
    }
  }
}

TEST(hafnian, tail_sweep_rejects_bad_input) {
  const ComplexMatrix a = ComplexMatrix::identity(4);
  const std::vector<int> s(4, 1);
  ASSERT_THROW(lhaf_tail_sweep(a, s, 0, 1, Engine::automatic), PreconditionError);
  ASSERT_THROW(lhaf_tail_sweep(a, s, 5, 1, Engine::automatic), PreconditionError);
  ASSERT_THROW(lhaf_tail_sweep(a, s, 2, -1, Engine::automatic), PreconditionError);
  const TailSweep zero = lhaf_tail_sweep(a, s, 2, 0, Engine::automatic);
  ASSERT_EQ(zero.values[0], cplx(1));
}
