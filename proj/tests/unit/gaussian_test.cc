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


#include "gbts/gaussian.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "gbts/circuit_io.hpp"
#include "gbts/corpus.hpp"
#include "gbts/errors.hpp"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace gbts;

namespace {

double fact(int k) { return std::tgamma(k + 1.0); }

CircuitSpec single_mode(double r, double phase, cplx beta, double eta = 1.0) {
  CircuitSpec c = CircuitSpec::vacuum(1);
  c.squeezing[0] = {r, phase};
  c.displacement[0] = beta;
  c.eta = eta;
  return c;
}

double prob1(const CircuitSpec& c, int n, Engine e = Engine::automatic) {
  const std::vector<int> s{n};
  return prob(prepare_state(c), s, e);
}

// Calls f on every pattern of `modes` entries with total at most `budget`.
void for_each_pattern(std::size_t modes, int budget, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> s(modes, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t j, int left) {
    if (j == modes) {
      f(s);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      s[j] = v;
      rec(j + 1, left - v);
    }
    s[j] = 0;
  };
  rec(0, budget);
}

}  // namespace

TEST(gaussian, unitary_of_simple_circuits) {
  CircuitSpec c = CircuitSpec::vacuum(3);
  ASSERT_EQ(build_unitary(c), ComplexMatrix::identity(3));
  const double t = 0.3, p = 0.7;
  c.layers.push_back({Beamsplitter{1, 2, t, p}, PhaseShift{0, 0.4}});
  const ComplexMatrix u = build_unitary(c);
  const cplx i(0, 1);
  ASSERT_LT(std::abs(u(0, 0) - std::exp(i * 0.4)), 1e-15);
  ASSERT_LT(std::abs(u(1, 1) - std::cos(t)), 1e-15);
  ASSERT_LT(std::abs(u(1, 2) + std::exp(-i * p) * std::sin(t)), 1e-15);
  ASSERT_LT(std::abs(u(2, 1) - std::exp(i * p) * std::sin(t)), 1e-15);
  ASSERT_EQ(u(0, 1), cplx(0));
}

TEST(gaussian, unitary_is_unitary_and_banded) {
  auto rng = gbts_test::test_rng(40);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 2 + trial % 15;
    const std::size_t d = 1 + trial % 6;
    const ComplexMatrix u = build_unitary(random_circuit(rng, m, d));
    ASSERT_LE(bandwidth(u, 1e-12), d);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        cplx dot = 0;
        for (std::size_t k = 0; k < m; ++k) dot += std::conj(u(k, i)) * u(k, j);
        ASSERT_LT(std::abs(dot - (i == j ? 1.0 : 0.0)), 1e-13);
      }
    }
  }
}

TEST(gaussian, validate_rejects_malformed_circuits) {
  CircuitSpec c = CircuitSpec::vacuum(3);
  c.eta = 0.0;
  ASSERT_THROW(c.validate(), PreconditionError);
  c.eta = 1.5;
  ASSERT_THROW(c.validate(), PreconditionError);
  c = CircuitSpec::vacuum(3);
  c.squeezing[1].r = -0.1;
  ASSERT_THROW(c.validate(), PreconditionError);
  c = CircuitSpec::vacuum(3);
  c.squeezing.pop_back();
  ASSERT_THROW(c.validate(), PreconditionError);
  c = CircuitSpec::vacuum(3);
  c.layers.push_back({Beamsplitter{0, 2, 0.1, 0.0}});
  ASSERT_THROW(c.validate(), PreconditionError);
  c.layers = {{Beamsplitter{0, 1, 0.1, 0.0}, PhaseShift{1, 0.2}}};
  ASSERT_THROW(c.validate(), PreconditionError);
  c.layers = {{PhaseShift{3, 0.2}}};
  ASSERT_THROW(c.validate(), PreconditionError);
  c.layers = {{Beamsplitter{1, 2, NAN, 0.0}}};
  ASSERT_THROW(c.validate(), PreconditionError);
}

TEST(gaussian, vacuum_state) {
  const GaussianState st = prepare_state(CircuitSpec::vacuum(3));
  const AdjacencyData adj = adjacency(st);
  ASSERT_EQ(adj.prefactor, 1.0);
  for (std::size_t i = 0; i < 6; ++i) {
    ASSERT_LT(std::abs(adj.gamma[i]), 1e-15);
    for (std::size_t j = 0; j < 6; ++j) ASSERT_LT(std::abs(adj.a(i, j)), 1e-15);
  }
  ASSERT_EQ(prob(st, std::vector<int>{0, 0, 0}), 1.0);
  ASSERT_EQ(prob(st, std::vector<int>{0, 1, 0}), 0.0);
}

TEST(gaussian, squeezed_vacuum_analytics) {
  for (double r : {0.2, 0.5, 1.0}) {
    const CircuitSpec c = single_mode(r, 0.3, 0.0);
    ASSERT_NEAR(prob1(c, 0), 1 / std::cosh(r), 1e-10);
    ASSERT_NEAR(prob1(c, 2), std::pow(std::tanh(r), 2) / (2 * std::cosh(r)), 1e-10);
    for (int n = 0; n <= 5; ++n) {
      const double want = fact(2 * n) / (std::pow(4.0, n) * fact(n) * fact(n)) * std::pow(std::tanh(r), 2 * n) /
                          std::cosh(r);
      ASSERT_NEAR(prob1(c, 2 * n), want, 1e-10) << r << " " << n;
      ASSERT_NEAR(prob1(c, 2 * n + 1), 0.0, 1e-12);
    }
  }
}

TEST(gaussian, coherent_state_is_poisson) {
  for (cplx beta : {cplx(0.3, 0), cplx(1.0, -0.5), cplx(0, 1.5), cplx(-1.06, 1.06)}) {
    for (double eta : {1.0, 0.6}) {
      const double mean = eta * std::norm(beta);
      for (int n = 0; n <= 6; ++n) {
        const double want = std::exp(-mean) * std::pow(mean, n) / fact(n);
        for (Engine e : {Engine::automatic, Engine::brute, Engine::banded, Engine::banded_rep}) {
          ASSERT_NEAR(prob1(single_mode(0.0, 0.0, beta, eta), n, e), want, 1e-10) << beta << " " << n;
        }
      }
    }
  }
}

TEST(gaussian, lossy_squeezed_vacuum_probability) {
  // A thermal-squeezed state with moments n, m has p(0) = 1 / sqrt((1+n)^2 - |m|^2).
  for (double eta : {0.3, 0.8}) {
    const double r = 0.7;
    const double n = eta * std::sinh(r) * std::sinh(r);
    const double m = 0.5 * eta * std::sinh(2 * r);
    ASSERT_NEAR(prob1(single_mode(r, 1.1, 0.0, eta), 0), 1 / std::sqrt((1 + n) * (1 + n) - m * m), 1e-12);
    // Loss breaks parity: odd counts appear.
    ASSERT_GT(prob1(single_mode(r, 1.1, 0.0, eta), 1), 1e-3);
  }
}

TEST(gaussian, two_mode_squeezed_fixture) {
  const CircuitSpec c = read_circuit_file(std::string(GBTS_FIXTURES) + "/beamsplitter_pair.json");
  const GaussianState st = prepare_state(c);
  const double r = 0.5;
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      const double want = a == b ? std::pow(std::tanh(r), 2 * a) / std::pow(std::cosh(r), 2) : 0.0;
      ASSERT_NEAR(prob(st, std::vector<int>{a, b}), want, 1e-12) << a << " " << b;
    }
  }
}

TEST(gaussian, normalization_and_marginals) {
  auto rng = gbts_test::test_rng(41);
  CircuitOptions opt;
  opt.max_r = 0.3;
  opt.max_displacement = 0.3;
  opt.eta = 0.9;
  const CircuitSpec c = random_circuit(rng, 3, 2, opt);
  const GaussianState st = prepare_state(c);
  double total = 0.0;
  for_each_pattern(3, 10, [&](const std::vector<int>& s) { total += prob(st, s); });
  ASSERT_LE(total, 1.0 + 1e-12);
  ASSERT_GT(total, 1.0 - 1e-5);

  // Summing out the last mode gives the reduced state's probability.
  const GaussianState st2 = reduce(st, 2);
  for_each_pattern(2, 3, [&](const std::vector<int>& s) {
    double marginal = 0.0;
    for (int x = 0; x <= 12; ++x) marginal += prob(st, std::vector<int>{s[0], s[1], x});
    ASSERT_NEAR(marginal, prob(st2, s), 1e-6);
  });
  ASSERT_THROW(reduce(st, 0), PreconditionError);
  ASSERT_THROW(reduce(st, 4), PreconditionError);
}

TEST(gaussian, engines_agree) {
  const CircuitSpec c = read_circuit_file(std::string(GBTS_FIXTURES) + "/lossy_chain.json");
  const AdjacencyData adj = adjacency(prepare_state(c));
  for_each_pattern(4, 5, [&](const std::vector<int>& s) {
    const double want = prob(adj, s, Engine::brute);
    for (Engine e : {Engine::automatic, Engine::banded, Engine::banded_rep}) {
      ASSERT_NEAR(prob(adj, s, e), want, 1e-13 * (1 + want));
    }
  });
}

TEST(gaussian, extended_adjacency_matches_prob) {
  const CircuitSpec c = read_circuit_file(std::string(GBTS_FIXTURES) + "/lossy_chain.json");
  const AdjacencyData adj = adjacency(prepare_state(c));
  const std::vector<int> s{1, 0, 2, 1};
  const ComplexMatrix ext = extended_adjacency(adj, s);
  ASSERT_EQ(ext.dim(), 8u);
  const cplx h = lhaf_brute(ext);
  ASSERT_NEAR(adj.prefactor * h.real() / 2.0, prob(adj, s), 1e-14);
  ASSERT_NEAR(h.imag(), 0.0, 1e-12);
}

TEST(gaussian, adjacency_structure) {
  auto rng = gbts_test::test_rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = 2 + trial % 10;
    const std::size_t d = 1 + trial % 3;
    CircuitOptions opt;
    opt.eta = trial % 2 ? 1.0 : 0.7;
    opt.max_displacement = 0.5;
    const CircuitSpec c = random_circuit(rng, m, d, opt);
    const GaussianState st = prepare_state(c);
    const AdjacencyData adj = adjacency(st);
    ASSERT_LT(adj.a.asymmetry(), 1e-12);
    ASSERT_LE(block_bandwidth(adj.a, 1e-10), 4 * d);
    const auto [b, cc] = bc_blocks(c);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        ASSERT_LT(std::abs(adj.a(i, j) - b(i, j)), 1e-12);
        ASSERT_LT(std::abs(adj.a(i, m + j) - cc(i, j)), 1e-12);
        if (opt.eta == 1.0) ASSERT_LT(std::abs(cc(i, j)), 1e-12);
      }
    }
    for (std::size_t k = 1; k <= m; ++k) {
      const AdjacencyData ak = adjacency(reduce(st, k));
      ASSERT_LE(bandwidth(interleaved_adjacency(ak).a, 1e-10), 2 * block_bandwidth(ak.a, 1e-10) + 1);
    }
  }
}

TEST(gaussian, interleaving) {
  const CircuitSpec c = read_circuit_file(std::string(GBTS_FIXTURES) + "/lossy_chain.json");
  const AdjacencyData adj = adjacency(prepare_state(c));
  const InterleavedAdjacency il = interleaved_adjacency(adj);
  ASSERT_EQ(il.loops[1], adj.gamma[4]);
  ASSERT_EQ(il.a(1, 2), adj.a(4, 1));
  ASSERT_EQ(interleaved_reps(std::vector<int>{2, 0, 1}), (std::vector<int>{2, 2, 0, 0, 1, 1}));
}

TEST(gaussian, unphysical_inputs) {
  ASSERT_EQ(finalize_probability({-1e-10, 1e-10}), 0.0);
  ASSERT_EQ(finalize_probability({1 + 1e-10, 0}), 1.0);
  ASSERT_THROW(finalize_probability({0.5, 1e-6}), UnphysicalStateError);
  ASSERT_THROW(finalize_probability({-1e-6, 0}), UnphysicalStateError);
  ASSERT_THROW(finalize_probability({1.01, 0}), UnphysicalStateError);

  GaussianState bad;
  bad.modes = 1;
  bad.alpha = {0, 0};
  bad.sigma = ComplexMatrix{{-0.9, 0}, {0, -0.9}};
  ASSERT_THROW(adjacency(bad), UnphysicalStateError);
  bad.sigma = ComplexMatrix{{0.5, 1}, {0, 0.5}};
  ASSERT_THROW(adjacency(bad), UnphysicalStateError);
  bad.sigma = ComplexMatrix(3);
  ASSERT_THROW(adjacency(bad), PreconditionError);
}
