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

#include "gbts/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "gbts/corpus.hpp"
#include "gbts/errors.hpp"
#include "gbts/gaussian.hpp"
#include "gbts/hafnian.hpp"
#include "gbts/matrix_io.hpp"

namespace gbts {

Suite parse_suite(std::string_view name) {
  if (name == "lemmas") return Suite::lemmas;
  if (name == "oracles") return Suite::oracles;
  if (name == "all") return Suite::all;
  throw PreconditionError("unknown suite '" + std::string(name) + "' (expected lemmas, oracles or all)");
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

std::string num(double x) { return format_real(x, 3); }
std::string num(std::size_t x) { return std::to_string(x); }

double rel_dev(cplx got, cplx want) { return std::abs(got - want) / (1.0 + std::abs(want)); }

std::size_t uniform_int(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

struct CircuitCase {
  CircuitSpec circuit;
  std::size_t depth;
};

std::vector<CircuitCase> lemma_corpus(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> eta(0.5, 1.0);
  std::vector<CircuitCase> out;
  for (int i = 0; i < 100; ++i) {
    const std::size_t m = uniform_int(rng, 2, 32);
    const std::size_t d = uniform_int(rng, 1, 6);
    CircuitOptions opt;
    opt.eta = i % 2 == 0 ? 1.0 : eta(rng);
    opt.max_r = 1.0;
    out.push_back({random_circuit(rng, m, d, opt), d});
  }
  return out;
}

void lemma_checks(std::uint64_t seed, VerifyReport& report) {
  const auto corpus = lemma_corpus(seed);

  {
    std::size_t violations = 0;
    std::size_t max_bw = 0;
    double max_unitarity = 0.0;
    for (const auto& cc : corpus) {
      const ComplexMatrix u = build_unitary(cc.circuit);
      const std::size_t bw = bandwidth(u, 1e-12);
      max_bw = std::max(max_bw, bw);
      if (bw > cc.depth) ++violations;
      const std::size_t m = u.dim();
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          cplx dot = 0.0;
          for (std::size_t r = 0; r < m; ++r) dot += std::conj(u(r, i)) * u(r, j);
          max_unitarity = std::max(max_unitarity, std::abs(dot - (i == j ? 1.0 : 0.0)));
        }
      }
    }
    report.checks.push_back({"unitary.bandwidth", violations == 0,
                             "bandwidth(U) > D in " + num(violations) + " of " + num(corpus.size()) +
                                 " circuits (max bandwidth " + num(max_bw) + ")"});
    report.checks.push_back({"unitary.unitarity", max_unitarity <= 1e-12,
                             "max |U^+U - I| = " + num(max_unitarity)});
  }

  {
    std::size_t violations = 0;
    std::size_t above_2d = 0;
    std::size_t reductions = 0;
    double max_ratio = 0.0;
    double max_asym = 0.0;
    for (const auto& cc : corpus) {
      const GaussianState st = prepare_state(cc.circuit);
      for (std::size_t k = 1; k <= st.modes; ++k) {
        const AdjacencyData adj = adjacency(reduce(st, k));
        const std::size_t bw = block_bandwidth(adj.a, 1e-10);
        ++reductions;
        if (bw > 4 * cc.depth) ++violations;
        if (bw > 2 * cc.depth) ++above_2d;
        max_ratio = std::max(max_ratio, static_cast<double>(bw) / static_cast<double>(cc.depth));
        max_asym = std::max(max_asym, adj.a.asymmetry());
      }
    }
    report.checks.push_back({"adjacency.block_bandwidth", violations == 0,
                             "block bandwidth > 4D in " + num(violations) + " of " + num(reductions) +
                                 " reduced states; > 2D in " + num(above_2d) + "; max bandwidth/D = " +
                                 num(max_ratio)});
    report.checks.push_back({"adjacency.symmetric", max_asym <= kSymmetryTol,
                             "max |A - A^T| = " + num(max_asym)});
  }

  {
    double max_dev = 0.0;
    double max_c_pure = 0.0;
    for (std::size_t i = 0; i < corpus.size(); i += 5) {
      const CircuitSpec& c = corpus[i].circuit;
      const AdjacencyData adj = adjacency(prepare_state(c));
      const auto [b, cb] = bc_blocks(c);
      const std::size_t m = c.modes;
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t s = 0; s < m; ++s) {
          max_dev = std::max(max_dev, std::abs(adj.a(r, s) - b(r, s)));
          max_dev = std::max(max_dev, std::abs(adj.a(r, m + s) - cb(r, s)));
          if (c.eta == 1.0) max_c_pure = std::max(max_c_pure, std::abs(adj.a(r, m + s)));
        }
      }
    }
    report.checks.push_back({"adjacency.bc_blocks", max_dev <= 1e-9,
                             "max deviation from U diag(lambda) U^T, U diag(mu) U^+ = " + num(max_dev)});
    report.checks.push_back({"adjacency.pure_c_block", max_c_pure <= 1e-10,
                             "max |C| for lossless circuits = " + num(max_c_pure)});
  }

  {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::size_t violations = 0;
    std::size_t cases = 0;
    long worst_excess = -1000;
    for (std::size_t k = 1; k <= 6; ++k) {
      for (std::size_t w = 0; w < k; ++w) {
        for (int rep = 0; rep < 20; ++rep) {
          const ComplexMatrix a = random_block_banded(rng, k, w);
          const std::size_t measured = block_bandwidth(a, 0.0);
          const std::size_t bw = bandwidth(permute(a, interleave_perm(k)), 0.0);
          ++cases;
          if (bw > 2 * measured + 1) ++violations;
          worst_excess = std::max(worst_excess, static_cast<long>(bw) - 2 * static_cast<long>(measured));
        }
      }
    }
    report.checks.push_back({"interleave.bandwidth", violations == 0,
                             "bandwidth > 2w+1 in " + num(violations) + " of " + num(cases) +
                                 " block-banded matrices; max bandwidth - 2w = " + std::to_string(worst_excess)});
  }
}

void oracle_checks(std::uint64_t seed, VerifyReport& report) {
  std::mt19937_64 rng(seed);

  {
    bool ok = true;
    for (int k = 0; k <= 10; ++k) {
      const ComplexMatrix ones(static_cast<std::size_t>(k), cplx{1.0});
      const cplx h = lhaf_brute(ones);
      ok = ok && h == cplx(static_cast<double>(telephone(k))) && t_poly(k, 1.0) == h;
    }
    report.checks.push_back({"lhaf.telephone", ok, "lhaf_brute(ones(k)) = t_poly(k, 1) = telephone(k), k <= 10"});
  }

  {
    const ComplexMatrix a{{0, 2, 0, 0, 0}, {2, 0, 3, 0, 0}, {0, 3, 5, 7, 0}, {0, 0, 7, 0, 11}, {0, 0, 0, 11, 13}};
    const std::vector<int> ones(5, 1);
    const cplx brute = lhaf_brute(a);
    const cplx banded = lhaf_banded(a, 1);
    const cplx rep = lhaf_banded_rep(a, 1, ones);
    const bool ok = brute == 292.0 && banded == 292.0 && rep == 292.0;
    report.checks.push_back({"lhaf.five_by_five", ok,
                             "brute " + num(brute.real()) + ", banded " + num(banded.real()) + ", banded-rep " +
                                 num(rep.real())});
  }

  {
    double worst = 0.0;
    std::size_t evaluations = 0;
    for (int i = 0; i < 200; ++i) {
      const std::size_t n = uniform_int(rng, 1, 12);
      const std::size_t w0 = uniform_int(rng, 0, n - 1);
      const ComplexMatrix a = random_banded_symmetric(rng, n, w0);
      const cplx want = lhaf_brute(a);
      for (std::size_t w = bandwidth(a); w < n; ++w) {
        worst = std::max(worst, rel_dev(lhaf_banded(a, w), want));
        ++evaluations;
      }
    }
    report.checks.push_back({"lhaf.banded_vs_brute", worst <= 1e-10,
                             "max relative deviation " + num(worst) + " over " + num(evaluations) +
                                 " (matrix, w) pairs"});
  }

  {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const std::size_t n = uniform_int(rng, 1, 6);
      const std::size_t w0 = uniform_int(rng, 0, n - 1);
      const ComplexMatrix a = random_banded_symmetric(rng, n, w0);
      std::vector<int> s(n);
      for (int& v : s) v = static_cast<int>(uniform_int(rng, 0, 3));
      const cplx want = lhaf_brute(repeat_pattern(a, s));
      worst = std::max(worst, rel_dev(lhaf_banded_rep(a, bandwidth(a), s), want));
    }
    report.checks.push_back({"lhaf.rep_vs_brute", worst <= 1e-9,
                             "max relative deviation " + num(worst) + " over 200 repetition patterns"});
  }

  {
    // Tail sweeps against separate brute evaluations, with and without loop
    // weights.
    double worst = 0.0;
    std::size_t sweeps = 0;
    for (int i = 0; i < 60; ++i) {
      const std::size_t n = 2 * uniform_int(rng, 1, 4);
      const ComplexMatrix a = random_banded_symmetric(rng, n, uniform_int(rng, 0, std::min<std::size_t>(3, n - 1)));
      std::vector<cplx> loops;
      if (i % 2) {
        for (std::size_t j = 0; j < n; ++j) loops.push_back(random_complex(rng));
      }
      std::vector<int> s(n);
      for (int& v : s) v = static_cast<int>(uniform_int(rng, 0, 2));
      const int max_x = static_cast<int>(uniform_int(rng, 1, 2));
      for (Engine e : {Engine::banded, Engine::banded_rep}) {
        const TailSweep sweep = lhaf_tail_sweep(a, s, 2, max_x, e, loops);
        ++sweeps;
        for (int x = 0; x <= max_x; ++x) {
          std::vector<int> sx = s;
          sx[n - 1] = sx[n - 2] = x;
          const ComplexMatrix ex = loops.empty() ? repeat_pattern(a, sx) : repeat_with_loops(a, sx, loops);
          worst = std::max(worst, rel_dev(sweep.values[x], lhaf_brute(ex)));
        }
      }
    }
    report.checks.push_back({"lhaf.tail_sweep", worst <= 1e-9,
                             "max relative deviation " + num(worst) + " over " + num(sweeps) + " sweeps"});
  }

  {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const std::size_t rank = uniform_int(rng, 1, 4);
      std::vector<int> bounds(rank);
      for (int& b : bounds) b = static_cast<int>(uniform_int(rng, 0, 4));
      SubhafnianTableRep x(0, bounds);
      SubhafnianTableRep y(0, bounds);
      for (std::size_t j = 0; j < x.size(); ++j) {
        x[j] = random_complex(rng);
        y[j] = random_complex(rng);
      }
      const auto direct = convolve(x, y, ConvolutionMethod::direct);
      const auto fft = convolve(x, y, ConvolutionMethod::fft);
      for (std::size_t j = 0; j < direct.size(); ++j) worst = std::max(worst, rel_dev(fft[j], direct[j]));
    }
    report.checks.push_back({"convolve.fft_vs_direct", worst <= 1e-10,
                             "max relative deviation " + num(worst) + " over 50 table pairs"});
  }

  {
    double worst = 0.0;
    double worst_odd = 0.0;
    for (double r : {0.2, 0.5, 1.0}) {
      CircuitSpec c = CircuitSpec::vacuum(1);
      c.squeezing[0].r = r;
      const AdjacencyData adj = adjacency(prepare_state(c));
      const double ch = std::cosh(r);
      const double th = std::tanh(r);
      worst = std::max(worst, std::abs(prob(adj, std::vector<int>{0}) - 1.0 / ch));
      worst = std::max(worst, std::abs(prob(adj, std::vector<int>{2}) - th * th / (2.0 * ch)));
      for (int n : {1, 3, 5}) worst_odd = std::max(worst_odd, prob(adj, std::vector<int>{n}));
    }
    report.checks.push_back({"prob.squeezed_vacuum", worst <= 1e-10 && worst_odd <= 1e-12,
                             "max |p - closed form| = " + num(worst) + " for n = 0, 2; max odd p = " +
                                 num(worst_odd)});
  }

  {
    double worst = 0.0;
    for (double amp : {0.3, 1.0, 1.5}) {
      CircuitSpec c = CircuitSpec::vacuum(1);
      c.displacement[0] = std::polar(amp, 0.7);
      const AdjacencyData adj = adjacency(prepare_state(c));
      double poisson = std::exp(-amp * amp);
      for (int n = 0; n <= 6; ++n) {
        if (n > 0) poisson *= amp * amp / n;
        worst = std::max(worst, std::abs(prob(adj, std::vector<int>{n}) - poisson));
      }
    }
    report.checks.push_back({"prob.coherent", worst <= 1e-10, "max |p - Poisson| = " + num(worst)});
  }

  {
    double worst = 0.0;
    std::size_t patterns = 0;
    for (int i = 0; i < 12; ++i) {
      const std::size_t m = uniform_int(rng, 1, 3);
      CircuitOptions opt;
      opt.eta = 0.8;
      opt.max_r = 0.8;
      opt.max_displacement = 0.5;
      const AdjacencyData adj = adjacency(prepare_state(random_circuit(rng, m, 2, opt)));
      std::vector<int> s(m, 0);
      // Every pattern with total count <= 6.
      while (true) {
        if (std::accumulate(s.begin(), s.end(), 0) <= 6) {
          const double want = prob(adj, s, Engine::brute);
          const double got = prob(adj, s, Engine::banded_rep);
          worst = std::max(worst, std::abs(got - want) / std::max(want, 1e-14));
          ++patterns;
        }
        std::size_t j = 0;
        while (j < m && ++s[j] > 6) s[j++] = 0;
        if (j == m) break;
      }
    }
    report.checks.push_back({"prob.engines", worst <= 1e-9,
                             "max relative deviation banded-rep vs brute " + num(worst) + " over " + num(patterns) +
                                 " patterns"});
  }
}

}  // namespace

VerifyReport run_verify(Suite suite, std::uint64_t seed) {
  VerifyReport report;
  if (suite == Suite::lemmas || suite == Suite::all) lemma_checks(seed, report);
  if (suite == Suite::oracles || suite == Suite::all) oracle_checks(seed, report);
  return report;
}

}  // namespace gbts
