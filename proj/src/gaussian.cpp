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

#include <algorithm>
#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <Eigen/LU>
#include <cmath>
#include <string>

#include "gbts/errors.hpp"

namespace gbts {

namespace {

using EMatrix = Eigen::MatrixXcd;
using EVector = Eigen::VectorXcd;
using RowMajorMap = Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;

EMatrix to_eigen(const ComplexMatrix& a) {
  const auto n = static_cast<Eigen::Index>(a.dim());
  return RowMajorMap(a.data(), n, n);
}

ComplexMatrix from_eigen(const EMatrix& m) {
  const auto n = static_cast<std::size_t>(m.rows());
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  return out;
}

struct ModeMoments {
  double n;
  cplx m;
};

ModeMoments input_moments(const CircuitSpec& c, std::size_t j) {
  const double r = c.squeezing[j].r;
  const double sh = std::sinh(r);
  return {c.eta * sh * sh, 0.5 * c.eta * std::sinh(2 * r) * std::polar(1.0, c.squeezing[j].phase)};
}

std::string mode_str(std::size_t j) { return std::to_string(j); }

}  // namespace

CircuitSpec CircuitSpec::vacuum(std::size_t modes) {
  CircuitSpec c;
  c.modes = modes;
  c.squeezing.assign(modes, Squeezer{});
  c.displacement.assign(modes, cplx{});
  return c;
}

void CircuitSpec::validate() const {
  if (squeezing.size() != modes) {
    throw PreconditionError("circuit: expected " + std::to_string(modes) + " squeezing entries, got " +
                            std::to_string(squeezing.size()));
  }
  if (displacement.size() != modes) {
    throw PreconditionError("circuit: expected " + std::to_string(modes) +
                            " displacement entries, got " + std::to_string(displacement.size()));
  }
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw PreconditionError("circuit: eta must lie in (0, 1], got " + std::to_string(eta));
  }
  for (const auto& sq : squeezing) {
    if (!std::isfinite(sq.r) || !std::isfinite(sq.phase) || sq.r < 0.0) {
      throw PreconditionError("circuit: squeezing magnitudes must be finite and non-negative");
    }
  }
  for (const auto& b : displacement) {
    if (!std::isfinite(b.real()) || !std::isfinite(b.imag())) {
      throw PreconditionError("circuit: displacement must be finite");
    }
  }
  for (std::size_t l = 0; l < layers.size(); ++l) {
    std::vector<bool> used(modes, false);
    auto claim = [&](std::size_t j) {
      if (j >= modes) {
        throw PreconditionError("circuit: layer " + std::to_string(l) + " addresses mode " + mode_str(j) +
                                " outside " + std::to_string(modes) + " modes");
      }
      if (used[j]) {
        throw PreconditionError("circuit: layer " + std::to_string(l) + " uses mode " + mode_str(j) +
                                " more than once");
      }
      used[j] = true;
    };
    for (const Gate& g : layers[l]) {
      if (const auto* bs = std::get_if<Beamsplitter>(&g)) {
        if (bs->mode2 != bs->mode1 + 1) {
          throw PreconditionError("circuit: beamsplitter in layer " + std::to_string(l) +
                                  " must act on adjacent modes (j, j+1)");
        }
        if (!std::isfinite(bs->theta) || !std::isfinite(bs->phi)) {
          throw PreconditionError("circuit: beamsplitter angles must be finite");
        }
        claim(bs->mode1);
        claim(bs->mode2);
      } else {
        const auto& ph = std::get<PhaseShift>(g);
        if (!std::isfinite(ph.delta)) throw PreconditionError("circuit: phase must be finite");
        claim(ph.mode);
      }
    }
  }
}

ComplexMatrix build_unitary(const CircuitSpec& c) {
  c.validate();
  const auto m = static_cast<Eigen::Index>(c.modes);
  EMatrix u = EMatrix::Identity(m, m);
  for (const Layer& layer : c.layers) {
    // Left-multiplying by a layer only mixes the rows it touches.
    for (const Gate& g : layer) {
      if (const auto* bs = std::get_if<Beamsplitter>(&g)) {
        const auto j = static_cast<Eigen::Index>(bs->mode1);
        const double ct = std::cos(bs->theta);
        const double st = std::sin(bs->theta);
        const cplx t01 = -std::polar(st, -bs->phi);
        const cplx t10 = std::polar(st, bs->phi);
        const Eigen::RowVectorXcd r0 = u.row(j);
        const Eigen::RowVectorXcd r1 = u.row(j + 1);
        u.row(j) = ct * r0 + t01 * r1;
        u.row(j + 1) = t10 * r0 + ct * r1;
      } else {
        const auto& ph = std::get<PhaseShift>(g);
        u.row(static_cast<Eigen::Index>(ph.mode)) *= std::polar(1.0, ph.delta);
      }
    }
  }
  return from_eigen(u);
}

GaussianState prepare_state(const CircuitSpec& c) {
  const EMatrix u = to_eigen(build_unitary(c));
  const auto m = static_cast<Eigen::Index>(c.modes);

  EMatrix t = EMatrix::Zero(2 * m, 2 * m);
  for (Eigen::Index j = 0; j < m; ++j) {
    const auto mom = input_moments(c, static_cast<std::size_t>(j));
    t(j, j) = mom.n + 0.5;
    t(m + j, m + j) = mom.n + 0.5;
    t(j, m + j) = std::conj(mom.m);
    t(m + j, j) = mom.m;
  }
  EMatrix v = EMatrix::Zero(2 * m, 2 * m);
  v.topLeftCorner(m, m) = u.conjugate();
  v.bottomRightCorner(m, m) = u;
  const EMatrix sigma = v * t * v.adjoint();

  EVector beta(m);
  const double amp = std::sqrt(c.eta);
  for (Eigen::Index j = 0; j < m; ++j) beta(j) = amp * c.displacement[static_cast<std::size_t>(j)];
  const EVector out = u * beta;

  GaussianState st;
  st.modes = c.modes;
  st.sigma = from_eigen(sigma);
  st.alpha.resize(2 * c.modes);
  for (std::size_t j = 0; j < c.modes; ++j) {
    st.alpha[j] = std::conj(out(static_cast<Eigen::Index>(j)));
    st.alpha[c.modes + j] = out(static_cast<Eigen::Index>(j));
  }
  return st;
}

GaussianState reduce(const GaussianState& st, std::size_t k) {
  if (k < 1 || k > st.modes) {
    throw PreconditionError("reduce: k must lie in [1, " + std::to_string(st.modes) + "], got " +
                            std::to_string(k));
  }
  if (k == st.modes) return st;
  std::vector<std::size_t> keep;
  keep.reserve(2 * k);
  for (std::size_t j = 0; j < k; ++j) keep.push_back(j);
  for (std::size_t j = 0; j < k; ++j) keep.push_back(st.modes + j);
  GaussianState out;
  out.modes = k;
  out.sigma = extract_principal(st.sigma, keep);
  out.alpha.reserve(2 * k);
  for (std::size_t i : keep) out.alpha.push_back(st.alpha[i]);
  return out;
}

AdjacencyData adjacency(const GaussianState& st) {
  const auto m = static_cast<Eigen::Index>(st.modes);
  if (st.sigma.dim() != 2 * st.modes || st.alpha.size() != 2 * st.modes) {
    throw PreconditionError("adjacency: state dimensions are inconsistent");
  }
  const EMatrix q = to_eigen(st.sigma) + 0.5 * EMatrix::Identity(2 * m, 2 * m);

  // Q is Hermitian for a physical state; the Cholesky factorization doubles
  // as the positive-definiteness test.
  const double herm = (q - q.adjoint()).cwiseAbs().maxCoeff();
  if (!(herm <= kSymmetryTol)) {
    throw UnphysicalStateError("adjacency: Q is not Hermitian (deviation " + std::to_string(herm) + ")");
  }
  Eigen::LLT<EMatrix> llt(q);
  if (llt.info() != Eigen::Success) {
    throw UnphysicalStateError("adjacency: Q = sigma + I/2 is not positive definite");
  }

  const Eigen::PartialPivLU<EMatrix> lu(q);
  const EMatrix qinv = lu.solve(EMatrix::Identity(2 * m, 2 * m));
  const EMatrix diff = EMatrix::Identity(2 * m, 2 * m) - qinv;
  EMatrix a(2 * m, 2 * m);
  a.topRows(m) = diff.bottomRows(m);
  a.bottomRows(m) = diff.topRows(m);

  EVector alpha(2 * m);
  for (Eigen::Index i = 0; i < 2 * m; ++i) alpha(i) = st.alpha[static_cast<std::size_t>(i)];
  // gamma = Q^{-T} conj(alpha) = conj(Q^{-1} alpha) for Hermitian Q.
  const EVector x = lu.solve(alpha);
  const double quad = alpha.dot(x).real();
  const cplx det = lu.determinant();
  if (!(det.real() > 0.0)) throw UnphysicalStateError("adjacency: det Q is not positive");

  AdjacencyData out;
  out.q = from_eigen(q);
  out.a = from_eigen(a);
  out.gamma.resize(2 * st.modes);
  for (std::size_t i = 0; i < out.gamma.size(); ++i) out.gamma[i] = std::conj(x(static_cast<Eigen::Index>(i)));
  out.prefactor = std::exp(-0.5 * quad) / std::sqrt(det.real());
  return out;
}

std::size_t block_bandwidth(const ComplexMatrix& a, double tol) {
  const std::size_t m = a.dim() / 2;
  std::size_t w = 0;
  for (std::size_t bi = 0; bi < 2; ++bi) {
    for (std::size_t bj = 0; bj < 2; ++bj) {
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          const std::size_t d = i > j ? i - j : j - i;
          if (d > w && std::abs(a(bi * m + i, bj * m + j)) > tol) w = d;
        }
      }
    }
  }
  return w;
}

std::pair<ComplexMatrix, ComplexMatrix> bc_blocks(const CircuitSpec& c) {
  const EMatrix u = to_eigen(build_unitary(c));
  const auto m = static_cast<Eigen::Index>(c.modes);
  EVector lambda(m);
  EVector mu(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    const auto mom = input_moments(c, static_cast<std::size_t>(j));
    const double den = (1 + mom.n) * (1 + mom.n) - std::norm(mom.m);
    lambda(j) = mom.m / den;
    mu(j) = 1 - (1 + mom.n) / den;
  }
  const EMatrix b = u * lambda.asDiagonal() * u.transpose();
  const EMatrix cc = u * mu.asDiagonal() * u.adjoint();
  return {from_eigen(b), from_eigen(cc)};
}

ComplexMatrix extended_adjacency(const AdjacencyData& adj, std::span<const int> s) {
  const std::size_t m = adj.modes();
  check_repetitions(s, m);
  std::vector<int> reps(2 * m);
  for (std::size_t j = 0; j < m; ++j) reps[j] = reps[m + j] = s[j];
  std::vector<cplx> g;
  for (std::size_t i = 0; i < 2 * m; ++i) g.insert(g.end(), static_cast<std::size_t>(reps[i]), adj.gamma[i]);
  return fdiag(repeat_pattern(adj.a, reps), g);
}

ComplexMatrix extended_adjacency(const GaussianState& st, std::span<const int> s) {
  return extended_adjacency(adjacency(st), s);
}

InterleavedAdjacency interleaved_adjacency(const AdjacencyData& adj) {
  const Permutation perm = interleave_perm(adj.modes());
  InterleavedAdjacency out;
  out.a = permute(adj.a, perm);
  out.loops.resize(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) out.loops[i] = adj.gamma[perm[i]];
  return out;
}

std::vector<int> interleaved_reps(std::span<const int> s) {
  std::vector<int> out(2 * s.size());
  for (std::size_t j = 0; j < s.size(); ++j) out[2 * j] = out[2 * j + 1] = s[j];
  return out;
}

double finalize_probability(cplx p) {
  if (!(std::abs(p.imag()) <= kImagTol)) {
    throw UnphysicalStateError("probability has imaginary part " + std::to_string(p.imag()));
  }
  const double re = p.real();
  if (!(re >= -kImagTol && re <= 1.0 + kImagTol)) {
    throw UnphysicalStateError("probability " + std::to_string(re) + " lies outside [0, 1]");
  }
  return std::clamp(re, 0.0, 1.0);
}

double prob(const AdjacencyData& adj, std::span<const int> s, Engine engine) {
  check_repetitions(s, adj.modes());
  double sfact = 1.0;
  for (int v : s) {
    for (int k = 2; k <= v; ++k) sfact *= k;
  }
  const InterleavedAdjacency base = interleaved_adjacency(adj);
  const std::vector<int> reps = interleaved_reps(s);
  const cplx h = engine == Engine::automatic ? lhaf_auto(base.a, std::span<const int>(reps), base.loops)
                                             : lhaf(base.a, reps, engine, std::nullopt, base.loops);
  return finalize_probability(adj.prefactor * h / sfact);
}

double prob(const GaussianState& st, std::span<const int> s, Engine engine) {
  return prob(adjacency(st), s, engine);
}

}  // namespace gbts
