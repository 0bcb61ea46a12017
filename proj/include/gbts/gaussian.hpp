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
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "gbts/hafnian.hpp"
#include "gbts/matrix.hpp"

namespace gbts {

/// Probabilities whose imaginary part, negativity or excess over one stays
/// below this are treated as rounding noise.
inline constexpr double kImagTol = 1e-8;

/// Acts on (a_j, a_{j+1}) as [[cos t, -e^{-i p} sin t], [e^{i p} sin t, cos t]].
/// Modes are 0-based here; mode2 must equal mode1 + 1.
struct Beamsplitter {
  std::size_t mode1 = 0;
  std::size_t mode2 = 1;
  double theta = 0.0;
  double phi = 0.0;
};

/// a_j -> e^{i delta} a_j.
struct PhaseShift {
  std::size_t mode = 0;
  double delta = 0.0;
};

using Gate = std::variant<Beamsplitter, PhaseShift>;
using Layer = std::vector<Gate>;

/// Single-mode squeezing with <da^2> proportional to e^{i phase}.
struct Squeezer {
  double r = 0.0;
  double phase = 0.0;
};

/**
 * M modes prepared in displaced squeezed states, attenuated by a uniform
 * transmission eta, then sent through layers of local gates.
 *
 * The input of mode j has covariance moments n_j = eta sinh^2 r_j,
 * m_j = eta sinh(2 r_j) e^{i phase_j} / 2 and mean sqrt(eta) beta_j.
 */
struct CircuitSpec {
  std::size_t modes = 0;
  double eta = 1.0;
  std::vector<Squeezer> squeezing;
  std::vector<cplx> displacement;
  std::vector<Layer> layers;

  /// All modes in vacuum, no gates.
  static CircuitSpec vacuum(std::size_t modes);

  std::size_t depth() const noexcept { return layers.size(); }

  /// Throws PreconditionError on a malformed description: wrong vector
  /// lengths, eta outside (0, 1], negative or non-finite squeezing, gates out
  /// of range, non-adjacent beamsplitters, or gates sharing a mode in a layer.
  void validate() const;
};

/**
 * Mean vector and covariance in the ordering (a_1..a_M, a_1^+..a_M^+).
 *
 * States built by prepare_state() are stored in the complex-conjugate frame:
 * a circuit mapping a -> U a with <da^2> = m and <a> = beta is represented by
 * sigma = V T V^+ with V = diag(U*, U) and alpha = (U* conj(beta), U beta).
 * Photon-number statistics are unchanged by the conjugation.
 */
struct GaussianState {
  std::size_t modes = 0;
  std::vector<cplx> alpha;
  ComplexMatrix sigma;
};

/// Q = sigma + I/2, A = X (I - Q^{-1}) with X the block swap,
/// gamma^T = alpha^+ Q^{-1}, prefactor = exp(-alpha^+ Q^{-1} alpha / 2) / sqrt(det Q).
struct AdjacencyData {
  ComplexMatrix q;
  ComplexMatrix a;
  std::vector<cplx> gamma;
  double prefactor = 1.0;

  std::size_t modes() const noexcept { return a.dim() / 2; }
};

/// Product of the layer unitaries, last layer leftmost.
ComplexMatrix build_unitary(const CircuitSpec& c);

GaussianState prepare_state(const CircuitSpec& c);

/// Marginal state of the leading k modes (1 <= k <= M).
GaussianState reduce(const GaussianState& st, std::size_t k);

/// Throws UnphysicalStateError when Q is not positive definite.
AdjacencyData adjacency(const GaussianState& st);

/// Largest bandwidth among the four M x M blocks of a 2M x 2M matrix.
std::size_t block_bandwidth(const ComplexMatrix& a, double tol = kBandTol);

/// The (0,0) and (0,1) blocks of A built directly from the circuit:
/// B = U diag(lambda) U^T and C = U diag(mu) U^+ with
/// lambda = m / ((1+n)^2 - |m|^2) and mu = 1 - (1+n) / ((1+n)^2 - |m|^2).
std::pair<ComplexMatrix, ComplexMatrix> bc_blocks(const CircuitSpec& c);

/// fdiag(A_s, gamma_s) in block order: index j and M + j are both repeated
/// s_j times.
ComplexMatrix extended_adjacency(const AdjacencyData& adj, std::span<const int> s);
ComplexMatrix extended_adjacency(const GaussianState& st, std::span<const int> s);

/// A and gamma permuted by interleave_perm(M), so that modes occupy adjacent
/// index pairs. gamma is kept apart from the diagonal: when an index is
/// repeated, its copies carry loop weight gamma_i and join each other through
/// A_ii. The matching repetition vector is interleaved_reps().
struct InterleavedAdjacency {
  ComplexMatrix a;
  std::vector<cplx> loops;
};
InterleavedAdjacency interleaved_adjacency(const AdjacencyData& adj);
std::vector<int> interleaved_reps(std::span<const int> s);

/// Checks the imaginary part and range of a raw probability and clamps it to
/// [0, 1]. Throws UnphysicalStateError beyond kImagTol.
double finalize_probability(cplx p);

/// prefactor * lhaf(extended adjacency) / prod_j s_j!.
double prob(const AdjacencyData& adj, std::span<const int> s, Engine engine = Engine::automatic);
double prob(const GaussianState& st, std::span<const int> s, Engine engine = Engine::automatic);

}  // namespace gbts
