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

#include "gbts/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <mutex>
#include <thread>

#include "gbts/errors.hpp"

namespace gbts {

PhotonPattern PhotonPattern::overflow() {
  PhotonPattern p;
  p.overflow_ = true;
  return p;
}

std::string PhotonPattern::to_string() const {
  if (overflow_) return "#";
  std::string out;
  for (std::size_t j = 0; j < counts_.size(); ++j) {
    if (j) out += ' ';
    out += std::to_string(counts_[j]);
  }
  return out;
}

PhotonPattern PhotonPattern::parse(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
  if (line == "#") return overflow();
  std::vector<int> counts;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (line[pos] == ' ') {
      ++pos;
      continue;
    }
    int v = 0;
    const auto [end, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), v);
    if (ec != std::errc() || v < 0) {
      throw ParseError("photon pattern: bad count in '" + std::string(line) + "'");
    }
    counts.push_back(v);
    pos = static_cast<std::size_t>(end - line.data());
  }
  return PhotonPattern(std::move(counts));
}

void SamplerConfig::validate() const {
  if (c < 1) throw PreconditionError("sampler: threshold c must be at least 1");
}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  gen_.seed(seq);
}

double RandomStream::uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

std::size_t draw_outcome(std::span<const double> q, double u) {
  double cdf = 0.0;
  std::size_t last = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] <= 0.0) continue;
    cdf += q[i];
    last = i;
    if (u <= cdf) return i;
  }
  return last;  // only reachable through rounding in the running sum
}

namespace {

double factorial(int k) {
  double f = 1.0;
  for (int j = 2; j <= k; ++j) f *= j;
  return f;
}

ConditionalTable build_table(const InterleavedAdjacency& interleaved, double prefactor, std::span<const int> prefix,
                             double prior, const SamplerConfig& cfg) {
  if (!(prior > 0.0)) throw PreconditionError("conditional_dist: prior probability must be positive");
  std::vector<int> s(prefix.begin(), prefix.end());
  s.push_back(0);
  const std::vector<int> reps = interleaved_reps(s);
  const TailSweep sweep = lhaf_tail_sweep(interleaved.a, reps, 2, cfg.c, cfg.engine, interleaved.loops);

  double prefix_fact = 1.0;
  for (int v : prefix) prefix_fact *= factorial(v);

  ConditionalTable out;
  out.engine_calls = sweep.engine_calls;
  out.q.assign(static_cast<std::size_t>(cfg.c) + 2, 0.0);
  out.joint.assign(static_cast<std::size_t>(cfg.c) + 1, 0.0);
  double mass = 0.0;
  for (int x = 0; x <= cfg.c; ++x) {
    const cplx joint = prefactor * sweep.values[x] / (prefix_fact * factorial(x));
    const cplx q = joint / prior;
    if (!(std::abs(q.imag()) <= kImagTol) || !(q.real() >= -kNegativeMassTol)) {
      throw UnphysicalStateError("conditional_dist: outcome " + std::to_string(x) + " has mass (" +
                                 std::to_string(q.real()) + ", " + std::to_string(q.imag()) + ")");
    }
    out.joint[x] = std::max(joint.real(), 0.0);
    out.q[x] = std::max(q.real(), 0.0);
    mass += out.q[x];
  }
  const double rest = 1.0 - mass;
  if (rest < -kNegativeMassTol) {
    throw UnphysicalStateError("conditional_dist: outcomes up to c carry mass " + std::to_string(mass) +
                               " > 1");
  }
  out.q.back() = std::clamp(rest, 0.0, 1.0);
  const double total = mass + out.q.back();
  for (double& v : out.q) v /= total;
  return out;
}

}  // namespace

ConditionalTable conditional_dist(const GaussianState& st_k, std::span<const int> prefix, double prior,
                                  const SamplerConfig& cfg) {
  cfg.validate();
  if (prefix.size() + 1 != st_k.modes) {
    throw PreconditionError("conditional_dist: prefix must cover all but the last mode of the state");
  }
  const AdjacencyData adj = adjacency(st_k);
  return build_table(interleaved_adjacency(adj), adj.prefactor, prefix, prior, cfg);
}

GbtsSampler::GbtsSampler(const CircuitSpec& circuit, SamplerConfig cfg) : cfg_(cfg) {
  cfg_.validate();
  const GaussianState full = prepare_state(circuit);
  reduced_.reserve(full.modes);
  for (std::size_t k = 1; k <= full.modes; ++k) {
    const AdjacencyData adj = adjacency(reduce(full, k));
    reduced_.push_back({interleaved_adjacency(adj), adj.prefactor});
  }
}

ConditionalTable GbtsSampler::conditional(std::size_t k, std::span<const int> prefix, double prior) const {
  if (k < 1 || k > reduced_.size() || prefix.size() + 1 != k) {
    throw PreconditionError("GbtsSampler::conditional: need 1 <= k <= M and a prefix of length k - 1");
  }
  const Reduced& r = reduced_[k - 1];
  return build_table(r.interleaved, r.prefactor, prefix, prior, cfg_);
}

SampleResult GbtsSampler::sample(RandomStream& stream) const {
  SampleResult out;
  std::vector<int> counts;
  counts.reserve(reduced_.size());
  double prior = 1.0;
  const auto overflow = static_cast<std::size_t>(cfg_.c) + 1;
  for (std::size_t k = 1; k <= reduced_.size(); ++k) {
    const ConditionalTable table = conditional(k, counts, prior);
    out.engine_calls += table.engine_calls;
    const std::size_t x = draw_outcome(table.q, stream.uniform());
    if (x == overflow) {
      out.pattern = PhotonPattern::overflow();
      return out;
    }
    counts.push_back(static_cast<int>(x));
    prior = table.joint[x];
  }
  out.pattern = PhotonPattern(std::move(counts));
  return out;
}

SampleResult GbtsSampler::sample(std::uint64_t index) const {
  RandomStream stream(cfg_.seed, index);
  return sample(stream);
}

SampleResult gbts_sample(const CircuitSpec& circuit, const SamplerConfig& cfg, RandomStream& stream) {
  return GbtsSampler(circuit, cfg).sample(stream);
}

std::vector<SampleResult> batch_sample(const CircuitSpec& circuit, const SamplerConfig& cfg, std::size_t n,
                                       unsigned threads) {
  if (n == 0) throw PreconditionError("batch_sample: need at least one sample");
  const GbtsSampler sampler(circuit, cfg);
  std::vector<SampleResult> out(n);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = sampler.sample(i);
    return out;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        out[i] = sampler.sample(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace gbts
