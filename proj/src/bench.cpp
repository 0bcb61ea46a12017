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

#include "gbts/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <functional>
#include <memory>
#include <random>

#include "gbts/corpus.hpp"
#include "gbts/errors.hpp"
#include "gbts/matrix_io.hpp"
#include "gbts/sampler.hpp"

namespace gbts {

BenchKernel parse_kernel(std::string_view name) {
  if (name == "banded") return BenchKernel::banded;
  if (name == "banded-rep" || name == "banded_rep") return BenchKernel::banded_rep;
  if (name == "sampler") return BenchKernel::sampler;
  throw PreconditionError("unknown kernel '" + std::string(name) + "' (expected banded, banded-rep or sampler)");
}

namespace {

double parse_value(std::string_view s, std::string_view spec) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw PreconditionError("invalid sweep '" + std::string(spec) + "': bad number '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::size_t as_size(double v, const std::string& name) {
  if (!(v >= 0) || v != std::floor(v)) {
    throw PreconditionError("bench parameter " + name + " must be a non-negative integer");
  }
  return static_cast<std::size_t>(v);
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Length of one timed slice. Repetitions are built from slices taken in
// turn from every sweep point, so slow spells on the host (seconds long on
// shared VMs) hit all points alike.
constexpr double kSliceSeconds = 0.005;

/// Warms `kernel` up and returns how many calls fill `seconds`.
std::size_t calibrate(const std::function<void()>& kernel, int warmup, double seconds) {
  for (int i = 0; i < std::max(warmup, 1); ++i) kernel();
  std::size_t inner = 1;
  while (seconds > 0 && inner < (std::size_t{1} << 30)) {
    const auto start = Clock::now();
    for (std::size_t i = 0; i < inner; ++i) kernel();
    if (seconds_since(start) >= seconds) break;
    inner *= 2;
  }
  return inner;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

// Keeps the result observable so the kernel is not optimized away.
volatile double g_sink = 0.0;

}  // namespace

Sweep parse_sweep(std::string_view spec) {
  const std::size_t eq = spec.find('=');
  if (eq == std::string_view::npos || eq == 0 || eq + 1 == spec.size()) {
    throw PreconditionError("invalid sweep '" + std::string(spec) + "' (expected name=start:stop:step or name=v1,v2)");
  }
  Sweep sweep;
  sweep.parameter = std::string(spec.substr(0, eq));
  const std::string_view body = spec.substr(eq + 1);
  if (body.find(':') != std::string_view::npos) {
    const auto parts = split(body, ':');
    if (parts.size() != 3) throw PreconditionError("invalid sweep '" + std::string(spec) + "': range needs start:stop:step");
    const double start = parse_value(parts[0], spec);
    const double stop = parse_value(parts[1], spec);
    const double step = parse_value(parts[2], spec);
    if (!(step > 0) || stop < start) {
      throw PreconditionError("invalid sweep '" + std::string(spec) + "': need step > 0 and stop >= start");
    }
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    if (count > 10000) throw PreconditionError("invalid sweep '" + std::string(spec) + "': too many points");
    for (std::size_t i = 0; i < count; ++i) sweep.values.push_back(start + static_cast<double>(i) * step);
  } else {
    for (auto part : split(body, ',')) sweep.values.push_back(parse_value(part, spec));
  }
  return sweep;
}

std::vector<BenchRow> run_bench(BenchKernel kernel, const Sweep& sweep, const BenchOptions& opt) {
  std::map<std::string, double> params;
  switch (kernel) {
    case BenchKernel::banded:
      params = {{"n", 400}, {"w", 3}};
      break;
    case BenchKernel::banded_rep:
      params = {{"n", 40}, {"w", 1}, {"c", 2}};
      break;
    case BenchKernel::sampler:
      params = {{"M", 8}, {"D", 2}, {"c", 2}, {"samples", 20}, {"r", 0.5}, {"eta", 1}};
      break;
  }
  auto check_known = [&](const std::string& name) {
    if (!params.count(name)) throw PreconditionError("bench: unknown parameter '" + name + "' for this kernel");
  };
  for (const auto& [name, value] : opt.fixed) {
    check_known(name);
    params[name] = value;
  }
  check_known(sweep.parameter);

  struct Point {
    BenchRow row;
    std::function<void()> kernel;
    double calls_per_run = 1.0;
    std::size_t inner = 1;
    std::vector<double> times;
  };
  std::vector<Point> points;
  for (double value : sweep.values) {
    params[sweep.parameter] = value;
    std::mt19937_64 rng(opt.seed);
    Point pt;
    pt.row.parameter = sweep.parameter;
    pt.row.value = value;
    pt.row.engine_calls = 1;

    if (kernel == BenchKernel::banded) {
      const std::size_t n = as_size(params["n"], "n");
      const std::size_t w = as_size(params["w"], "w");
      auto a = std::make_shared<const ComplexMatrix>(random_banded_symmetric(rng, n, w));
      pt.kernel = [a, view = check_banded(*a, w)] { g_sink = std::abs(lhaf_banded(view)); };
    } else if (kernel == BenchKernel::banded_rep) {
      const std::size_t n = as_size(params["n"], "n");
      const std::size_t w = as_size(params["w"], "w");
      const auto c = static_cast<int>(as_size(params["c"], "c"));
      if (c < 1) throw PreconditionError("bench: c must be at least 1");
      auto a = std::make_shared<const ComplexMatrix>(random_banded_symmetric(rng, n, w));
      pt.kernel = [a, view = check_banded(*a, w), s = std::vector<int>(n, c)] {
        const auto table = lhaf_banded_rep_table(view, s);
        g_sink = std::abs(table[table.size() - 1]);
      };
    } else {
      const std::size_t m = as_size(params["M"], "M");
      const std::size_t d = as_size(params["D"], "D");
      const std::size_t samples = std::max<std::size_t>(1, as_size(params["samples"], "samples"));
      CircuitOptions copt;
      copt.max_r = params["r"];
      copt.eta = params["eta"];
      const CircuitSpec circuit = random_circuit(rng, m, d, copt);
      SamplerConfig cfg;
      cfg.c = static_cast<int>(as_size(params["c"], "c"));
      cfg.seed = opt.seed;
      cfg.engine = opt.engine;
      auto sampler = std::make_shared<const GbtsSampler>(circuit, cfg);
      auto max_calls = std::make_shared<std::uint64_t>(0);
      pt.kernel = [sampler, max_calls, samples] {
        for (std::size_t i = 0; i < samples; ++i) {
          const SampleResult r = sampler->sample(static_cast<std::uint64_t>(i));
          *max_calls = std::max(*max_calls, r.engine_calls);
        }
      };
      pt.calls_per_run = static_cast<double>(samples);
      pt.kernel();
      pt.row.engine_calls = *max_calls;
    }
    points.push_back(std::move(pt));
  }

  const double slice = std::min(kSliceSeconds, opt.min_rep_seconds);
  const auto slices = slice > 0 ? static_cast<std::size_t>(std::ceil(opt.min_rep_seconds / slice - 1e-9)) : 1;
  for (Point& pt : points) pt.inner = calibrate(pt.kernel, opt.warmup, slice);
  for (int r = 0; r < std::max(opt.repetitions, 1); ++r) {
    std::vector<double> total(points.size(), 0.0);
    for (std::size_t k = 0; k < slices; ++k) {
      for (std::size_t p = 0; p < points.size(); ++p) {
        const auto start = Clock::now();
        for (std::size_t i = 0; i < points[p].inner; ++i) points[p].kernel();
        total[p] += seconds_since(start);
      }
    }
    for (std::size_t p = 0; p < points.size(); ++p) {
      const double calls = static_cast<double>(points[p].inner * slices) * points[p].calls_per_run;
      points[p].times.push_back(total[p] / calls);
    }
  }

  std::vector<BenchRow> rows;
  for (Point& pt : points) {
    pt.row.median_wall_s = median(pt.times);
    rows.push_back(pt.row);
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out(kBenchCsvHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += r.parameter + ',' + format_real(r.value, 15) + ',' + format_real(r.median_wall_s, 6) + ',' +
           std::to_string(r.engine_calls) + '\n';
  }
  return out;
}

}  // namespace gbts
