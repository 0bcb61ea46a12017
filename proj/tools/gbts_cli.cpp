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

// Command-line front end.
//
// Exit codes: 0 ok, 1 verify failure, 2 parse error, 3 precondition
// violation, 4 unphysical state.

#include <CLI11.hpp>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "gbts/bench.hpp"
#include "gbts/circuit_io.hpp"
#include "gbts/errors.hpp"
#include "gbts/gaussian.hpp"
#include "gbts/hafnian.hpp"
#include "gbts/matrix_io.hpp"
#include "gbts/sampler.hpp"
#include "gbts/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitUnphysical = 4;

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gbts::ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// FNV-1a, 64 bit, as lowercase hex.
std::string digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

/// "1,0,2" or "1 0 2".
std::vector<int> parse_counts(const std::string& text, const char* what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char ch = text[pos];
    if (ch == ',' || ch == ' ') {
      ++pos;
      continue;
    }
    int v = 0;
    const auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec != std::errc() || v < 0) {
      throw gbts::ParseError(std::string(what) + ": expected non-negative integers, got '" + text + "'");
    }
    out.push_back(v);
    pos = static_cast<std::size_t>(end - text.data());
  }
  return out;
}

std::string fmt(double x) { return gbts::format_real(x, 15); }

double elapsed(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

struct RunReport {
  json doc = json::object();

  RunReport(int argc, char** argv) {
    std::string cmd;
    for (int i = 0; i < argc; ++i) {
      if (i) cmd += ' ';
      cmd += argv[i];
    }
    doc["command"] = cmd;
    doc["inputs"] = json::object();
    doc["timings_s"] = json::object();
  }

  void input(const std::string& path, const std::string& bytes) { doc["inputs"][path] = digest(bytes); }
  void timing(const std::string& stage, double seconds) { doc["timings_s"][stage] = seconds; }

  void write(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw gbts::ParseError("cannot write report " + path);
    out << doc.dump(2) << '\n';
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Gaussian boson sampling with finite-resolution detectors on shallow local circuits"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "gbts 0.1.0");

  std::string report_path;
  app.add_option("--report", report_path, "Write a JSON run report to this path");

  std::string engine_name = "auto";
  const std::vector<std::string> engines{"auto", "brute", "banded", "banded-rep"};

  auto* lhaf_cmd = app.add_subcommand("lhaf", "Loop hafnian of a matrix file");
  std::string matrix_path;
  std::string reps_text;
  std::size_t bandwidth_arg = 0;
  lhaf_cmd->add_option("matrix", matrix_path, "Matrix file")->required();
  lhaf_cmd->add_option("--engine", engine_name, "auto, brute, banded or banded-rep")
      ->check(CLI::IsMember(engines));
  lhaf_cmd->add_option("--reps", reps_text, "Repetition vector, e.g. 2,1,0");
  auto* bw_opt = lhaf_cmd->add_option("--bandwidth", bandwidth_arg, "Declared bandwidth for the banded engines");

  auto* prob_cmd = app.add_subcommand("prob", "Probability of a photon pattern");
  std::string circuit_path;
  std::string pattern_text;
  prob_cmd->add_option("circuit", circuit_path, "Circuit file (JSON)")->required();
  prob_cmd->add_option("--pattern", pattern_text, "Photon counts, e.g. 1,0,2")->required();
  prob_cmd->add_option("--engine", engine_name, "auto, brute, banded or banded-rep")
      ->check(CLI::IsMember(engines));

  auto* sample_cmd = app.add_subcommand("sample", "Draw samples with threshold detectors");
  int threshold = 1;
  std::size_t samples = 1;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  sample_cmd->add_option("circuit", circuit_path, "Circuit file (JSON)")->required();
  sample_cmd->add_option("--threshold,-c", threshold, "Detector resolution c")->required();
  sample_cmd->add_option("--samples,-n", samples, "Number of samples")->required();
  sample_cmd->add_option("--seed", seed, "Random seed");
  sample_cmd->add_option("--engine", engine_name, "auto, brute, banded or banded-rep")
      ->check(CLI::IsMember(engines));
  sample_cmd->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");

  auto* verify_cmd = app.add_subcommand("verify", "Run the self-check suites");
  std::string suite_name = "all";
  verify_cmd->add_option("--suite", suite_name, "lemmas, oracles or all")
      ->check(CLI::IsMember({"lemmas", "oracles", "all"}));
  verify_cmd->add_option("--seed", seed, "Corpus seed");

  auto* bench_cmd = app.add_subcommand("bench", "Time a kernel over a parameter sweep");
  std::string kernel_name;
  std::string sweep_text;
  std::string out_path;
  std::vector<std::string> fixed;
  int repetitions = 5;
  bench_cmd->add_option("--kernel", kernel_name, "banded, banded-rep or sampler")
      ->required()
      ->check(CLI::IsMember({"banded", "banded-rep", "sampler"}));
  bench_cmd->add_option("--sweep", sweep_text, "name=start:stop:step or name=v1,v2,...")->required();
  bench_cmd->add_option("--out", out_path, "CSV output path (default: stdout)");
  bench_cmd->add_option("--set", fixed, "Fixed parameter name=value (repeatable)");
  bench_cmd->add_option("--repetitions", repetitions, "Timed repetitions per point")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--engine", engine_name, "Engine for the sampler kernel")->check(CLI::IsMember(engines));
  bench_cmd->add_option("--seed", seed, "Instance seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  RunReport report(argc, argv);
  int status = kExitOk;
  try {
    const gbts::Engine engine = gbts::parse_engine(engine_name);
    report.doc["engine"] = std::string(gbts::engine_name(engine));

    if (*lhaf_cmd) {
      auto t0 = Clock::now();
      const std::string text = read_file(matrix_path);
      report.input(matrix_path, text);
      const gbts::ComplexMatrix a = gbts::parse_matrix(text);
      std::vector<int> s = reps_text.empty() ? std::vector<int>(a.dim(), 1) : parse_counts(reps_text, "--reps");
      report.timing("parse", elapsed(t0));
      std::optional<std::size_t> w;
      if (*bw_opt) w = bandwidth_arg;
      t0 = Clock::now();
      const gbts::cplx h = gbts::lhaf(a, s, engine, w);
      report.timing("lhaf", elapsed(t0));
      report.doc["engine_calls"] = 1;
      const std::string line = fmt(h.real()) + " " + fmt(h.imag());
      report.doc["output"] = line;
      std::cout << line << '\n';
    } else if (*prob_cmd) {
      auto t0 = Clock::now();
      const std::string text = read_file(circuit_path);
      report.input(circuit_path, text);
      const gbts::CircuitSpec c = gbts::parse_circuit(text);
      const std::vector<int> s = parse_counts(pattern_text, "--pattern");
      report.timing("parse", elapsed(t0));
      t0 = Clock::now();
      const gbts::AdjacencyData adj = gbts::adjacency(gbts::prepare_state(c));
      report.timing("state", elapsed(t0));
      t0 = Clock::now();
      const double p = gbts::prob(adj, s, engine);
      report.timing("prob", elapsed(t0));
      report.doc["engine_calls"] = 1;
      report.doc["output"] = fmt(p);
      std::cout << fmt(p) << '\n';
    } else if (*sample_cmd) {
      auto t0 = Clock::now();
      const std::string text = read_file(circuit_path);
      report.input(circuit_path, text);
      const gbts::CircuitSpec c = gbts::parse_circuit(text);
      report.timing("parse", elapsed(t0));
      gbts::SamplerConfig cfg;
      cfg.c = threshold;
      cfg.seed = seed;
      cfg.engine = engine;
      t0 = Clock::now();
      const auto results = gbts::batch_sample(c, cfg, samples, threads);
      report.timing("sample", elapsed(t0));
      std::string out;
      std::uint64_t total_calls = 0;
      std::uint64_t max_calls = 0;
      std::size_t overflow = 0;
      for (const auto& r : results) {
        out += r.pattern.to_string();
        out += '\n';
        total_calls += r.engine_calls;
        max_calls = std::max(max_calls, r.engine_calls);
        overflow += r.pattern.is_overflow() ? 1 : 0;
      }
      std::cout << out;
      report.doc["engine_calls"] = {{"total", total_calls},
                                    {"max_per_sample", max_calls},
                                    {"bound_per_sample", c.modes * static_cast<std::size_t>(threshold)}};
      report.doc["output"] = {{"samples", results.size()}, {"overflow", overflow}, {"digest", digest(out)}};
    } else if (*verify_cmd) {
      const auto t0 = Clock::now();
      const gbts::VerifyReport vr = gbts::run_verify(gbts::parse_suite(suite_name), seed);
      report.timing("verify", elapsed(t0));
      json checks = json::array();
      for (const auto& check : vr.checks) {
        std::cout << (check.passed ? "PASS " : "FAIL ") << check.name << ": " << check.detail << '\n';
        checks.push_back({{"name", check.name}, {"passed", check.passed}, {"detail", check.detail}});
      }
      std::cout << (vr.passed() ? "verify: all checks passed" : "verify: FAILED") << '\n';
      report.doc["output"] = checks;
      if (!vr.passed()) status = kExitVerifyFailed;
    } else if (*bench_cmd) {
      gbts::BenchOptions opt;
      opt.repetitions = repetitions;
      opt.seed = seed;
      opt.engine = engine;
      for (const auto& f : fixed) {
        const auto eq = f.find('=');
        if (eq == std::string::npos) throw gbts::PreconditionError("--set expects name=value, got '" + f + "'");
        const gbts::Sweep one = gbts::parse_sweep(f);
        if (one.values.size() != 1) throw gbts::PreconditionError("--set expects a single value, got '" + f + "'");
        opt.fixed[one.parameter] = one.values[0];
      }
      const auto t0 = Clock::now();
      const auto rows = gbts::run_bench(gbts::parse_kernel(kernel_name), gbts::parse_sweep(sweep_text), opt);
      report.timing("bench", elapsed(t0));
      const std::string csv = gbts::bench_csv(rows);
      if (out_path.empty()) {
        std::cout << csv;
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw gbts::ParseError("cannot write " + out_path);
        out << csv;
      }
      report.doc["output"] = csv;
    }
  } catch (const gbts::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    status = kExitParse;
  } catch (const gbts::PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    status = kExitPrecondition;
  } catch (const gbts::UnphysicalStateError& e) {
    std::cerr << "error: " << e.what() << '\n';
    status = kExitUnphysical;
  }

  report.doc["exit_code"] = status;
  if (!report_path.empty()) {
    try {
      report.write(report_path);
    } catch (const gbts::Error& e) {
      std::cerr << "error: " << e.what() << '\n';
      if (status == kExitOk) status = kExitParse;
    }
  }
  return status;
}
