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


#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "gbts/circuit_io.hpp"
#include "gbts/errors.hpp"
#include "gbts/gaussian.hpp"
#include "gbts/hafnian.hpp"
#include "gbts/sampler.hpp"

namespace py = pybind11;
using namespace gbts;

namespace {

using CArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const CArray& arr) {
  if (arr.ndim() != 2 || arr.shape(0) != arr.shape(1)) throw PreconditionError("expected a square 2-d array");
  const auto n = static_cast<std::size_t>(arr.shape(0));
  ComplexMatrix a(n);
  std::copy(arr.data(), arr.data() + n * n, a.data());
  return a;
}

CArray to_array(const ComplexMatrix& a) {
  CArray out({a.dim(), a.dim()});
  std::copy(a.data(), a.data() + a.dim() * a.dim(), out.mutable_data());
  return out;
}

py::object pattern_object(const PhotonPattern& p) {
  if (p.is_overflow()) return py::none();
  return py::cast(p.counts());
}

SamplerConfig make_config(int c, std::uint64_t seed, const std::string& engine) {
  SamplerConfig cfg;
  cfg.c = c;
  cfg.seed = seed;
  cfg.engine = parse_engine(engine);
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_gbts, m) {
  m.doc() = "Loop hafnians and exact threshold sampling of Gaussian states from shallow local circuits.";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<PreconditionError>(m, "PreconditionError", base);
  py::register_exception<UnphysicalStateError>(m, "UnphysicalStateError", base);

  m.def("telephone", &telephone, py::arg("k"));

  m.def(
      "lhaf",
      [](const CArray& a, std::optional<std::vector<int>> reps, const std::string& engine,
         std::optional<std::size_t> bandwidth, std::optional<std::vector<cplx>> loops) {
        const ComplexMatrix mat = to_matrix(a);
        const std::vector<int> s = reps ? *reps : std::vector<int>(mat.dim(), 1);
        const std::vector<cplx> g = loops ? *loops : std::vector<cplx>{};
        py::gil_scoped_release release;
        return lhaf(mat, s, parse_engine(engine), bandwidth, g);
      },
      py::arg("a"), py::arg("reps") = py::none(), py::arg("engine") = "auto", py::arg("bandwidth") = py::none(),
      py::arg("loops") = py::none(),
      "Loop hafnian of a symmetric matrix, optionally with rows and columns repeated by `reps` and the\n"
      "diagonal of the repeated matrix replaced by per-index `loops`.");

  m.def("bandwidth", [](const CArray& a, double tol) { return bandwidth(to_matrix(a), tol); }, py::arg("a"),
        py::arg("tol") = kBandTol);

  py::class_<Beamsplitter>(m, "Beamsplitter")
      .def(py::init([](std::size_t mode, double theta, double phi) { return Beamsplitter{mode, mode + 1, theta, phi}; }),
           py::arg("mode"), py::arg("theta"), py::arg("phi") = 0.0, "Acts on modes (mode, mode + 1), 0-based.")
      .def_readonly("mode1", &Beamsplitter::mode1)
      .def_readonly("mode2", &Beamsplitter::mode2)
      .def_readonly("theta", &Beamsplitter::theta)
      .def_readonly("phi", &Beamsplitter::phi)
      .def("__repr__", [](const Beamsplitter& b) {
        return "Beamsplitter(" + std::to_string(b.mode1) + ", " + std::to_string(b.theta) + ", " +
               std::to_string(b.phi) + ")";
      });

  py::class_<PhaseShift>(m, "PhaseShift")
      .def(py::init([](std::size_t mode, double delta) { return PhaseShift{mode, delta}; }), py::arg("mode"),
           py::arg("delta"))
      .def_readonly("mode", &PhaseShift::mode)
      .def_readonly("delta", &PhaseShift::delta)
      .def("__repr__", [](const PhaseShift& p) {
        return "PhaseShift(" + std::to_string(p.mode) + ", " + std::to_string(p.delta) + ")";
      });

  py::class_<CircuitSpec>(m, "Circuit")
      .def(py::init([](std::size_t modes, double eta, std::optional<std::vector<std::pair<double, double>>> squeezing,
                       std::optional<std::vector<cplx>> displacement, std::vector<Layer> layers) {
             CircuitSpec c = CircuitSpec::vacuum(modes);
             c.eta = eta;
             if (squeezing) {
               c.squeezing.clear();
               for (auto [r, phase] : *squeezing) c.squeezing.push_back({r, phase});
             }
             if (displacement) c.displacement = *displacement;
             c.layers = std::move(layers);
             c.validate();
             return c;
           }),
           py::arg("modes"), py::arg("eta") = 1.0, py::arg("squeezing") = py::none(),
           py::arg("displacement") = py::none(), py::arg("layers") = std::vector<Layer>{},
           "squeezing: list of (r, phase); displacement: list of complex; layers: lists of gates.")
      .def_static("from_json", &parse_circuit, py::arg("text"))
      .def_static("load", &read_circuit_file, py::arg("path"))
      .def("to_json", &format_circuit)
      .def("save", [](const CircuitSpec& c, const std::filesystem::path& p) { write_circuit_file(p, c); },
           py::arg("path"))
      .def_readonly("modes", &CircuitSpec::modes)
      .def_readonly("eta", &CircuitSpec::eta)
      .def_readonly("displacement", &CircuitSpec::displacement)
      .def_property_readonly("squeezing",
                             [](const CircuitSpec& c) {
                               std::vector<std::pair<double, double>> out;
                               for (const auto& s : c.squeezing) out.emplace_back(s.r, s.phase);
                               return out;
                             })
      .def_readonly("layers", &CircuitSpec::layers)
      .def_property_readonly("depth", &CircuitSpec::depth);

  m.def("unitary", [](const CircuitSpec& c) { return to_array(build_unitary(c)); }, py::arg("circuit"));

  m.def(
      "adjacency",
      [](const CircuitSpec& c, std::optional<std::size_t> k) {
        GaussianState st = prepare_state(c);
        if (k) st = reduce(st, *k);
        const AdjacencyData adj = adjacency(st);
        return py::make_tuple(to_array(adj.a), adj.gamma, adj.prefactor);
      },
      py::arg("circuit"), py::arg("k") = py::none(),
      "(A, gamma, prefactor) of the state, or of its first k modes.");

  m.def(
      "prob",
      [](const CircuitSpec& c, const std::vector<int>& pattern, const std::string& engine) {
        const Engine e = parse_engine(engine);
        py::gil_scoped_release release;
        return prob(prepare_state(c), pattern, e);
      },
      py::arg("circuit"), py::arg("pattern"), py::arg("engine") = "auto");

  py::class_<GbtsSampler>(m, "Sampler")
      .def(py::init([](const CircuitSpec& c, int threshold, std::uint64_t seed, const std::string& engine) {
             return GbtsSampler(c, make_config(threshold, seed, engine));
           }),
           py::arg("circuit"), py::arg("c"), py::arg("seed") = 0, py::arg("engine") = "auto")
      .def_property_readonly("modes", &GbtsSampler::modes)
      .def(
          "sample",
          [](const GbtsSampler& s, std::uint64_t index) {
            const SampleResult r = s.sample(index);
            return py::make_tuple(pattern_object(r.pattern), r.engine_calls);
          },
          py::arg("index"), "(counts or None for overflow, engine calls) of sample number `index`.")
      .def(
          "conditional",
          [](const GbtsSampler& s, std::size_t k, const std::vector<int>& prefix, double prior) {
            return s.conditional(k, prefix, prior).q;
          },
          py::arg("k"), py::arg("prefix"), py::arg("prior"),
          "Outcome masses 0..c and overflow for mode k (1 <= k <= modes) given the first k - 1 counts.");

  m.def(
      "sample",
      [](const CircuitSpec& c, int threshold, std::size_t n, std::uint64_t seed, const std::string& engine,
         unsigned threads) {
        const SamplerConfig cfg = make_config(threshold, seed, engine);
        std::vector<SampleResult> results;
        {
          py::gil_scoped_release release;
          results = batch_sample(c, cfg, n, threads);
        }
        py::list out;
        for (const auto& r : results) out.append(pattern_object(r.pattern));
        return out;
      },
      py::arg("circuit"), py::arg("c"), py::arg("n"), py::arg("seed") = 0, py::arg("engine") = "auto",
      py::arg("threads") = 1, "n samples; each is a list of counts, or None for the overflow event.");
}
