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


#include "gbts/circuit_io.hpp"

#include <filesystem>

#include "gbts/corpus.hpp"
#include "gbts/errors.hpp"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace gbts;

TEST(circuit_io, parse_fixture) {
  const CircuitSpec c = read_circuit_file(std::string(GBTS_FIXTURES) + "/lossy_chain.json");
  ASSERT_EQ(c.modes, 4u);
  ASSERT_EQ(c.eta, 0.8);
  ASSERT_EQ(c.depth(), 2u);
  ASSERT_EQ(c.displacement[0], cplx(0.3, 0.1));
  ASSERT_EQ(c.displacement[3], cplx(0.1, 0));
  // Mode numbers in files are 1-based.
  const auto& bs = std::get<Beamsplitter>(c.layers[1][1]);
  ASSERT_EQ(bs.mode1, 1u);
  ASSERT_EQ(bs.mode2, 2u);
  ASSERT_EQ(std::get<PhaseShift>(c.layers[1][2]).mode, 3u);
}

TEST(circuit_io, defaults) {
  const CircuitSpec c = parse_circuit(R"({"format_version": 1, "modes": 2})");
  ASSERT_EQ(c.eta, 1.0);
  ASSERT_EQ(c.squeezing.size(), 2u);
  ASSERT_EQ(c.squeezing[1].r, 0.0);
  ASSERT_EQ(c.displacement, (std::vector<cplx>{0, 0}));
  ASSERT_TRUE(c.layers.empty());
}

TEST(circuit_io, round_trip) {
  auto rng = gbts_test::test_rng(50);
  CircuitOptions opt;
  opt.eta = 0.75;
  opt.max_displacement = 0.8;
  for (int trial = 0; trial < 10; ++trial) {
    const CircuitSpec c = random_circuit(rng, 2 + trial, 1 + trial % 4, opt);
    const CircuitSpec back = parse_circuit(format_circuit(c));
    ASSERT_EQ(format_circuit(back), format_circuit(c));
    ASSERT_EQ(build_unitary(back), build_unitary(c));
  }
  const auto path = std::filesystem::temp_directory_path() / "gbts_circuit_io_test.json";
  const CircuitSpec c = read_circuit_file(std::string(GBTS_FIXTURES) + "/vacuum.json");
  write_circuit_file(path, c);
  ASSERT_EQ(format_circuit(read_circuit_file(path)), format_circuit(c));
  std::filesystem::remove(path);
}

TEST(circuit_io, parse_errors) {
  ASSERT_THROW(parse_circuit("{"), ParseError);
  ASSERT_THROW(parse_circuit("[]"), ParseError);
  ASSERT_THROW(parse_circuit(R"({"modes": 2})"), ParseError);
  ASSERT_THROW(parse_circuit(R"({"format_version": 2, "modes": 2})"), ParseError);
  ASSERT_THROW(parse_circuit(R"({"format_version": 1, "modes": 0})"), ParseError);
  ASSERT_THROW(parse_circuit(R"({"format_version": 1, "modes": 2, "colour": 1})"), ParseError);
  ASSERT_THROW(parse_circuit(R"({"format_version": 1, "modes": 1, "squeezing": [{"r": 1, "x": 0}]})"), ParseError);
  ASSERT_THROW(parse_circuit(R"({"format_version": 1, "modes": 1, "displacement": ["a"]})"), ParseError);
  ASSERT_THROW(parse_circuit(R"({"format_version": 1, "modes": 2, "layers": [[{"type": "swap"}]]})"), ParseError);
  ASSERT_THROW(parse_circuit(R"({"format_version": 1, "modes": 2,
      "layers": [[{"type": "beamsplitter", "modes": [1, 3], "theta": 0}]]})"),
               ParseError);
  ASSERT_THROW(parse_circuit(R"({"format_version": 1, "modes": 2,
      "layers": [[{"type": "phase", "mode": 0, "delta": 0}]]})"),
               ParseError);
  ASSERT_THROW(read_circuit_file("/nonexistent/circuit.json"), ParseError);
}

TEST(circuit_io, precondition_errors) {
  ASSERT_THROW(parse_circuit(R"({"format_version": 1, "modes": 2, "eta": 0})"), PreconditionError);
  ASSERT_THROW(parse_circuit(R"({"format_version": 1, "modes": 2, "squeezing": [{"r": 1}]})"), PreconditionError);
  ASSERT_THROW(parse_circuit(R"({"format_version": 1, "modes": 3,
      "layers": [[{"type": "beamsplitter", "modes": [1, 3], "theta": 0}]]})"),
               PreconditionError);
}
