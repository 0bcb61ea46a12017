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

#include <filesystem>
#include <string>
#include <string_view>

#include "gbts/gaussian.hpp"

namespace gbts {

inline constexpr int kCircuitFormatVersion = 1;

/**
 * Circuit files are JSON objects:
 *
 *   {
 *     "format_version": 1,
 *     "modes": 2,
 *     "eta": 0.9,
 *     "squeezing": [{"r": 0.5, "phase": 0.0}, {"r": 0.5, "phase": 0.0}],
 *     "displacement": [[0.1, 0.0], 0.2],
 *     "layers": [
 *       [{"type": "beamsplitter", "modes": [1, 2], "theta": 0.785398, "phi": 0.0}],
 *       [{"type": "phase", "mode": 1, "delta": 0.3}]
 *     ]
 *   }
 *
 * Mode numbers are 1-based. "eta", "squeezing", "displacement" and "layers"
 * default to 1, vacuum, zero and no gates. A displacement entry is a real
 * number or a [re, im] pair. Unknown keys are rejected.
 *
 * Malformed input raises ParseError; a well-formed but invalid circuit raises
 * PreconditionError from CircuitSpec::validate().
 */
CircuitSpec parse_circuit(std::string_view json_text);
std::string format_circuit(const CircuitSpec& c);

CircuitSpec read_circuit_file(const std::filesystem::path& path);
void write_circuit_file(const std::filesystem::path& path, const CircuitSpec& c);

}  // namespace gbts
