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

#include "gbts/matrix.hpp"

namespace gbts {

// Text format: first line `n`, then n lines of n whitespace-separated
// entries written `re[,im]`. Writing uses 17 significant digits so that
// read(write(A)) == A bit for bit.

ComplexMatrix parse_matrix(std::string_view text);
std::string format_matrix(const ComplexMatrix& a);

ComplexMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& a);

/// Locale-independent shortest-enough decimal with `digits` significant digits.
std::string format_real(double x, int digits);

}  // namespace gbts
