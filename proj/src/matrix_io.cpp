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

#include "gbts/matrix_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "gbts/errors.hpp"

namespace gbts {
namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) : text_(text) {}

  bool next(std::string_view& token) {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
    if (pos_ == text_.size()) return false;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_])) ++pos_;
    token = text_.substr(start, pos_ - start);
    return true;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

double parse_double(std::string_view s) {
  double value = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("matrix: cannot parse number '" + std::string(s) + "'");
  }
  return value;
}

cplx parse_entry(std::string_view token) {
  const auto comma = token.find(',');
  if (comma == std::string_view::npos) return {parse_double(token), 0.0};
  return {parse_double(token.substr(0, comma)), parse_double(token.substr(comma + 1))};
}

}  // namespace

std::string format_real(double x, int digits) {
  if (x == 0.0) return "0";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, digits);
  return std::string(buf, ptr);
}

ComplexMatrix parse_matrix(std::string_view text) {
  Tokenizer tok(text);
  std::string_view token;
  if (!tok.next(token)) throw ParseError("matrix: missing dimension line");
  std::size_t n = 0;
  {
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), n);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("matrix: invalid dimension '" + std::string(token) + "'");
    }
  }
  ComplexMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!tok.next(token)) {
        throw ParseError("matrix: expected " + std::to_string(n * n) + " entries, found " +
                         std::to_string(i * n + j));
      }
      a(i, j) = parse_entry(token);
    }
  }
  if (tok.next(token)) throw ParseError("matrix: trailing data '" + std::string(token) + "'");
  return a;
}

std::string format_matrix(const ComplexMatrix& a) {
  std::string out = std::to_string(a.dim()) + "\n";
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (j > 0) out += ' ';
      const cplx z = a(i, j);
      out += format_real(z.real(), 17);
      if (z.imag() != 0.0) {
        out += ',';
        out += format_real(z.imag(), 17);
      }
    }
    out += '\n';
  }
  return out;
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& a) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write matrix file " + path.string());
  out << format_matrix(a);
}

}  // namespace gbts
