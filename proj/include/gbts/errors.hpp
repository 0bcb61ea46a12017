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

#include <stdexcept>
#include <string>

namespace gbts {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed matrix, circuit, or pattern input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold
/// (dimension mismatch, bandwidth violation, size guard, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The Gaussian state is unphysical or the probability evaluation broke down
/// numerically (non positive-definite Q, imaginary or negative probabilities).
class UnphysicalStateError : public Error {
 public:
  using Error::Error;
};

}  // namespace gbts
