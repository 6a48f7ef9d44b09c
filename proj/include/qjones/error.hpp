// Copyright 2026 The qjones Authors
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

namespace qjones {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: malformed files, unknown names, out-of-domain arguments.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A well-formed computation that cannot be completed.
class ComputationError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public ComputationError {
 public:
  DivisionByZero() : ComputationError("division by zero") {}
  explicit DivisionByZero(const std::string& what) : ComputationError(what) {}
};

class ParseError : public ValidationError {
 public:
  ParseError(int line, const std::string& what)
      : ValidationError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class DegenerateBranch : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class NonElementaryLog : public ComputationError {
 public:
  NonElementaryLog() : ComputationError("non-elementary-over-Q log part") {}
};

class PrecisionLoss : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

class Unsupported : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

}  // namespace qjones
