// Copyright 2026 The zol Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace zol {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured size bound (vertex count, rounds, extension size) was exceeded.
class BoundError : public Error {
 public:
  using Error::Error;
};

// Input violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The hypotheses of a checked statement do not hold for the given input.
class HypothesisError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Estimated work for a requested computation exceeds the configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace zol
