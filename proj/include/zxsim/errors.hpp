// Copyright 2026 The zxsim Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zxsim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed diagram construction (unknown vertex, bad boundary, ...).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// A rewrite rule was asked to fire on a vertex set that does not match it.
class RuleNotApplicable : public Error {
 public:
  using Error::Error;
};

/// The dense tensor oracle refuses diagrams above its size cap.
class OracleRefused : public Error {
 public:
  using Error::Error;
};

/// Positioned error in circuit text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Cooperative deadline expired during a simulation.
class TimeoutError : public Error {
 public:
  using Error::Error;
};

/// A computed quantity violated an invariant that exact arithmetic guarantees.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace zxsim
