// Copyright 2026 The Authors.
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

namespace rtt {

// Base class for everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid argument to an operation (alpha out of range, bad sizes, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// A brute-force enumeration would exceed its configured cap.
class EnumerationTooLarge : public Error {
 public:
  using Error::Error;
};

// Inclusion-exclusion over too many rectangles.
class ObjectiveTooLarge : public Error {
 public:
  using Error::Error;
};

// Inputs are inconsistent with each other (e.g. missing coverage rectangle).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Attack rate requested for a set with zero value.
class UndefinedRate : public Error {
 public:
  using Error::Error;
};

// Every singleton value is zero, so curvature has no admissible term.
class DegenerateObjective : public Error {
 public:
  using Error::Error;
};

// Malformed CSV or experiment description; carries the 1-based line number
// when one is known (0 otherwise).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace rtt
