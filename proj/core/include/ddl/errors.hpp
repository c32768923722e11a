// Copyright 2026 The ddlcheck Authors
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

#ifndef DDL_ERRORS_HPP_
#define DDL_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ddl {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed formula text. `position()` is the 0-based byte offset of the
// offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Malformed model file. `line()` is 1-based.
class ModelFormatError : public Error {
 public:
  ModelFormatError(const std::string& message, int line)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// A formula cannot be evaluated in the requested way (unbound metavariable,
// unknown atom under strict lookup, atoms in a frame schema, ...).
class EvalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ddl

#endif  // DDL_ERRORS_HPP_
