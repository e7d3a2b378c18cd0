// Copyright 2026 The redspec Authors.
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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace redspec {

enum class ErrorKind {
  kInput,         // malformed data or violated input condition
  kContract,      // caller broke an operation precondition
  kResource,      // a configured cap was exceeded
  kInconsistent,  // data describes no valid object (e.g. odd index sum)
  kPrecondition,  // a mathematical hypothesis of an operation failed
  kInvariant,     // internal cross-check failed; always a bug
  kParse,         // text input could not be parsed
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(ErrorKind::kInput, what) {}
};

class ContractError : public Error {
 public:
  explicit ContractError(const std::string& what)
      : Error(ErrorKind::kContract, what) {}
};

class InconsistentDataError : public Error {
 public:
  explicit InconsistentDataError(const std::string& what)
      : Error(ErrorKind::kInconsistent, what) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what)
      : Error(ErrorKind::kPrecondition, what) {}
};

class InvariantError : public Error {
 public:
  explicit InvariantError(const std::string& what)
      : Error(ErrorKind::kInvariant, what) {}
};

// Text that does not follow a file or command-line grammar. Line and column
// are 1-based; zero means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(ErrorKind::kParse, format(what, line, column)), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }
  std::size_t line_;
  std::size_t column_;
};

// Raised whenever a configured cap would be exceeded. Carries the cap's name
// and value so callers can report or raise it.
class ResourceError : public Error {
 public:
  ResourceError(std::string cap, std::uint64_t limit, const std::string& what)
      : Error(ErrorKind::kResource,
              what + " (cap " + cap + " = " + std::to_string(limit) + ")"),
        cap_(std::move(cap)),
        limit_(limit) {}
  const std::string& cap() const { return cap_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::string cap_;
  std::uint64_t limit_;
};

}  // namespace redspec
