// Copyright 2026 The qlocal developers
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

namespace qlocal {

/// Invalid argument to a library operation (dimension mismatch, bad index, ...).
class ArgumentError : public std::invalid_argument {
 public:
  explicit ArgumentError(const std::string& message)
      : std::invalid_argument(message) {}
};

/// A requested computation exceeds the configured size cap.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& message)
      : std::runtime_error(message) {}
};

/// Data that should be mutually consistent is not (e.g. evolution matrices
/// that cannot come from a single unitary).
class IntegrityError : public std::runtime_error {
 public:
  explicit IntegrityError(const std::string& message)
      : std::runtime_error(message) {}
};

/// Machine-readable circuit-parsing failure codes.
enum class ParseCode {
  MissingHeader,
  UnknownGate,
  TargetOutOfRange,
  DuplicateTarget,
  MalformedNumber,
  WrongParamCount,
  WrongArity,
  MalformedLine,
  BadCustomGate,
};

std::string to_string(ParseCode code);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseCode code, int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " +
                           to_string(code) + ": " + message),
        code_(code),
        line_(line) {}

  ParseCode code() const { return code_; }
  int line() const { return line_; }

 private:
  ParseCode code_;
  int line_;
};

}  // namespace qlocal
