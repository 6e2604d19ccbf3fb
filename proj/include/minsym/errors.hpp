// Copyright 2026 The minsym Authors
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

#ifndef MINSYM_ERRORS_HPP_
#define MINSYM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace minsym {

// Failure categories. The C API maps these one-to-one onto status codes and
// the CLI maps them onto exit codes.
enum class ErrorKind {
  kInvalidArgument,
  kDomain,
  kIo,
  kAlreadyExists,
  kFormat,
  kCountMismatch,
  kUnsupportedVersion,
  kPurityViolation,
  kPartialResult,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Precondition violated by a value (out-of-range index, mismatched spaces).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorKind::kDomain, what) {}
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorKind::kInvalidArgument, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what, ErrorKind kind = ErrorKind::kIo)
      : Error(kind, what) {}
};

// Malformed or inconsistent on-disk data.
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& what,
                       ErrorKind kind = ErrorKind::kFormat)
      : Error(kind, what) {}
};

}  // namespace minsym

#endif  // MINSYM_ERRORS_HPP_
