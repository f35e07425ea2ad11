// Copyright 2026 The Omega Authors
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

#ifndef OMEGA_ERRORS_HPP
#define OMEGA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace omega {

enum class ErrorKind {
  IndependenceUnknown,
  UnsupportedScalar,
  UnsupportedCombination,
  AttributeUnderdetermined,
  MembershipUndetermined,
  InvalidArgument,
  InvalidCenter,
  UnboundedSet,
  UnboundedCenter,
  ToleranceStraddle,
  BoundsNotExact,
  Indeterminate,
  DigitOutOfRange,
  ParseError,
  UnknownSuite,
  FileUnreadable,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IndependenceUnknown: return "IndependenceUnknown";
    case ErrorKind::UnsupportedScalar: return "UnsupportedScalar";
    case ErrorKind::UnsupportedCombination: return "UnsupportedCombination";
    case ErrorKind::AttributeUnderdetermined: return "AttributeUnderdetermined";
    case ErrorKind::MembershipUndetermined: return "MembershipUndetermined";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidCenter: return "InvalidCenter";
    case ErrorKind::UnboundedSet: return "UnboundedSet";
    case ErrorKind::UnboundedCenter: return "UnboundedCenter";
    case ErrorKind::ToleranceStraddle: return "ToleranceStraddle";
    case ErrorKind::BoundsNotExact: return "BoundsNotExact";
    case ErrorKind::Indeterminate: return "Indeterminate";
    case ErrorKind::DigitOutOfRange: return "DigitOutOfRange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::FileUnreadable: return "FileUnreadable";
  }
  return "Unknown";
}

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the query parser. `offset` is 1-based (byte index + 1).
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected,
             const std::string& detail = {})
      : Error(ErrorKind::ParseError, format(offset, expected, detail)),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string format(std::size_t offset,
                            const std::vector<std::string>& expected,
                            const std::string& detail) {
    std::string msg = "parse error at offset " + std::to_string(offset);
    if (!expected.empty()) {
      msg += ", expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) msg += " or ";
        msg += "\"" + expected[i] + "\"";
      }
    }
    if (!detail.empty()) msg += ": " + detail;
    return msg;
  }

  std::size_t offset_;
  std::vector<std::string> expected_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace omega

#endif  // OMEGA_ERRORS_HPP
