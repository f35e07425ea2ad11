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

#ifndef OMEGA_CLASSIFY_HPP
#define OMEGA_CLASSIFY_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "omega/attributes.hpp"
#include "omega/cardinality.hpp"
#include "omega/errors.hpp"

namespace omega {

enum class Step { One, Two };

/// Two-step totality labels: finite sizes, then Omega with subscripts
/// 0 < 1/3 < 1/2 < 2/3 < 1.
struct StepTotality {
  enum class Kind { Fin, Omega0, OmegaThird, OmegaHalf, OmegaTwoThirds, Omega1 };
  Kind kind = Kind::Fin;
  std::uint64_t n = 0;
  Step step = Step::One;

  std::string str() const {
    switch (kind) {
      case Kind::Fin: return std::to_string(n);
      case Kind::Omega0: return "Omega0";
      case Kind::OmegaThird: return "Omega1/3";
      case Kind::OmegaHalf: return "Omega1/2";
      case Kind::OmegaTwoThirds: return "Omega2/3";
      case Kind::Omega1: return "Omega1";
    }
    return {};
  }
  bool operator==(const StepTotality& o) const { return kind == o.kind && n == o.n; }
};

inline std::strong_ordering step_compare(const StepTotality& a, const StepTotality& b) {
  if (a.kind != b.kind) return static_cast<int>(a.kind) <=> static_cast<int>(b.kind);
  return a.n <=> b.n;
}

inline const char* const kVacuousWarning =
    "vacuous-truth classification: unbounded set has no containing closed interval";

inline StepTotality step1_totality(const SetExpr& e) {
  StepTotality t;
  t.step = Step::One;
  SizeClass own = size_of(e);
  switch (own.kind) {
    case SizeClass::Kind::Finite:
      t.kind = StepTotality::Kind::Fin;
      t.n = own.count;
      return t;
    case SizeClass::Kind::Countable:
      t.kind = StepTotality::Kind::Omega0;
      return t;
    case SizeClass::Kind::Uncountable: break;
  }
  t.kind = co_size_of(e).is_countable() ? StepTotality::Kind::Omega1
                                        : StepTotality::Kind::OmegaHalf;
  return t;
}

/// Splits Omega1/2 by testing the hull: A gets Omega2/3 when [inf A, sup A]
/// minus A is countable. Unbounded sets get Omega1/3 with a warning.
inline StepTotality step2_totality(const SetExpr& e, std::vector<std::string>* warnings = nullptr) {
  StepTotality t = step1_totality(e);
  t.step = Step::Two;
  if (t.kind != StepTotality::Kind::OmegaHalf) return t;
  if (!bounded_of(e)) {
    if (warnings) warnings->push_back(kVacuousWarning);
    t.kind = StepTotality::Kind::OmegaThird;
    return t;
  }
  auto h = hull_of(e);
  SetExpr gaps = SetExpr::difference(SetExpr::closed(h->lo.value(), h->hi.value()), e);
  t.kind = size_of(gaps).is_countable() ? StepTotality::Kind::OmegaTwoThirds
                                        : StepTotality::Kind::OmegaThird;
  return t;
}

/// 0.a1a2a3... -> 0.a1 0 a2 0 a3 0 ...
inline std::vector<int> interleave_digits(const std::vector<int>& digits) {
  std::vector<int> out;
  out.reserve(digits.size() * 2);
  for (int d : digits) {
    if (d < 0 || d > 9)
      fail(ErrorKind::DigitOutOfRange, "digit " + std::to_string(d) + " outside 0..9");
    out.push_back(d);
    out.push_back(0);
  }
  return out;
}

inline bool has_repeated_nonzero(const std::vector<int>& digits) {
  for (std::size_t i = 1; i < digits.size(); ++i)
    if (digits[i] != 0 && digits[i] == digits[i - 1]) return true;
  return false;
}

}  // namespace omega

#endif  // OMEGA_CLASSIFY_HPP
