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

#ifndef OMEGA_CARDINALITY_HPP
#define OMEGA_CARDINALITY_HPP

#include <compare>
#include <cstdint>
#include <string>

#include "omega/errors.hpp"

namespace omega {

/// Size of a set up to the finite / countable / uncountable split.
struct SizeClass {
  enum class Kind { Finite, Countable, Uncountable };
  Kind kind = Kind::Finite;
  std::uint64_t count = 0;

  static SizeClass finite(std::uint64_t n) { return {Kind::Finite, n}; }
  static SizeClass countable() { return {Kind::Countable, 0}; }
  static SizeClass uncountable() { return {Kind::Uncountable, 0}; }
  bool is_countable() const { return kind != Kind::Uncountable; }
  bool operator==(const SizeClass&) const = default;
};

/// Cardinality class of a set together with its complement.
struct CardClass {
  enum class Kind { Fin, Aleph0, UncUnc, UncCo0, UncFin };
  Kind kind = Kind::Fin;
  std::uint64_t n = 0;

  static CardClass fin(std::uint64_t n) { return {Kind::Fin, n}; }
  static CardClass aleph0() { return {Kind::Aleph0, 0}; }
  static CardClass unc_unc() { return {Kind::UncUnc, 0}; }
  static CardClass unc_co0() { return {Kind::UncCo0, 0}; }
  static CardClass unc_fin(std::uint64_t n) { return {Kind::UncFin, n}; }

  static CardClass from_sizes(const SizeClass& own, const SizeClass& complement) {
    switch (own.kind) {
      case SizeClass::Kind::Finite: return fin(own.count);
      case SizeClass::Kind::Countable: return aleph0();
      case SizeClass::Kind::Uncountable: break;
    }
    switch (complement.kind) {
      case SizeClass::Kind::Finite: return unc_fin(complement.count);
      case SizeClass::Kind::Countable: return unc_co0();
      case SizeClass::Kind::Uncountable: break;
    }
    return unc_unc();
  }

  std::string str() const {
    switch (kind) {
      case Kind::Fin: return std::to_string(n);
      case Kind::Aleph0: return "aleph0";
      case Kind::UncUnc: return "aleph1\\aleph1";
      case Kind::UncCo0: return "aleph1\\aleph0";
      case Kind::UncFin: return "aleph1\\" + std::to_string(n);
    }
    return {};
  }

  static CardClass parse(const std::string& text) {
    if (text == "aleph0") return aleph0();
    if (text == "aleph1\\aleph1") return unc_unc();
    if (text == "aleph1\\aleph0") return unc_co0();
    auto number = [&](const std::string& digits) {
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        fail(ErrorKind::InvalidArgument, "not a cardinality class: '" + text + "'");
      return static_cast<std::uint64_t>(std::stoull(digits));
    };
    const std::string prefix = "aleph1\\";
    if (text.rfind(prefix, 0) == 0) return unc_fin(number(text.substr(prefix.size())));
    return fin(number(text));
  }

  bool operator==(const CardClass&) const = default;
};

/// n < aleph0 < aleph1\aleph1 < aleph1\aleph0 < aleph1\n, with larger n
/// lower within the last rung.
inline std::strong_ordering card_compare(const CardClass& a, const CardClass& b) {
  auto rung = [](const CardClass& c) { return static_cast<int>(c.kind); };
  if (rung(a) != rung(b)) return rung(a) <=> rung(b);
  if (a.kind == CardClass::Kind::Fin) return a.n <=> b.n;
  if (a.kind == CardClass::Kind::UncFin) return b.n <=> a.n;
  return std::strong_ordering::equal;
}

}  // namespace omega

#endif  // OMEGA_CARDINALITY_HPP
