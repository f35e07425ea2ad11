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

#ifndef OMEGA_RATIONAL_HPP
#define OMEGA_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

#include "omega/errors.hpp"

namespace omega {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator. Every constructor path below canonicalizes.
using Rat = mpq_class;
using BigInt = mpz_class;

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) fail(ErrorKind::InvalidArgument, "zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(ErrorKind::InvalidArgument, "zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// Parses `p` or `p/q` with optional leading '-'.
inline Rat parse_rat(std::string_view text) {
  auto digits_ok = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : body.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den))
    fail(ErrorKind::InvalidArgument, "malformed rational '" + std::string(text) + "'");
  BigInt n{std::string(num)}, d{std::string(den)};
  if (negative) n = -n;
  return make_rat(n, d);
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

inline int sign(const Rat& q) { return sgn(q); }

inline std::strong_ordering rat_cmp(const Rat& a, const Rat& b) {
  int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline BigInt floor_of(const Rat& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline BigInt ceil_of(const Rat& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Rat rat_pow(const Rat& base, unsigned long exp) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exp);
  return make_rat(num, den);
}

inline Rat pow2(long exp) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(exp < 0 ? -exp : exp));
  return exp < 0 ? make_rat(BigInt(1), p) : Rat(p);
}

/// x mod m into [0, m) for m > 0.
inline Rat rat_mod(const Rat& x, const Rat& m) {
  Rat k(floor_of(Rat(x / m)));
  return Rat(x - k * m);
}

/// Least common multiple of two positive rationals: the smallest positive
/// rational that is an integer multiple of both.
inline Rat rat_lcm(const Rat& a, const Rat& b) {
  BigInt n, d;
  mpz_lcm(n.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
  mpz_gcd(d.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
  return make_rat(n, d);
}

inline double to_double(const Rat& q) { return q.get_d(); }

}  // namespace omega

#endif  // OMEGA_RATIONAL_HPP
