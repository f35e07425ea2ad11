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

#ifndef OMEGA_SCALAR_HPP
#define OMEGA_SCALAR_HPP

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "omega/errors.hpp"
#include "omega/rational.hpp"

namespace omega {

enum class Constant { One, Sqrt2, Pi, E };

constexpr std::string_view constant_name(Constant c) {
  switch (c) {
    case Constant::One: return "1";
    case Constant::Sqrt2: return "sqrt2";
    case Constant::Pi: return "pi";
    case Constant::E: return "e";
  }
  return "?";
}

namespace detail {

// Truncated decimal expansions (integer part followed by 220 fraction digits).
// The true value lies in [T_k, T_k + 10^-k] for every prefix of k digits.
inline constexpr std::string_view kSqrt2Digits =
    "1."
    "4142135623730950488016887242096980785696718753769480731766797379907324"
    "7846210703885038753432764157273501384623091229702492483605585073721264"
    "4121497099935831413222665927505592755799950501152782060571470109559971"
    "6059702745";
inline constexpr std::string_view kPiDigits =
    "3."
    "1415926535897932384626433832795028841971693993751058209749445923078164"
    "0628620899862803482534211706798214808651328230664709384460955058223172"
    "5359408128481117450284102701938521105559644622948954930381964428810975"
    "6659334461";
inline constexpr std::string_view kEDigits =
    "2."
    "7182818284590452353602874713526624977572470936999595749669676277240766"
    "3035354759457138217852516642742746639193200305992181741359662904357290"
    "0334295260595630738132328627943490763233829880753195251019011573834187"
    "9307021540";

inline constexpr std::size_t kTableDigits = 220;

inline std::string_view digits_of(Constant c) {
  switch (c) {
    case Constant::Sqrt2: return kSqrt2Digits;
    case Constant::Pi: return kPiDigits;
    case Constant::E: return kEDigits;
    case Constant::One: break;
  }
  return "1.";
}

}  // namespace detail

/// Closed rational interval [lo, hi].
struct RatInterval {
  Rat lo;
  Rat hi;

  Rat width() const { return Rat(hi - lo); }
  bool contains(const Rat& q) const { return lo <= q && q <= hi; }
  bool operator==(const RatInterval&) const = default;
};

/// Verified enclosure [T_k, T_k + 10^-k] of an irrational constant using k
/// fraction digits of the stored table.
inline RatInterval constant_enclosure(Constant c, std::size_t k) {
  if (c == Constant::One) return {Rat(1), Rat(1)};
  if (k > detail::kTableDigits)
    fail(ErrorKind::IndependenceUnknown,
         "enclosure precision exceeds the constant table");
  std::string_view digits = detail::digits_of(c);
  std::string text(digits.substr(0, 1));
  text += digits.substr(2, k);
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, k);
  Rat lo = make_rat(BigInt(text), scale);
  Rat hi = lo + make_rat(BigInt(1), scale);
  return {lo, hi};
}

/// A real number of the form coefficient * constant + offset.
///
/// The normal form is unique: a rational value always has constant One and a
/// zero coefficient, so structural equality coincides with value equality.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Rat& q) : offset_(q) {}  // NOLINT: rationals convert implicitly
  Scalar(long n) : offset_(n) {}        // NOLINT

  static Scalar make(const Rat& coefficient, Constant c, const Rat& offset) {
    Scalar s;
    if (c == Constant::One) {
      s.offset_ = coefficient + offset;
    } else if (coefficient == 0) {
      s.offset_ = offset;
    } else {
      s.coefficient_ = coefficient;
      s.constant_ = c;
      s.offset_ = offset;
    }
    return s;
  }

  static Scalar of(Constant c) { return make(Rat(1), c, Rat(0)); }

  const Rat& coefficient() const { return coefficient_; }
  Constant constant() const { return constant_; }
  const Rat& offset() const { return offset_; }

  bool is_rational() const { return constant_ == Constant::One; }
  std::optional<Rat> as_rational() const {
    if (is_rational()) return offset_;
    return std::nullopt;
  }
  /// Precondition: is_rational().
  const Rat& rational() const { return offset_; }

  /// a * x + b
  Scalar affine(const Rat& a, const Rat& b) const {
    return make(Rat(a * coefficient_), constant_, Rat(a * offset_ + b));
  }
  Scalar operator-() const { return affine(Rat(-1), Rat(0)); }

  bool operator==(const Scalar& o) const {
    return constant_ == o.constant_ && coefficient_ == o.coefficient_ &&
           offset_ == o.offset_;
  }

  std::string str() const {
    if (is_rational()) return to_string(offset_);
    std::string out;
    if (coefficient_ == 1) {
      out = std::string(constant_name(constant_));
    } else if (coefficient_ == -1) {
      out = "-" + std::string(constant_name(constant_));
    } else {
      out = to_string(coefficient_) + "*" + std::string(constant_name(constant_));
    }
    if (offset_ > 0) out += "+" + to_string(offset_);
    if (offset_ < 0) out += "-" + to_string(rat_abs(offset_));
    return out;
  }

 private:
  Rat coefficient_{0};
  Constant constant_ = Constant::One;
  Rat offset_{0};
};

inline bool is_rational(const Scalar& s) { return s.is_rational(); }

/// Sum when it stays inside the Scalar grammar (at most one constant).
inline std::optional<Scalar> try_add(const Scalar& a, const Scalar& b) {
  if (a.is_rational()) return b.affine(Rat(1), a.offset());
  if (b.is_rational()) return a.affine(Rat(1), b.offset());
  if (a.constant() != b.constant()) return std::nullopt;
  return Scalar::make(Rat(a.coefficient() + b.coefficient()), a.constant(),
                      Rat(a.offset() + b.offset()));
}

inline std::optional<Scalar> try_sub(const Scalar& a, const Scalar& b) {
  return try_add(a, -b);
}

/// Enclosure of width at most eps containing the value of s.
inline RatInterval enclose(const Scalar& s, const Rat& eps) {
  if (eps <= 0) fail(ErrorKind::InvalidArgument, "enclose requires eps > 0");
  if (s.is_rational()) return {s.offset(), s.offset()};
  Rat q = rat_abs(s.coefficient());
  // smallest k with q * 10^-k <= eps
  std::size_t k = 0;
  Rat scaled = q;
  while (scaled > eps) {
    scaled /= 10;
    ++k;
  }
  RatInterval c = constant_enclosure(s.constant(), k);
  Rat a = s.coefficient() * c.lo + s.offset();
  Rat b = s.coefficient() * c.hi + s.offset();
  if (a > b) std::swap(a, b);
  return {a, b};
}

inline double to_double(const Scalar& s) {
  RatInterval r = enclose(s, make_rat(1, 1000000000000000000L));
  return to_double(r.lo);
}

namespace detail {

inline constexpr int kMinRefineBits = 8;
inline constexpr int kMaxRefineBits = 256;

}  // namespace detail

/// Total order on scalars. Equality holds only for identical normal forms;
/// otherwise the order is found by refining enclosures, doubling the number
/// of bits each round up to 256.
inline std::strong_ordering scalar_cmp(const Scalar& a, const Scalar& b) {
  if (a == b) return std::strong_ordering::equal;
  if (auto d = try_sub(a, b)) {
    if (d->is_rational()) return rat_cmp(d->offset(), Rat(0));
    for (int bits = detail::kMinRefineBits; bits <= detail::kMaxRefineBits; bits *= 2) {
      RatInterval r = enclose(*d, pow2(-bits));
      if (r.lo > 0) return std::strong_ordering::greater;
      if (r.hi < 0) return std::strong_ordering::less;
    }
  } else {
    for (int bits = detail::kMinRefineBits; bits <= detail::kMaxRefineBits; bits *= 2) {
      Rat eps = pow2(-bits - 1);
      RatInterval ra = enclose(a, eps);
      RatInterval rb = enclose(b, eps);
      if (ra.lo > rb.hi) return std::strong_ordering::greater;
      if (ra.hi < rb.lo) return std::strong_ordering::less;
    }
  }
  fail(ErrorKind::IndependenceUnknown,
       "could not separate " + a.str() + " and " + b.str() + " within 256 bits");
}

inline bool operator<(const Scalar& a, const Scalar& b) { return scalar_cmp(a, b) < 0; }
inline bool operator<=(const Scalar& a, const Scalar& b) { return scalar_cmp(a, b) <= 0; }
inline bool operator>(const Scalar& a, const Scalar& b) { return scalar_cmp(a, b) > 0; }
inline bool operator>=(const Scalar& a, const Scalar& b) { return scalar_cmp(a, b) >= 0; }

inline const Scalar& scalar_min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
inline const Scalar& scalar_max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

/// Scalar extended with both infinities.
class ExtScalar {
 public:
  enum class Kind { MinusInf, Finite, PlusInf };

  ExtScalar() = default;
  ExtScalar(const Scalar& s) : value_(s) {}  // NOLINT
  ExtScalar(const Rat& q) : value_(q) {}     // NOLINT
  ExtScalar(long n) : value_(n) {}           // NOLINT

  static ExtScalar plus_inf() { return ExtScalar(Kind::PlusInf); }
  static ExtScalar minus_inf() { return ExtScalar(Kind::MinusInf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  const Scalar& value() const { return value_; }

  std::string str() const {
    switch (kind_) {
      case Kind::MinusInf: return "-inf";
      case Kind::PlusInf: return "inf";
      case Kind::Finite: break;
    }
    return value_.str();
  }

  bool operator==(const ExtScalar& o) const {
    return kind_ == o.kind_ && (kind_ != Kind::Finite || value_ == o.value_);
  }

  friend std::strong_ordering operator<=>(const ExtScalar& a, const ExtScalar& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (a.kind_ != Kind::Finite) return std::strong_ordering::equal;
    return scalar_cmp(a.value_, b.value_);
  }

 private:
  explicit ExtScalar(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Finite;
  Scalar value_;
};

inline std::string to_string(std::strong_ordering o) {
  if (o < 0) return "<";
  if (o > 0) return ">";
  return "=";
}

}  // namespace omega

#endif  // OMEGA_SCALAR_HPP
