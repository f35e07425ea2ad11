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

#include <gtest/gtest.h>

#include <random>

#include "omega/estimate.hpp"
#include "omega/periodic.hpp"
#include "omega/scalar.hpp"

using namespace omega;

namespace {

// Independent digit oracles: floor(c * 10^k) by integer arithmetic only.

BigInt ten_pow(unsigned k) {
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) r *= 10;
  return r;
}

BigInt isqrt(const BigInt& n) {
  BigInt x = n, y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

BigInt sqrt2_scaled(unsigned k) { return isqrt(2 * ten_pow(2 * k)); }

// arctan(1/x) scaled by 10^(k+guard), by the alternating series.
BigInt arctan_inv(long x, const BigInt& one) {
  BigInt x2 = x * x, term = one / x, sum = term;
  for (long n = 3; term != 0; n += 2) {
    term /= x2;
    if ((n / 2) % 2 == 1)
      sum -= term / n;
    else
      sum += term / n;
  }
  return sum;
}

BigInt pi_scaled(unsigned k) {
  const unsigned guard = 10;
  BigInt one = ten_pow(k + guard);
  BigInt pi = 4 * (4 * arctan_inv(5, one) - arctan_inv(239, one));
  return pi / ten_pow(guard);
}

BigInt e_scaled(unsigned k) {
  const unsigned guard = 10;
  BigInt one = ten_pow(k + guard), term = one, sum = 0;
  for (long n = 1; term != 0; ++n) {
    sum += term;
    term /= n;
  }
  return sum / ten_pow(guard);
}

std::string digits(const BigInt& scaled) { return scaled.get_str(); }

std::string table_digits(Constant c, unsigned k) {
  std::string_view t = detail::digits_of(c);
  return std::string(t.substr(0, 1)) + std::string(t.substr(2, k));
}

}  // namespace

TEST(ScalarOracle, Sqrt2TableMatchesIntegerSquareRoot) {
  EXPECT_EQ(table_digits(Constant::Sqrt2, 200), digits(sqrt2_scaled(200)));
}

TEST(ScalarOracle, PiTableMatchesMachinSeries) {
  EXPECT_EQ(table_digits(Constant::Pi, 200), digits(pi_scaled(200)));
}

TEST(ScalarOracle, ETableMatchesTaylorSeries) {
  EXPECT_EQ(table_digits(Constant::E, 200), digits(e_scaled(200)));
}

TEST(ScalarOracle, EnclosuresContainReference) {
  for (Constant c : {Constant::Sqrt2, Constant::Pi, Constant::E}) {
    BigInt ref = c == Constant::Sqrt2 ? sqrt2_scaled(200)
                 : c == Constant::Pi  ? pi_scaled(200)
                                      : e_scaled(200);
    Rat lo = make_rat(ref, ten_pow(200)), hi = make_rat(BigInt(ref + 1), ten_pow(200));
    for (Rat eps : {make_rat(1, 10), make_rat(1, 1000), pow2(-64), pow2(-200)}) {
      RatInterval r = enclose(Scalar::of(c), eps);
      EXPECT_LE(r.width(), eps);
      EXPECT_LE(r.lo, hi);
      EXPECT_GE(r.hi, lo);
    }
  }
}

TEST(Scalar, CompareExamples) {
  EXPECT_EQ(scalar_cmp(Scalar::of(Constant::Pi), Scalar(make_rat(22, 7))),
            std::strong_ordering::less);
  EXPECT_EQ(scalar_cmp(Scalar::of(Constant::Sqrt2), Scalar::of(Constant::Sqrt2)),
            std::strong_ordering::equal);
  EXPECT_EQ(scalar_cmp(Scalar::make(Rat(2), Constant::Sqrt2, Rat(0)), Scalar::of(Constant::E)),
            std::strong_ordering::greater);
}

TEST(Scalar, EncloseExamples) {
  RatInterval r = enclose(Scalar(make_rat(5, 3)), make_rat(1, 1000000));
  EXPECT_EQ(r.lo, make_rat(5, 3));
  EXPECT_EQ(r.hi, make_rat(5, 3));
  RatInterval s = enclose(Scalar::of(Constant::Sqrt2), make_rat(1, 10));
  EXPECT_LE(s.width(), make_rat(1, 10));
  EXPECT_LE(make_rat(7, 5), s.lo);
  EXPECT_LE(s.hi, make_rat(3, 2));
  RatInterval p = enclose(Scalar::of(Constant::Pi), make_rat(1, 100));
  EXPECT_LE(p.width(), make_rat(1, 100));
  EXPECT_TRUE(p.contains(make_rat(314, 100) + make_rat(1, 1000)));
}

TEST(Scalar, Rationality) {
  EXPECT_TRUE(Scalar(make_rat(22, 7)).is_rational());
  EXPECT_FALSE(Scalar::of(Constant::Pi).is_rational());
  EXPECT_FALSE(Scalar::make(Rat(3), Constant::Sqrt2, make_rat(1, 2)).is_rational());
  EXPECT_TRUE(Scalar::make(Rat(0), Constant::Pi, Rat(4)).is_rational());
}

TEST(Scalar, MixedConstantsDoNotAdd) {
  EXPECT_FALSE(try_add(Scalar::of(Constant::Pi), Scalar::of(Constant::E)).has_value());
  auto d = try_sub(Scalar::of(Constant::Pi), Scalar::of(Constant::Pi));
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(*d, Scalar(Rat(0)));
}

TEST(Scalar, EncloseRejectsNonPositiveEps) {
  EXPECT_THROW(enclose(Scalar::of(Constant::Pi), Rat(0)), Error);
}

TEST(ScalarProperty, OrderIsTotalOnRandomTriples) {
  std::mt19937_64 rng(11);
  auto draw = [&] {
    Rat q = make_rat(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 7) + 1);
    switch (rng() % 4) {
      case 0: return Scalar(q);
      case 1: return Scalar::make(make_rat(static_cast<long>(rng() % 5) + 1, 2), Constant::Sqrt2, q);
      case 2: return Scalar::make(Rat(1), Constant::Pi, q);
      default: return Scalar::make(Rat(-1), Constant::E, q);
    }
  };
  for (int i = 0; i < 300; ++i) {
    Scalar a = draw(), b = draw(), c = draw();
    EXPECT_EQ(scalar_cmp(a, b), 0 <=> scalar_cmp(b, a));
    if (scalar_cmp(a, b) <= 0 && scalar_cmp(b, c) <= 0) {
      EXPECT_TRUE(scalar_cmp(a, c) <= 0);
    }
    // Agreement with double arithmetic when the gap is wide.
    double da = to_double(a), db = to_double(b);
    if (std::abs(da - db) > 1e-6) {
      EXPECT_EQ(scalar_cmp(a, b) < 0, da < db);
    }
  }
}

TEST(ScalarProperty, RationalComparisonAgrees) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 500; ++i) {
    Rat a = make_rat(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 97) + 1);
    Rat b = make_rat(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 97) + 1);
    EXPECT_EQ(scalar_cmp(Scalar(a), Scalar(b)), rat_cmp(a, b));
  }
}

TEST(Rational, ParseAndReject) {
  EXPECT_EQ(parse_rat("-3/6"), make_rat(-1, 2));
  EXPECT_EQ(parse_rat("7"), Rat(7));
  EXPECT_THROW(parse_rat("1/0"), Error);
  EXPECT_THROW(parse_rat("x"), Error);
}

TEST(Estimate, BoundsArithmetic) {
  Rat eps = make_rat(1, 1000);
  Estimate a = Estimate::bounds(Rat(1), Rat(2));
  Estimate b(Scalar(Rat(3)));
  Estimate s = est_add(a, b, eps);
  EXPECT_EQ(s.lower(eps), Rat(4));
  EXPECT_EQ(s.upper(eps), Rat(5));
  EXPECT_EQ(est_cmp(b, a, eps), std::strong_ordering::greater);
  EXPECT_FALSE(est_cmp(a, Estimate(Scalar(make_rat(3, 2))), eps).has_value());
}

TEST(Periodic, AffineAndPoints) {
  PeriodicSet z = PeriodicSet::integers();
  PeriodicSet h = z.affine(make_rat(1, 2), Rat(0));
  EXPECT_TRUE(h.contains(make_rat(1, 2)));
  EXPECT_FALSE(h.contains(make_rat(1, 3)));
  auto pts = z.points_between(Rat(-1), Rat(2), 100);
  ASSERT_EQ(pts.size(), 2u);  // open window
  EXPECT_EQ(pts.front(), Rat(0));
}
