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

#ifndef OMEGA_RANDOM_SETS_HPP
#define OMEGA_RANDOM_SETS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "omega/rational.hpp"
#include "omega/scalar.hpp"
#include "omega/set_expr.hpp"

namespace omega {

/// Seeded generator with a draw that does not depend on the standard
/// library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long range(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return lo + static_cast<long>(x % span);
  }
  bool coin(long num = 1, long den = 2) { return range(0, den - 1) < num; }
  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(range(0, static_cast<long>(v.size()) - 1))];
  }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Random expressions over a half-integer grid in [-6, 6]. Fractal atoms come
/// from a fixed pool with unit bases [k, k+1], so grid cuts land on base
/// endpoints or inside first-stage gaps.
class SetGenerator {
 public:
  explicit SetGenerator(Rng& rng) : rng_(rng) {}

  Rat grid() { return make_rat(rng_.range(-12, 12), 2); }

  /// Irrational points whose fractal membership is decided within the pool.
  Scalar irrational() {
    static const std::vector<Scalar> pool = {
        Scalar::of(Constant::Sqrt2),
        Scalar::make(Rat(2), Constant::Sqrt2, Rat(0)),
        Scalar::make(Rat(-1), Constant::Sqrt2, Rat(0)),
        Scalar::of(Constant::E),
        Scalar::make(make_rat(1, 4), Constant::Pi, Rat(0)),
    };
    return rng_.pick(pool);
  }

  Scalar point(bool allow_irrational = true) {
    if (allow_irrational && rng_.coin(1, 6)) return irrational();
    return grid();
  }

  static SetExpr pool_fractal(long k) {
    if (k % 2 == 0) return SetExpr::cantor(Rat(k), Rat(k + 1), make_rat(1, 3));
    return SetExpr::svc(Rat(k), Rat(k + 1), make_rat(1, 4));
  }

  SetExpr interval(bool bounded_only = false) {
    Rat a = grid(), b = grid();
    if (b < a) std::swap(a, b);
    if (a == b) return SetExpr::closed(a, b);
    ExtScalar lo = a, hi = b;
    if (!bounded_only && rng_.coin(1, 8)) lo = ExtScalar::minus_inf();
    if (!bounded_only && rng_.coin(1, 8)) hi = ExtScalar::plus_inf();
    return SetExpr::interval(lo, hi, lo.is_finite() && rng_.coin(), hi.is_finite() && rng_.coin());
  }

  SetExpr points(bool allow_irrational = true) {
    std::vector<Scalar> pts;
    long n = rng_.range(1, 4);
    for (long i = 0; i < n; ++i) pts.push_back(point(allow_irrational));
    return SetExpr::points(pts);
  }

  SetExpr atom() {
    switch (rng_.range(0, 9)) {
      case 0: return points();
      case 1: return rng_.coin(1, 3) ? SetExpr::rationals() : SetExpr::integers();
      case 2: return pool_fractal(rng_.range(-6, 5));
      case 3: return SetExpr::empty();
      default: return interval();
    }
  }

  SetExpr expr(int depth = 3) {
    if (depth <= 0 || rng_.coin(1, 3)) return atom();
    switch (rng_.range(0, 5)) {
      case 0:
      case 1: return SetExpr::unite({expr(depth - 1), expr(depth - 1)});
      case 2:
      case 3: return SetExpr::intersect({expr(depth - 1), expr(depth - 1)});
      case 4: return SetExpr::complement(expr(depth - 1));
      default:
        return SetExpr::affine(rng_.coin() ? Rat(1) : Rat(-1), Rat(rng_.range(-2, 2)),
                               expr(depth - 1));
    }
  }

  /// Bounded expression (intersected with a bounded interval).
  SetExpr bounded_expr(int depth = 3) {
    return SetExpr::intersect({expr(depth), interval(true)});
  }

  /// Closed bounded nonempty union of closed intervals and points, with
  /// endpoints that are rational or sqrt2 plus a rational.
  SetExpr closed_bounded(bool with_irrational = true) {
    std::vector<SetExpr> parts;
    long n = rng_.range(1, 4);
    bool family = with_irrational && rng_.coin(1, 4);
    for (long i = 0; i < n; ++i) {
      Rat a = grid(), b = grid();
      if (b < a) std::swap(a, b);
      bool irr = family && rng_.coin(1, 3);
      Scalar sa = irr ? Scalar::make(Rat(1), Constant::Sqrt2, a) : Scalar(a);
      Scalar sb = irr ? Scalar::make(Rat(1), Constant::Sqrt2, b) : Scalar(b);
      parts.push_back(rng_.coin(1, 3) ? SetExpr::point(sa) : SetExpr::closed(sa, sb));
    }
    return parts.size() == 1 ? parts.front() : SetExpr::unite(parts);
  }

 private:
  Rng& rng_;
};

}  // namespace omega

#endif  // OMEGA_RANDOM_SETS_HPP
