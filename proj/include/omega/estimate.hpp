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

#ifndef OMEGA_ESTIMATE_HPP
#define OMEGA_ESTIMATE_HPP

#include <optional>
#include <string>
#include <utility>

#include "omega/rational.hpp"
#include "omega/scalar.hpp"

namespace omega {

/// A real that is either known exactly as a Scalar or only through a
/// rational enclosure. Arithmetic stays exact while results fit the Scalar
/// grammar and degrades to enclosures of width about `eps` otherwise.
class Estimate {
 public:
  Estimate() = default;
  Estimate(const Scalar& s) : exact_(s) {}  // NOLINT
  Estimate(const Rat& q) : exact_(Scalar(q)) {}  // NOLINT

  static Estimate bounds(const Rat& lo, const Rat& hi) {
    Estimate e;
    e.exact_.reset();
    e.lo_ = lo;
    e.hi_ = hi;
    if (lo == hi) e.exact_ = Scalar(lo);
    return e;
  }

  bool is_exact() const { return exact_.has_value(); }
  const Scalar& exact() const { return *exact_; }

  RatInterval enclosure(const Rat& eps) const {
    if (exact_) return enclose(*exact_, eps);
    return {lo_, hi_};
  }
  Rat lower(const Rat& eps) const { return enclosure(eps).lo; }
  Rat upper(const Rat& eps) const { return enclosure(eps).hi; }

  std::string str() const {
    if (exact_) return exact_->str();
    return "[" + to_string(lo_) + ", " + to_string(hi_) + "]";
  }

 private:
  std::optional<Scalar> exact_ = Scalar();
  Rat lo_;
  Rat hi_;
};

inline Estimate est_add(const Estimate& a, const Estimate& b, const Rat& eps) {
  if (a.is_exact() && b.is_exact())
    if (auto s = try_add(a.exact(), b.exact())) return *s;
  RatInterval x = a.enclosure(eps), y = b.enclosure(eps);
  return Estimate::bounds(Rat(x.lo + y.lo), Rat(x.hi + y.hi));
}

inline Estimate est_neg(const Estimate& a, const Rat& eps) {
  if (a.is_exact()) return -a.exact();
  RatInterval x = a.enclosure(eps);
  return Estimate::bounds(Rat(-x.hi), Rat(-x.lo));
}

inline Estimate est_sub(const Estimate& a, const Estimate& b, const Rat& eps) {
  return est_add(a, est_neg(b, eps), eps);
}

inline Estimate est_scale(const Estimate& a, const Rat& k, const Rat& eps) {
  if (a.is_exact()) return a.exact().affine(k, Rat(0));
  RatInterval x = a.enclosure(eps);
  Rat p = k * x.lo, q = k * x.hi;
  if (p > q) std::swap(p, q);
  return Estimate::bounds(p, q);
}

/// Three-way comparison when decidable from the data at hand.
inline std::optional<std::strong_ordering> est_cmp(const Estimate& a, const Estimate& b,
                                                   const Rat& eps) {
  if (a.is_exact() && b.is_exact()) return scalar_cmp(a.exact(), b.exact());
  RatInterval x = a.enclosure(eps), y = b.enclosure(eps);
  if (x.hi < y.lo) return std::strong_ordering::less;
  if (x.lo > y.hi) return std::strong_ordering::greater;
  return std::nullopt;
}

inline Estimate est_min(const Estimate& a, const Estimate& b, const Rat& eps) {
  if (auto c = est_cmp(a, b, eps)) return *c <= 0 ? a : b;
  RatInterval x = a.enclosure(eps), y = b.enclosure(eps);
  return Estimate::bounds(x.lo < y.lo ? x.lo : y.lo, x.hi < y.hi ? x.hi : y.hi);
}

inline Estimate est_max(const Estimate& a, const Estimate& b, const Rat& eps) {
  if (auto c = est_cmp(a, b, eps)) return *c >= 0 ? a : b;
  RatInterval x = a.enclosure(eps), y = b.enclosure(eps);
  return Estimate::bounds(x.lo > y.lo ? x.lo : y.lo, x.hi > y.hi ? x.hi : y.hi);
}

}  // namespace omega

#endif  // OMEGA_ESTIMATE_HPP
