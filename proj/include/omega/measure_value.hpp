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

#ifndef OMEGA_MEASURE_VALUE_HPP
#define OMEGA_MEASURE_VALUE_HPP

#include <compare>
#include <optional>
#include <string>

#include "omega/estimate.hpp"
#include "omega/rational.hpp"
#include "omega/scalar.hpp"

namespace omega {

/// A nonnegative extended real: exact, bracketed by rationals, or infinite.
class MeasureValue {
 public:
  enum class Kind { Exact, Bounds, Infinite };

  MeasureValue() = default;

  static MeasureValue exact(const Scalar& v) {
    MeasureValue m;
    m.kind_ = Kind::Exact;
    m.value_ = v;
    return m;
  }
  static MeasureValue bounds(const Rat& lo, const Rat& hi) {
    if (lo > hi) fail(ErrorKind::InvalidArgument, "measure bounds out of order");
    if (lo == hi) return exact(Scalar(lo));
    MeasureValue m;
    m.kind_ = Kind::Bounds;
    m.lo_ = lo;
    m.hi_ = hi;
    return m;
  }
  static MeasureValue infinite() {
    MeasureValue m;
    m.kind_ = Kind::Infinite;
    return m;
  }
  static MeasureValue from(const Estimate& e) {
    if (e.is_exact()) return exact(e.exact());
    RatInterval r = e.enclosure(Rat(1));
    return bounds(r.lo, r.hi);
  }

  Kind kind() const { return kind_; }
  bool is_exact() const { return kind_ == Kind::Exact; }
  bool is_infinite() const { return kind_ == Kind::Infinite; }
  const Scalar& value() const { return value_; }

  /// Rational enclosure; only for finite values.
  RatInterval enclosure(const Rat& eps) const {
    if (kind_ == Kind::Exact) return enclose(value_, eps);
    return {lo_, hi_};
  }
  Estimate estimate() const {
    if (kind_ == Kind::Exact) return value_;
    return Estimate::bounds(lo_, hi_);
  }

  std::string str() const {
    switch (kind_) {
      case Kind::Exact: return value_.str();
      case Kind::Bounds: return "[" + to_string(lo_) + ", " + to_string(hi_) + "]";
      case Kind::Infinite: return "inf";
    }
    return {};
  }

  bool operator==(const MeasureValue& o) const {
    if (kind_ != o.kind_) return false;
    if (kind_ == Kind::Exact) return value_ == o.value_;
    if (kind_ == Kind::Bounds) return lo_ == o.lo_ && hi_ == o.hi_;
    return true;
  }

 private:
  Kind kind_ = Kind::Exact;
  Scalar value_;
  Rat lo_, hi_;
};

inline MeasureValue measure_add(const MeasureValue& a, const MeasureValue& b, const Rat& eps) {
  if (a.is_infinite() || b.is_infinite()) return MeasureValue::infinite();
  return MeasureValue::from(est_add(a.estimate(), b.estimate(), eps));
}

/// Order when decidable; infinite values compare equal to each other.
inline std::optional<std::strong_ordering> measure_cmp(const MeasureValue& a,
                                                       const MeasureValue& b, const Rat& eps) {
  if (a.is_infinite() || b.is_infinite()) {
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return est_cmp(a.estimate(), b.estimate(), eps);
}

}  // namespace omega

#endif  // OMEGA_MEASURE_VALUE_HPP
