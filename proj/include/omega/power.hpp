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

#ifndef OMEGA_POWER_HPP
#define OMEGA_POWER_HPP

#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "omega/attributes.hpp"
#include "omega/hausdorff.hpp"
#include "omega/outer_measure.hpp"

namespace omega {

/// { T : d_H(center, T) < radius }.
struct HBall {
  SetExpr center;
  Rat radius;

  static HBall make(const SetExpr& center, const Rat& radius) {
    if (radius <= 0) fail(ErrorKind::InvalidArgument, "ball radius must be positive");
    CanonicalSet c = normalize(center);
    if (detail::definitely_empty(c))
      fail(ErrorKind::InvalidCenter, "ball center must be nonempty: " + center.str());
    return HBall{center, radius};
  }
  std::string str() const { return "ball(" + center.str() + ", " + to_string(radius) + ")"; }
  bool operator==(const HBall& o) const { return center == o.center && radius == o.radius; }
};

struct UnionOfBalls {
  std::vector<HBall> balls;
  bool operator==(const UnionOfBalls&) const = default;
};

struct FiniteFamily {
  std::vector<SetExpr> members;
  bool operator==(const FiniteFamily&) const = default;
};

struct AllOfPX {
  MetricSpaceModel space;
  bool operator==(const AllOfPX&) const = default;
};

using PowerCollection = std::variant<HBall, UnionOfBalls, FiniteFamily, AllOfPX>;

inline std::string collection_str(const PowerCollection& p) {
  if (auto b = std::get_if<HBall>(&p)) return b->str();
  if (auto u = std::get_if<UnionOfBalls>(&p)) {
    std::string out;
    for (std::size_t i = 0; i < u->balls.size(); ++i) out += (i ? " | " : "") + u->balls[i].str();
    return out;
  }
  if (auto f = std::get_if<FiniteFamily>(&p)) {
    std::string out = "family{";
    for (std::size_t i = 0; i < f->members.size(); ++i) out += (i ? ", " : "") + f->members[i].str();
    return out + "}";
  }
  return "allsets";
}

struct BallMembership {
  bool member = false;
  std::vector<std::string> warnings;
};

/// Strict test d_H(center, T) < r.
inline BallMembership ball_contains(const HBall& b, const SetExpr& t, const HausdorffConfig& cfg = {}) {
  BallMembership out;
  HResult d = hausdorff_distance(b.center, t, cfg);
  out.warnings = d.warnings;
  if (d.value.is_infinite()) return out;
  Scalar r(b.radius);
  if (d.value.is_exact()) {
    auto c = scalar_cmp(d.value.value(), r);
    out.member = c < 0;
    if (c == 0) out.warnings.push_back("boundary: distance equals radius " + to_string(b.radius));
    return out;
  }
  RatInterval bounds = d.value.enclosure(cfg.tol);
  if (bounds.hi < b.radius) {
    out.member = true;
    return out;
  }
  if (bounds.lo >= b.radius) {
    if (bounds.lo == b.radius) out.warnings.push_back("boundary: distance equals radius");
    return out;
  }
  fail(ErrorKind::ToleranceStraddle, "distance bounds " + d.value.str() + " straddle radius " +
                                         to_string(b.radius) + "; lower the tolerance");
}

inline BallMembership collection_contains(const PowerCollection& p, const SetExpr& t,
                                          const HausdorffConfig& cfg = {}) {
  if (auto b = std::get_if<HBall>(&p)) return ball_contains(*b, t, cfg);
  if (auto u = std::get_if<UnionOfBalls>(&p)) {
    BallMembership out;
    for (const HBall& b : u->balls) {
      BallMembership m = ball_contains(b, t, cfg);
      out.warnings.insert(out.warnings.end(), m.warnings.begin(), m.warnings.end());
      if (m.member) {
        out.member = true;
        break;
      }
    }
    return out;
  }
  if (auto f = std::get_if<FiniteFamily>(&p)) {
    BallMembership out;
    for (const SetExpr& m : f->members)
      if (semantically_equal(m, t)) out.member = true;
    return out;
  }
  const auto& all = std::get<AllOfPX>(p);
  if (!std::holds_alternative<RealLine>(all.space))
    fail(ErrorKind::InvalidArgument, "a set of reals is not a subset of a finite space");
  return {true, {}};
}

/// A real interval, possibly empty.
struct Trace {
  std::optional<std::pair<Scalar, Scalar>> open;
  bool empty() const { return !open.has_value(); }
  std::string str() const {
    if (!open) return "EMPTY";
    return "(" + open->first.str() + "," + open->second.str() + ")";
  }
};

/// { x : {x} in B } = (sup C - r, inf C + r).
inline Trace singleton_trace(const HBall& b) {
  CanonicalSet c = normalize(b.center);
  if (detail::definitely_empty(c)) fail(ErrorKind::InvalidCenter, "empty ball center");
  if (!is_bounded(c)) fail(ErrorKind::UnboundedCenter, "unbounded ball center " + b.center.str());
  auto h = hull_of(c);
  Scalar lo = h->hi.value().affine(Rat(1), Rat(-b.radius));
  Scalar hi = h->lo.value().affine(Rat(1), b.radius);
  if (!(lo < hi)) return {};
  return {std::make_pair(lo, hi)};
}

/// Certified lower bound for |window| minus the part of the window whose
/// singletons lie in the cover.
inline Rat mu_singleton_lower_bound(const std::vector<HBall>& cover, const Rat& wlo, const Rat& whi,
                                    const MeasureConfig& cfg = {}) {
  if (whi < wlo) fail(ErrorKind::InvalidArgument, "window bounds out of order");
  CanonicalSet covered = canonical_empty();
  for (const HBall& b : cover) {
    Trace t = singleton_trace(b);
    if (t.empty()) continue;
    covered = set_union(covered, canonical_interval(IntervalAtom{t.open->first, t.open->second, false, false}));
  }
  CanonicalSet inside = set_intersection(covered, canonical_interval(IntervalAtom{wlo, whi, true, true}));
  MeasureValue m = lebesgue_measure(inside, cfg);
  Rat len = whi - wlo;
  if (m.is_exact() && m.value().is_rational()) return Rat(len - m.value().rational());
  return Rat(len - m.enclosure(cfg.eps).hi);
}

struct MuResult {
  MeasureValue value;
  std::vector<std::string> warnings;
};

inline MuResult mu(const PowerCollection& p, const HausdorffConfig& cfg = {}) {
  MuResult out;
  if (auto b = std::get_if<HBall>(&p)) {
    out.value = MeasureValue::exact(Scalar(Rat(2 * b->radius)));
    return out;
  }
  if (std::holds_alternative<FiniteFamily>(p)) {
    out.value = MeasureValue::exact(Scalar(0));
    return out;
  }
  if (auto all = std::get_if<AllOfPX>(&p)) {
    out.value = std::holds_alternative<RealLine>(all->space) ? MeasureValue::infinite()
                                                             : MeasureValue::exact(Scalar(0));
    return out;
  }
  const auto& u = std::get<UnionOfBalls>(p);
  if (u.balls.empty()) fail(ErrorKind::InvalidArgument, "empty union of balls");
  std::vector<bool> alive(u.balls.size(), true);
  for (std::size_t i = 0; i < u.balls.size(); ++i) {
    for (std::size_t j = 0; j < u.balls.size() && alive[i]; ++j) {
      if (i == j || !alive[j] || u.balls[i].radius > u.balls[j].radius) continue;
      HResult d = hausdorff_distance(u.balls[i].center, u.balls[j].center, cfg);
      if (d.value.is_infinite()) continue;
      Rat hi = d.value.enclosure(cfg.tol).hi;
      if (hi + u.balls[i].radius <= u.balls[j].radius) alive[i] = false;
    }
  }
  Rat biggest(0), sum(0);
  std::size_t kept = 0;
  for (std::size_t i = 0; i < u.balls.size(); ++i) {
    if (!alive[i]) continue;
    ++kept;
    Rat d = 2 * u.balls[i].radius;
    biggest = std::max(biggest, d);
    sum += d;
  }
  out.value = kept == 1 ? MeasureValue::exact(Scalar(biggest)) : MeasureValue::bounds(biggest, sum);
  return out;
}

/// Finite(n) for finite sets, otherwise Omega subscripted by a measure.
struct Totality {
  enum class Kind { Finite, Omega };
  Kind kind = Kind::Finite;
  std::uint64_t n = 0;
  MeasureValue value;

  static Totality finite(std::uint64_t n) { return {Kind::Finite, n, {}}; }
  static Totality omega(const MeasureValue& v) { return {Kind::Omega, 0, v}; }

  std::string str() const {
    if (kind == Kind::Finite) return std::to_string(n);
    return "Omega_" + value.str();
  }
  bool operator==(const Totality& o) const {
    return kind == o.kind && n == o.n && (kind == Kind::Finite || value == o.value);
  }
};

/// Every finite totality is below every Omega; Omegas follow their subscripts.
inline std::strong_ordering compare_totality(const Totality& a, const Totality& b,
                                             const Rat& eps = make_rat(1, 1000000)) {
  if (a.kind != b.kind)
    return a.kind == Totality::Kind::Finite ? std::strong_ordering::less
                                            : std::strong_ordering::greater;
  if (a.kind == Totality::Kind::Finite) return a.n <=> b.n;
  auto c = measure_cmp(a.value, b.value, eps);
  if (!c)
    fail(ErrorKind::Indeterminate,
         "cannot order " + a.str() + " and " + b.str() + " from the available bounds");
  return *c;
}

inline Totality set_totality(const RealLine&, const SetExpr& a, const MeasureConfig& cfg = {}) {
  SizeClass s = size_of(a);
  if (s.kind == SizeClass::Kind::Finite) return Totality::finite(s.count);
  return Totality::omega(measure_of(a, cfg));
}

inline Totality set_totality(const FiniteSpace& space, const std::vector<std::string>& subset) {
  std::vector<std::size_t> idx;
  for (const std::string& s : subset) idx.push_back(space.index_of(s));
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return Totality::finite(idx.size());
}

inline std::size_t distinct_members(const FiniteFamily& f) {
  std::vector<CanonicalSet> seen;
  for (const SetExpr& m : f.members) {
    CanonicalSet c = normalize(m);
    if (std::find(seen.begin(), seen.end(), c) == seen.end()) seen.push_back(std::move(c));
  }
  return seen.size();
}

inline Totality collection_totality(const PowerCollection& p, const HausdorffConfig& cfg = {}) {
  if (auto f = std::get_if<FiniteFamily>(&p)) return Totality::finite(distinct_members(*f));
  MuResult m = mu(p, cfg);
  if (m.value.kind() == MeasureValue::Kind::Bounds)
    fail(ErrorKind::BoundsNotExact, "mu of " + collection_str(p) + " is only known as " + m.value.str());
  return Totality::omega(m.value);
}

/// (0, v): a ball of diameter v.
inline SetExpr witness_set(const Rat& v) {
  if (v <= 0) fail(ErrorKind::InvalidArgument, "witness value must be positive");
  return SetExpr::open(Scalar(0), Scalar(v));
}

/// A Hausdorff ball of radius v/2.
inline HBall witness_collection(const Rat& v) {
  if (v <= 0) fail(ErrorKind::InvalidArgument, "witness value must be positive");
  return HBall::make(SetExpr::closed(Scalar(0), Scalar(1)), Rat(v / 2));
}

}  // namespace omega

#endif  // OMEGA_POWER_HPP
