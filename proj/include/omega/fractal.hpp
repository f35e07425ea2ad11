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

#ifndef OMEGA_FRACTAL_HPP
#define OMEGA_FRACTAL_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "omega/errors.hpp"
#include "omega/rational.hpp"
#include "omega/scalar.hpp"

namespace omega {

enum class FractalKind { Cantor, Svc };

/// A rational-parameter fractal atom on a closed bounded base [lo, hi].
///
/// Cantor: every surviving interval loses its central open fraction `param`.
/// Svc: stage n removes total length |base| * param^n, split equally as
/// central open gaps among the 2^(n-1) intervals surviving stage n-1.
struct FractalAtom {
  FractalKind kind = FractalKind::Cantor;
  Rat lo;
  Rat hi;
  Rat param;

  static FractalAtom cantor(const Rat& lo, const Rat& hi, const Rat& ratio) {
    if (!(lo < hi)) fail(ErrorKind::InvalidArgument, "cantor base must satisfy lo < hi");
    if (!(ratio > 0 && ratio < 1))
      fail(ErrorKind::InvalidArgument, "cantor ratio must lie in (0,1)");
    return {FractalKind::Cantor, lo, hi, ratio};
  }

  static FractalAtom svc(const Rat& lo, const Rat& hi, const Rat& beta) {
    if (!(lo < hi)) fail(ErrorKind::InvalidArgument, "svc base must satisfy lo < hi");
    if (!(beta > 0 && beta < make_rat(1, 2)))
      fail(ErrorKind::InvalidArgument, "svc beta must lie in (0,1/2)");
    // Gap n fits strictly inside its host iff sum_{k<=n} beta^k < 1 for all n,
    // i.e. beta / (1 - beta) < 1.
    if (!(beta / (1 - beta) < 1))
      fail(ErrorKind::InvalidArgument, "svc gaps do not fit inside their hosts");
    return {FractalKind::Svc, lo, hi, beta};
  }

  Rat length() const { return Rat(hi - lo); }

  bool operator==(const FractalAtom&) const = default;

  std::string str() const {
    return std::string(kind == FractalKind::Cantor ? "cantor" : "svc") + "([" +
           to_string(lo) + "," + to_string(hi) + "]," + to_string(param) + ")";
  }
};

/// A closed interval surviving construction stage `stage`.
struct StageInterval {
  unsigned stage = 0;
  Rat lo;
  Rat hi;

  Rat width() const { return Rat(hi - lo); }
  bool operator==(const StageInterval&) const = default;
};

inline StageInterval root_interval(const FractalAtom& f) { return {0, f.lo, f.hi}; }

/// Length of the open gap removed from J at the next stage.
inline Rat gap_length(const FractalAtom& f, const StageInterval& j) {
  if (f.kind == FractalKind::Cantor) return Rat(j.width() * f.param);
  return Rat(f.length() * rat_pow(f.param, j.stage + 1) / pow2(j.stage));
}

inline std::pair<StageInterval, StageInterval> children(const FractalAtom& f,
                                                        const StageInterval& j) {
  Rat child = (j.width() - gap_length(f, j)) / 2;
  return {StageInterval{j.stage + 1, j.lo, Rat(j.lo + child)},
          StageInterval{j.stage + 1, Rat(j.hi - child), j.hi}};
}

/// Exact measure of F inside the stage interval J.
inline Rat stage_measure(const FractalAtom& f, const StageInterval& j) {
  if (f.kind == FractalKind::Cantor) return Rat(0);
  // Remaining removals below stage n inside J total |base| beta^(n+1) / ((1-beta) 2^n).
  Rat tail = f.length() * rat_pow(f.param, j.stage + 1) / ((1 - f.param) * pow2(j.stage));
  return Rat(j.width() - tail);
}

inline Rat total_measure(const FractalAtom& f) { return stage_measure(f, root_interval(f)); }

inline FractalAtom affine(const FractalAtom& f, const Rat& a, const Rat& b) {
  Rat x = a * f.lo + b, y = a * f.hi + b;
  if (x > y) std::swap(x, y);
  return {f.kind, x, y, f.param};
}

enum class Location { Outside, InGap, LeftEndpoint, RightEndpoint, Interior, Unknown };

inline bool is_member(Location l) {
  return l == Location::LeftEndpoint || l == Location::RightEndpoint || l == Location::Interior;
}

inline constexpr unsigned kDefaultStageBudget = 256;

/// Where x sits relative to F. Endpoints of stage intervals are members that
/// are isolated on one side; Interior members accumulate from both sides.
/// Cantor orbits of rational points are eventually periodic or expelled, so
/// cycle detection on the relative position decides them; otherwise the
/// descent stops after `budget` stages with Unknown.
inline Location locate(const FractalAtom& f, const Scalar& x,
                       unsigned budget = kDefaultStageBudget) {
  try {
    StageInterval j = root_interval(f);
    if (x < Scalar(j.lo) || x > Scalar(j.hi)) return Location::Outside;
    std::set<Rat> seen;
    for (unsigned step = 0; step < budget; ++step) {
      if (x == Scalar(j.lo)) return Location::LeftEndpoint;
      if (x == Scalar(j.hi)) return Location::RightEndpoint;
      if (f.kind == FractalKind::Cantor && x.is_rational()) {
        Rat t = (x.rational() - j.lo) / j.width();
        if (!seen.insert(t).second) return Location::Interior;
      }
      auto [left, right] = children(f, j);
      if (x == Scalar(left.hi)) return Location::RightEndpoint;
      if (x == Scalar(right.lo)) return Location::LeftEndpoint;
      if (x < Scalar(left.hi)) {
        j = left;
      } else if (x > Scalar(right.lo)) {
        j = right;
      } else {
        return Location::InGap;
      }
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::IndependenceUnknown) throw;
  }
  return Location::Unknown;
}

/// Smallest stage interval containing F ∩ (a, b), or nullopt when empty.
inline std::optional<StageInterval> minimal_stage(const FractalAtom& f, const Scalar& a,
                                                  const Scalar& b) {
  StageInterval j = root_interval(f);
  if (!(Scalar(j.lo) < b && a < Scalar(j.hi))) return std::nullopt;
  for (unsigned step = 0; step < 100000; ++step) {
    auto [left, right] = children(f, j);
    bool meets_left = a < Scalar(left.hi) && Scalar(left.lo) < b;
    bool meets_right = a < Scalar(right.hi) && Scalar(right.lo) < b;
    if (meets_left && meets_right) return j;
    if (!meets_left && !meets_right) return std::nullopt;
    j = meets_left ? left : right;
    // (a, b) spans the whole interval: both children are met next round.
  }
  fail(ErrorKind::UnsupportedCombination, "stage descent did not terminate");
}

inline bool meets_open(const FractalAtom& f, const Scalar& a, const Scalar& b) {
  return minimal_stage(f, a, b).has_value();
}

/// Infimum of F ∩ (a, +inf); precondition: that set is nonempty.
/// Returns nullopt when the descent budget runs out.
inline std::optional<Scalar> leftmost_above(const FractalAtom& f, const Scalar& a,
                                            unsigned budget = kDefaultStageBudget) {
  try {
    StageInterval j = root_interval(f);
    if (a < Scalar(j.lo)) return Scalar(j.lo);
    std::set<Rat> seen;
    for (unsigned step = 0; step < budget; ++step) {
      if (a == Scalar(j.lo)) return a;
      if (f.kind == FractalKind::Cantor && a.is_rational()) {
        Rat t = (a.rational() - j.lo) / j.width();
        if (!seen.insert(t).second) return a;
      }
      auto [left, right] = children(f, j);
      if (a < Scalar(left.hi)) {
        j = left;
      } else if (a < Scalar(right.lo)) {
        return Scalar(right.lo);
      } else {
        j = right;
      }
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::IndependenceUnknown) throw;
  }
  return std::nullopt;
}

/// Supremum of F ∩ (-inf, b); precondition: that set is nonempty.
inline std::optional<Scalar> rightmost_below(const FractalAtom& f, const Scalar& b,
                                             unsigned budget = kDefaultStageBudget) {
  FractalAtom mirrored = affine(f, Rat(-1), Rat(0));
  auto r = leftmost_above(mirrored, -b, budget);
  if (!r) return std::nullopt;
  return -*r;
}

/// Stage-k intervals meeting the closed interval [a, b], left to right.
inline std::vector<StageInterval> stage_intervals(const FractalAtom& f, const Scalar& a,
                                                  const Scalar& b, unsigned k) {
  std::vector<StageInterval> out;
  std::vector<StageInterval> stack{root_interval(f)};
  while (!stack.empty()) {
    StageInterval j = stack.back();
    stack.pop_back();
    if (Scalar(j.hi) < a || b < Scalar(j.lo)) continue;
    if (j.stage == k) {
      out.push_back(j);
      continue;
    }
    auto [left, right] = children(f, j);
    stack.push_back(right);
    stack.push_back(left);
  }
  return out;
}

/// Bounds on the measure of F ∩ (a, b), refining at most `depth` stages.
inline RatInterval measure_in(const FractalAtom& f, const Scalar& a, const Scalar& b,
                              unsigned depth) {
  if (f.kind == FractalKind::Cantor) return {Rat(0), Rat(0)};
  RatInterval total{Rat(0), Rat(0)};
  std::vector<StageInterval> stack{root_interval(f)};
  while (!stack.empty()) {
    StageInterval j = stack.back();
    stack.pop_back();
    if (!(Scalar(j.lo) < b && a < Scalar(j.hi))) continue;
    if (a <= Scalar(j.lo) && Scalar(j.hi) <= b) {
      Rat m = stage_measure(f, j);
      total.lo += m;
      total.hi += m;
      continue;
    }
    if (j.stage >= depth) {
      total.hi += stage_measure(f, j);
      continue;
    }
    auto [left, right] = children(f, j);
    stack.push_back(left);
    stack.push_back(right);
  }
  return total;
}

/// True when [lo, hi] is one of the stage intervals of `big`.
inline bool is_stage_interval_of(const FractalAtom& big, const Rat& lo, const Rat& hi) {
  StageInterval j = root_interval(big);
  if (lo < j.lo || hi > j.hi) return false;
  Rat target = hi - lo;
  while (j.width() > target) {
    auto [left, right] = children(big, j);
    if (left.lo <= lo && hi <= left.hi) {
      j = left;
    } else if (right.lo <= lo && hi <= right.hi) {
      j = right;
    } else {
      return false;
    }
  }
  return j.lo == lo && j.hi == hi;
}

}  // namespace omega

#endif  // OMEGA_FRACTAL_HPP
