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

#ifndef OMEGA_OUTER_MEASURE_HPP
#define OMEGA_OUTER_MEASURE_HPP

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

#include "omega/attributes.hpp"
#include "omega/canonical.hpp"
#include "omega/errors.hpp"
#include "omega/measure_value.hpp"

namespace omega {

/// ℝ with d(x, y) = |x - y|.
struct RealLine {
  bool operator==(const RealLine&) const = default;
};

/// A finite metric space given by labels and a distance matrix.
class FiniteSpace {
 public:
  FiniteSpace(std::vector<std::string> labels, std::vector<std::vector<Rat>> dist)
      : labels_(std::move(labels)), dist_(std::move(dist)) {
    std::size_t n = labels_.size();
    if (dist_.size() != n) fail(ErrorKind::InvalidArgument, "distance matrix has wrong size");
    for (const auto& row : dist_)
      if (row.size() != n) fail(ErrorKind::InvalidArgument, "distance matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (labels_[i] == labels_[j]) fail(ErrorKind::InvalidArgument, "duplicate label " + labels_[i]);
    for (std::size_t i = 0; i < n; ++i) {
      if (dist_[i][i] != 0) fail(ErrorKind::InvalidArgument, "nonzero diagonal distance");
      for (std::size_t j = 0; j < n; ++j) {
        if (dist_[i][j] != dist_[j][i]) fail(ErrorKind::InvalidArgument, "asymmetric distance");
        if (i != j && dist_[i][j] <= 0)
          fail(ErrorKind::InvalidArgument, "distinct points at distance <= 0");
        for (std::size_t k = 0; k < n; ++k)
          if (dist_[i][k] > dist_[i][j] + dist_[j][k])
            fail(ErrorKind::InvalidArgument, "triangle inequality fails at " + labels_[i] + ", " +
                                                 labels_[j] + ", " + labels_[k]);
      }
    }
  }

  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }

  std::size_t index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) fail(ErrorKind::InvalidCenter, "no point labelled '" + label + "'");
    return static_cast<std::size_t>(it - labels_.begin());
  }
  const Rat& distance(const std::string& a, const std::string& b) const {
    return dist_[index_of(a)][index_of(b)];
  }
  bool operator==(const FiniteSpace&) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Rat>> dist_;
};

using MetricSpaceModel = std::variant<RealLine, FiniteSpace>;

inline std::string space_name(const MetricSpaceModel& m) {
  if (std::holds_alternative<RealLine>(m)) return "RealLine";
  return "FiniteSpace(" + std::to_string(std::get<FiniteSpace>(m).size()) + ")";
}

/// Diameter length of an open ball: 2r in every space.
inline Rat ball_premeasure(const RealLine&, const Scalar&, const Rat& r) {
  if (r <= 0) fail(ErrorKind::InvalidArgument, "ball radius must be positive");
  return Rat(2 * r);
}

inline Rat ball_premeasure(const FiniteSpace& space, const std::string& center, const Rat& r) {
  space.index_of(center);
  if (r <= 0) fail(ErrorKind::InvalidArgument, "ball radius must be positive");
  return Rat(2 * r);
}

inline MeasureValue metric_outer_measure(const RealLine&, const SetExpr& a,
                                         const MeasureConfig& cfg = {}) {
  return measure_of(a, cfg);
}

/// Every subset of a finite space is covered by arbitrarily small balls.
inline MeasureValue metric_outer_measure(const FiniteSpace& space,
                                         const std::vector<std::string>& subset) {
  for (const std::string& s : subset) space.index_of(s);
  return MeasureValue::exact(Scalar(0));
}

namespace detail {

struct ClosedPiece {
  Scalar lo;
  Scalar hi;
};

inline Estimate cover_length(const std::vector<ClosedPiece>& sorted, const Rat& eps) {
  Estimate total;
  std::size_t i = 0;
  while (i < sorted.size()) {
    Scalar lo = sorted[i].lo, hi = sorted[i].hi;
    std::size_t j = i + 1;
    while (j < sorted.size() && sorted[j].lo <= hi) {
      hi = scalar_max(hi, sorted[j].hi);
      ++j;
    }
    total = est_add(total, est_sub(hi, lo, eps), eps);
    i = j;
  }
  return total;
}

}  // namespace detail

/// Total diameter of the one-ball-per-merged-interval cover of the
/// stage-`depth` superset of A. Rounded up to a rational when the exact sum
/// leaves the scalar grammar.
inline Scalar greedy_cover_bound(const SetExpr& a, unsigned depth,
                                 const Rat& eps = make_rat(1, 1000000)) {
  CanonicalSet s = normalize(a);
  if (!is_bounded(s)) fail(ErrorKind::UnboundedSet, "cover bound needs a bounded set: " + a.str());
  std::vector<detail::ClosedPiece> pieces;
  for (std::size_t i = 1; i + 1 < s.cells.size(); ++i) {
    const CellPattern& p = s.cells[i];
    if (p.empty()) continue;
    const Scalar &lo = s.breaks[i - 1], &hi = s.breaks[i];
    if (p.bits[0][kIrrational] || p.bits[0][kRational]) {
      pieces.push_back({lo, hi});
      continue;
    }
    for (const StageInterval& j : stage_intervals(*p.fractal, lo, hi, depth)) {
      Scalar l = scalar_max(lo, Scalar(j.lo)), h = scalar_min(hi, Scalar(j.hi));
      if (l < h) pieces.push_back({l, h});
    }
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const auto& x, const auto& y) { return x.lo < y.lo; });
  Estimate total = detail::cover_length(pieces, eps);
  if (total.is_exact()) return total.exact();
  return Scalar(total.upper(eps));
}

}  // namespace omega

#endif  // OMEGA_OUTER_MEASURE_HPP
