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

#ifndef OMEGA_HAUSDORFF_HPP
#define OMEGA_HAUSDORFF_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "omega/attributes.hpp"
#include "omega/canonical.hpp"
#include "omega/errors.hpp"
#include "omega/measure_value.hpp"

namespace omega {

/// Hausdorff distances share the exact / bounds / infinite shape of measures.
using HDist = MeasureValue;

struct HausdorffConfig {
  Rat tol = make_rat(1, 1000000);
  unsigned max_depth = 40;
  std::size_t max_pieces = std::size_t{1} << 18;
};

struct HResult {
  HDist value;
  std::vector<std::string> warnings;
};

namespace detail {

struct Piece {
  Scalar lo;
  Scalar hi;
};

struct Sandwich {
  std::vector<Piece> inner;
  std::vector<Piece> outer;
  bool approximate = false;
};

inline bool definitely_empty(const CanonicalSet& s) {
  for (const CellPattern& p : s.cells)
    if (!p.empty()) return false;
  bool symbolic = false;
  for (const PointStatus& st : s.status) {
    if (st.is_constant() && st.value()) return false;
    if (!st.is_constant()) symbolic = true;
  }
  if (symbolic)
    fail(ErrorKind::AttributeUnderdetermined, "emptiness depends on undecidable fractal membership");
  return true;
}

/// Inner and outer approximations of a closed bounded set: stage-k endpoints
/// of each fractal piece inside, clipped stage-k intervals outside.
inline Sandwich sandwich(const CanonicalSet& s, unsigned k) {
  Sandwich out;
  for (std::size_t i = 0; i < s.cells.size(); ++i) {
    const CellPattern& p = s.cells[i];
    if (!p.empty()) {
      if (!s.cell_bounded(i))
        fail(ErrorKind::UnboundedSet, "distance sandwich needs a bounded set");
      const Scalar &lo = s.breaks[i - 1], &hi = s.breaks[i];
      if (p.is_full()) {
        out.inner.push_back({lo, hi});
        out.outer.push_back({lo, hi});
      } else if (p.fractal) {
        out.approximate = true;
        for (const StageInterval& j : stage_intervals(*p.fractal, lo, hi, k)) {
          Scalar jl(j.lo), jh(j.hi);
          for (const Scalar& e : {jl, jh})
            if (lo < e && e < hi) out.inner.push_back({e, e});
          Scalar cl = scalar_max(lo, jl), ch = scalar_min(hi, jh);
          if (cl < ch) out.outer.push_back({cl, ch});
        }
      } else {
        fail(ErrorKind::UnsupportedCombination, "distance needs a closed set");
      }
    }
    if (i < s.breaks.size()) {
      const PointStatus& st = s.status[i];
      if (st.is_constant()) {
        if (st.value()) {
          out.inner.push_back({s.breaks[i], s.breaks[i]});
          out.outer.push_back({s.breaks[i], s.breaks[i]});
        }
      } else {
        out.approximate = true;
        out.outer.push_back({s.breaks[i], s.breaks[i]});
      }
    }
  }
  auto by_lo = [](const Piece& a, const Piece& b) { return a.lo < b.lo; };
  std::sort(out.inner.begin(), out.inner.end(), by_lo);
  std::sort(out.outer.begin(), out.outer.end(), by_lo);
  return out;
}

inline std::vector<Piece> merge_pieces(const std::vector<Piece>& sorted) {
  std::vector<Piece> out;
  for (const Piece& p : sorted) {
    if (!out.empty() && p.lo <= out.back().hi) {
      out.back().hi = scalar_max(out.back().hi, p.hi);
    } else {
      out.push_back(p);
    }
  }
  return out;
}

/// sup over x in A of dist(x, B); B sorted and disjoint. Empty A or B gives 0.
inline Estimate directed(const std::vector<Piece>& a, const std::vector<Piece>& b, const Rat& eps) {
  Estimate best;
  if (a.empty() || b.empty()) return best;
  for (const Piece& pa : a) {
    const Scalar &u = pa.lo, &v = pa.hi;
    // First B piece whose right end reaches u.
    auto it = std::lower_bound(b.begin(), b.end(), u,
                               [](const Piece& p, const Scalar& x) { return p.hi < x; });
    std::size_t j = static_cast<std::size_t>(it - b.begin());
    // Gap g sits before b[g] (g == b.size() is the right ray).
    for (std::size_t g = j; g <= b.size(); ++g) {
      std::optional<Scalar> g1, g2;
      if (g > 0) g1 = b[g - 1].hi;
      if (g < b.size()) g2 = b[g].lo;
      if (g1 && !(*g1 < v)) break;
      Scalar p = g1 ? scalar_max(u, *g1) : u;
      Scalar q = g2 ? scalar_min(v, *g2) : v;
      if (q < p) {
        if (g2 && v < *g2) break;
        continue;
      }
      Estimate cand;
      if (g1 && g2) {
        Estimate half = est_scale(est_sub(*g2, *g1, eps), make_rat(1, 2), eps);
        cand = est_min(half, est_min(est_sub(q, *g1, eps), est_sub(*g2, p, eps), eps), eps);
      } else if (g2) {
        cand = est_sub(*g2, p, eps);
      } else {
        cand = est_sub(q, *g1, eps);
      }
      best = est_max(best, cand, eps);
      if (g2 && !(*g2 < v)) break;
    }
  }
  return best;
}

inline Rat tail_period(const CellPattern& p) {
  return p.lattice ? p.lattice->modulus() : Rat(1);
}

inline CanonicalSet clip(const CanonicalSet& s, const Scalar& lo, const Scalar& hi) {
  return set_intersection(s, canonical_interval(IntervalAtom{lo, hi, true, true}));
}

struct DirectedPair {
  CanonicalSet from;
  CanonicalSet to;
};

}  // namespace detail

/// Hausdorff distance of two closed sets in normal form.
inline HDist hausdorff_closed(const CanonicalSet& s, const CanonicalSet& t,
                              const HausdorffConfig& cfg = {}) {
  if (detail::definitely_empty(s) || detail::definitely_empty(t)) return HDist::exact(Scalar(0));
  bool s_up = !s.cells.back().empty(), t_up = !t.cells.back().empty();
  bool s_down = !s.cells.front().empty(), t_down = !t.cells.front().empty();
  if (s_up != t_up || s_down != t_down) return HDist::infinite();

  std::vector<detail::DirectedPair> pairs{{s, t}, {t, s}};
  if (s_up || s_down) {
    std::vector<Scalar> all = detail::merged_breaks(s.breaks, t.breaks);
    Scalar m = all.empty() ? Scalar(0) : all.front();
    Scalar big = all.empty() ? Scalar(0) : all.back();
    Rat period = rat_lcm(rat_lcm(detail::tail_period(s.cells.front()),
                                 detail::tail_period(s.cells.back())),
                         rat_lcm(detail::tail_period(t.cells.front()),
                                 detail::tail_period(t.cells.back())));
    auto window = [&](const CanonicalSet& x, long copies) {
      return detail::clip(x, m.affine(Rat(1), Rat(-copies * period)),
                          big.affine(Rat(1), Rat(copies * period)));
    };
    pairs = {{window(s, 2), window(t, 3)}, {window(t, 2), window(s, 3)}};
  }

  Rat eps = cfg.tol / 4;
  for (unsigned k = 0;; ++k) {
    std::vector<detail::Sandwich> from, to;
    bool approximate = false;
    std::size_t pieces = 0;
    for (const auto& pr : pairs) {
      from.push_back(detail::sandwich(pr.from, k));
      to.push_back(detail::sandwich(pr.to, k));
      approximate = approximate || from.back().approximate || to.back().approximate;
      pieces += from.back().outer.size() + to.back().outer.size();
    }
    Estimate lo, hi;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      lo = est_max(lo, detail::directed(from[i].inner, detail::merge_pieces(to[i].outer), eps), eps);
      hi = est_max(hi, detail::directed(from[i].outer, detail::merge_pieces(to[i].inner), eps), eps);
    }
    if (lo.is_exact() && hi.is_exact() && lo.exact() == hi.exact()) return HDist::exact(lo.exact());
    if (!approximate) return HDist::from(est_max(lo, hi, eps));
    Rat l = lo.lower(eps), h = hi.upper(eps);
    bool inner_empty = false;
    for (const auto& sw : to) inner_empty = inner_empty || sw.inner.empty();
    if (!inner_empty && (h - l <= cfg.tol || k >= cfg.max_depth || pieces > cfg.max_pieces)) {
      if (h < l) h = l;
      return HDist::bounds(l, h);
    }
    if (k >= cfg.max_depth || pieces > cfg.max_pieces)
      fail(ErrorKind::Indeterminate, "fractal approximation did not resolve the distance");
  }
}

inline HResult hausdorff_distance(const SetExpr& s, const SetExpr& t,
                                  const HausdorffConfig& cfg = {}) {
  HResult r;
  CanonicalSet cs = normalize(s), ct = normalize(t);
  CanonicalSet ks = closure(cs), kt = closure(ct);
  if (!(ks == cs)) r.warnings.push_back("closure taken for " + s.str());
  if (!(kt == ct)) r.warnings.push_back("closure taken for " + t.str());
  r.value = hausdorff_closed(ks, kt, cfg);
  return r;
}

/// inf over t in T of |x - t|, with dist(x, EMPTY) = 0.
inline HResult point_set_dist(const Scalar& x, const SetExpr& t, const HausdorffConfig& cfg = {}) {
  HResult r;
  CanonicalSet ct = normalize(t), kt = closure(ct);
  if (!(kt == ct)) r.warnings.push_back("closure taken for " + t.str());
  if (detail::definitely_empty(kt)) {
    r.value = HDist::exact(Scalar(0));
    return r;
  }
  std::vector<Scalar> all = detail::merged_breaks(kt.breaks, {x});
  Rat period = rat_lcm(detail::tail_period(kt.cells.front()), detail::tail_period(kt.cells.back()));
  CanonicalSet window = detail::clip(kt, all.front().affine(Rat(1), Rat(-3 * period)),
                                     all.back().affine(Rat(1), Rat(3 * period)));
  std::vector<detail::Piece> from{{x, x}};
  Rat eps = cfg.tol / 4;
  for (unsigned k = 0;; ++k) {
    detail::Sandwich sw = detail::sandwich(window, k);
    Estimate lo = detail::directed(from, detail::merge_pieces(sw.outer), eps);
    Estimate hi = detail::directed(from, detail::merge_pieces(sw.inner), eps);
    if (lo.is_exact() && hi.is_exact() && lo.exact() == hi.exact()) {
      r.value = HDist::exact(lo.exact());
      return r;
    }
    if (!sw.approximate) {
      r.value = HDist::from(lo);
      return r;
    }
    Rat l = lo.lower(eps), h = hi.upper(eps);
    if (!sw.inner.empty() && (h - l <= cfg.tol || k >= cfg.max_depth)) {
      r.value = HDist::bounds(l, std::max(l, h));
      return r;
    }
    if (k >= cfg.max_depth || sw.outer.size() > cfg.max_pieces)
      fail(ErrorKind::Indeterminate, "fractal approximation did not resolve the distance");
  }
}

}  // namespace omega

#endif  // OMEGA_HAUSDORFF_HPP
