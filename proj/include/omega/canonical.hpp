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

#ifndef OMEGA_CANONICAL_HPP
#define OMEGA_CANONICAL_HPP

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omega/errors.hpp"
#include "omega/fractal.hpp"
#include "omega/periodic.hpp"
#include "omega/rational.hpp"
#include "omega/scalar.hpp"
#include "omega/set_expr.hpp"

namespace omega {

/// Membership of a breakpoint: a constant, or "member iff the point lies in
/// `ref`" when fractal membership of the point is undecidable here.
struct PointStatus {
  bool if_out = false;
  bool if_in = false;
  std::optional<FractalAtom> ref;

  static PointStatus constant(bool v) { return {v, v, std::nullopt}; }
  static PointStatus make(bool if_out, bool if_in, const std::optional<FractalAtom>& ref) {
    if (if_out == if_in || !ref) return constant(if_out);
    return {if_out, if_in, ref};
  }

  bool is_constant() const { return !ref; }
  bool value() const { return if_out; }
  PointStatus negated() const { return make(!if_out, !if_in, ref); }
  bool operator==(const PointStatus&) const = default;
};

/// Region classes inside an open cell.
enum RegionClass { kIrrational = 0, kRational = 1, kLattice = 2 };

/// Content of one open cell: a mask over the regions
/// {outside F, inside F} x {irrational, rational off the lattice, lattice}.
/// Regions that do not exist (no fractal / no lattice) keep false bits.
struct CellPattern {
  std::optional<FractalAtom> fractal;
  std::optional<PeriodicSet> lattice;
  std::array<std::array<bool, 3>, 2> bits{};

  bool bit(int inside, int cls) const {
    if (!fractal) inside = 0;
    if (!lattice && cls == kLattice) cls = kRational;
    return bits[inside][cls];
  }
  bool empty() const {
    for (const auto& row : bits)
      for (bool b : row)
        if (b) return false;
    return true;
  }
  static CellPattern full() {
    CellPattern p;
    p.bits[0][kIrrational] = p.bits[0][kRational] = true;
    return p;
  }
  bool is_full() const { return !fractal && !lattice && bits[0][0] && bits[0][1]; }
  bool operator==(const CellPattern&) const = default;
};

/// Normal form of a set of reals: sorted breakpoints with their membership,
/// and the open cells between them (cell i spans (breaks[i-1], breaks[i]),
/// with infinite outer ends).
struct CanonicalSet {
  std::vector<Scalar> breaks;
  std::vector<PointStatus> status;
  std::vector<CellPattern> cells{CellPattern{}};

  ExtScalar cell_lo(std::size_t i) const {
    return i == 0 ? ExtScalar::minus_inf() : ExtScalar(breaks[i - 1]);
  }
  ExtScalar cell_hi(std::size_t i) const {
    return i == breaks.size() ? ExtScalar::plus_inf() : ExtScalar(breaks[i]);
  }
  bool cell_bounded(std::size_t i) const { return i > 0 && i < breaks.size(); }

  bool operator==(const CanonicalSet&) const = default;
};

using BoolOp = std::function<bool(bool, bool)>;

namespace detail {

inline constexpr std::size_t kLatticeExpansionLimit = 10000;

inline bool scalar_less(const Scalar& a, const Scalar& b) { return scalar_cmp(a, b) < 0; }

inline PointStatus eval_pattern(const CellPattern& p, const Scalar& x) {
  int cls = kIrrational;
  if (x.is_rational()) cls = (p.lattice && p.lattice->contains(x.rational())) ? kLattice : kRational;
  if (!p.fractal) return PointStatus::constant(p.bit(0, cls));
  Location loc = locate(*p.fractal, x);
  if (loc == Location::Unknown)
    return PointStatus::make(p.bit(0, cls), p.bit(1, cls), p.fractal);
  return PointStatus::constant(p.bit(is_member(loc) ? 1 : 0, cls));
}

inline PointStatus combine_status(const PointStatus& a, const PointStatus& b, const BoolOp& op) {
  if (a.ref && b.ref && !(*a.ref == *b.ref))
    fail(ErrorKind::UnsupportedCombination,
         "point membership depends on two fractal atoms " + a.ref->str() + " and " +
             b.ref->str());
  std::optional<FractalAtom> ref = a.ref ? a.ref : b.ref;
  return PointStatus::make(op(a.if_out, b.if_out), op(a.if_in, b.if_in), ref);
}

inline void for_each_atom(CanonicalSet& s, const std::function<void(FractalAtom&)>& fn) {
  for (CellPattern& c : s.cells)
    if (c.fractal) fn(*c.fractal);
  for (PointStatus& p : s.status)
    if (p.ref) fn(*p.ref);
}

/// Replaces every Cantor atom by the largest atom in `pool` of which it is
/// a stage piece. Stage pieces of a Cantor set are Cantor sets themselves.
inline void unify_cantor(std::vector<CanonicalSet*> sets) {
  std::vector<FractalAtom> pool;
  for (CanonicalSet* s : sets)
    for_each_atom(*s, [&](FractalAtom& f) {
      if (f.kind == FractalKind::Cantor &&
          std::find(pool.begin(), pool.end(), f) == pool.end())
        pool.push_back(f);
    });
  if (pool.size() < 2) return;
  auto representative = [&](const FractalAtom& f) {
    FractalAtom best = f;
    for (const FractalAtom& g : pool)
      if (g.param == best.param && g.length() > best.length() &&
          is_stage_interval_of(g, best.lo, best.hi))
        best = g;
    return best;
  };
  for (CanonicalSet* s : sets)
    for_each_atom(*s, [&](FractalAtom& f) {
      if (f.kind == FractalKind::Cantor) f = representative(f);
    });
}

/// Lattice points of a bounded cell, as scalars strictly inside (lo, hi).
inline std::vector<Scalar> lattice_points(const PeriodicSet& l, const Scalar& lo, const Scalar& hi) {
  Rat eps = make_rat(1, 1 << 20);
  Rat a = enclose(lo, eps).lo - 1, b = enclose(hi, eps).hi + 1;
  std::vector<Scalar> out;
  for (const Rat& q : l.points_between(a, b, kLatticeExpansionLimit)) {
    Scalar s(q);
    if (lo < s && s < hi) out.push_back(s);
  }
  return out;
}

/// Inserts breakpoints, then expands lattices in bounded cells.
inline CanonicalSet refine(const CanonicalSet& s, const std::vector<Scalar>& points) {
  CanonicalSet out;
  out.cells.clear();
  std::size_t cell = 0, k = 0;
  std::size_t i = 0;
  // Merge-walk: `points` and `s.breaks` are both sorted.
  CellPattern current = s.cells[0];
  while (i < points.size() || k < s.breaks.size()) {
    bool take_existing;
    if (i == points.size()) take_existing = true;
    else if (k == s.breaks.size()) take_existing = false;
    else {
      auto c = scalar_cmp(points[i], s.breaks[k]);
      if (c == 0) ++i;  // already a breakpoint
      take_existing = c >= 0;
    }
    out.cells.push_back(current);
    if (take_existing) {
      out.breaks.push_back(s.breaks[k]);
      out.status.push_back(s.status[k]);
      ++k;
      ++cell;
      current = s.cells[cell];
    } else {
      out.breaks.push_back(points[i]);
      out.status.push_back(eval_pattern(current, points[i]));
      ++i;
    }
  }
  out.cells.push_back(current);

  // Lattices only survive in the unbounded outer cells.
  CanonicalSet expanded;
  expanded.cells.clear();
  for (std::size_t c = 0; c < out.cells.size(); ++c) {
    CellPattern p = out.cells[c];
    if (p.lattice && out.cell_bounded(c)) {
      std::vector<Scalar> pts = lattice_points(*p.lattice, out.breaks[c - 1], out.breaks[c]);
      CellPattern rest = p;
      rest.lattice.reset();
      rest.bits[0][kLattice] = rest.bits[1][kLattice] = false;
      for (const Scalar& x : pts) {
        expanded.cells.push_back(rest);
        expanded.breaks.push_back(x);
        expanded.status.push_back(eval_pattern(p, x));
      }
      expanded.cells.push_back(rest);
    } else {
      expanded.cells.push_back(p);
    }
    if (c < out.breaks.size()) {
      expanded.breaks.push_back(out.breaks[c]);
      expanded.status.push_back(out.status[c]);
    }
  }
  return expanded;
}

inline std::vector<Scalar> merged_breaks(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  std::vector<Scalar> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (i == a.size()) out.push_back(b[j++]);
    else if (j == b.size()) out.push_back(a[i++]);
    else {
      auto c = scalar_cmp(a[i], b[j]);
      if (c < 0) out.push_back(a[i++]);
      else if (c > 0) out.push_back(b[j++]);
      else {
        out.push_back(a[i++]);
        ++j;
      }
    }
  }
  return out;
}

inline CellPattern combine_pattern(const CellPattern& a, const CellPattern& b, const BoolOp& op) {
  CellPattern out;
  if (a.fractal && b.fractal && !(*a.fractal == *b.fractal))
    fail(ErrorKind::UnsupportedCombination,
         "intersecting distinct fractal atoms " + a.fractal->str() + " and " + b.fractal->str());
  out.fractal = a.fractal ? a.fractal : b.fractal;
  if (a.lattice || b.lattice) {
    PeriodicMask m = combine_periodic(a.lattice ? &*a.lattice : nullptr, a.bit(0, kLattice),
                                      a.bit(0, kRational), b.lattice ? &*b.lattice : nullptr,
                                      b.bit(0, kLattice), b.bit(0, kRational), op);
    out.bits[0][kIrrational] = op(a.bit(0, kIrrational), b.bit(0, kIrrational));
    out.bits[0][kRational] = m.rest;
    if (!m.exceptions.empty()) {
      out.lattice = m.exceptions;
      out.bits[0][kLattice] = !m.rest;
    }
    if (out.fractal) {
      for (int cls = 0; cls < 2; ++cls) out.bits[1][cls] = op(a.bit(1, cls), b.bit(1, cls));
    }
    return out;
  }
  for (int f = 0; f < (out.fractal ? 2 : 1); ++f)
    for (int cls = 0; cls < 2; ++cls) out.bits[f][cls] = op(a.bit(f, cls), b.bit(f, cls));
  return out;
}

inline void tidy_cell(CanonicalSet& s, std::size_t i) {
  CellPattern& p = s.cells[i];
  if (p.fractal) {
    bool rows_equal = p.bits[0] == p.bits[1];
    if (rows_equal || !meets_open(*p.fractal, s.breaks[i - 1], s.breaks[i])) {
      p.fractal.reset();
      p.bits[1] = {};
    }
  }
  if (p.lattice) {
    if (p.lattice->empty() || p.bits[0][kLattice] == p.bits[0][kRational]) {
      p.lattice.reset();
      p.bits[0][kLattice] = p.bits[1][kLattice] = false;
    }
  } else {
    p.bits[0][kLattice] = p.bits[1][kLattice] = false;
  }
  if (!p.fractal) p.bits[1] = {};
}

// A cell holding only fractal points is cut back to the extreme points of the
// fractal inside it, so that equal sets get equal breakpoints.
inline void tighten_fractal_cells(CanonicalSet& s) {
  std::vector<Scalar> cuts;
  for (std::size_t i = 0; i < s.cells.size(); ++i) {
    const CellPattern& p = s.cells[i];
    if (!p.fractal || p.bits[0][kIrrational] || p.bits[0][kRational]) continue;
    const Scalar &lo = s.breaks[i - 1], &hi = s.breaks[i];
    auto l = leftmost_above(*p.fractal, lo);
    if (l && lo < *l) cuts.push_back(*l);
    auto r = rightmost_below(*p.fractal, hi);
    if (r && *r < hi && !(l && *l == *r)) cuts.push_back(*r);
  }
  if (cuts.empty()) return;
  std::sort(cuts.begin(), cuts.end(), scalar_less);
  s = refine(s, cuts);
  for (std::size_t i = 0; i < s.cells.size(); ++i) tidy_cell(s, i);
}

inline void simple_merge(CanonicalSet& s) {
  CanonicalSet out;
  out.cells.clear();
  out.cells.push_back(s.cells[0]);
  for (std::size_t i = 0; i < s.breaks.size(); ++i) {
    const CellPattern& next = s.cells[i + 1];
    if (out.cells.back() == next && s.status[i] == eval_pattern(next, s.breaks[i])) continue;
    out.breaks.push_back(s.breaks[i]);
    out.status.push_back(s.status[i]);
    out.cells.push_back(next);
  }
  s = std::move(out);
}

// An unbounded lattice cell swallows neighbouring bounded cells that agree
// with it (same irrational/rational bits, no lattice points inside, and a
// consistent breakpoint).
inline void absorb_right(CanonicalSet& s) {
  while (s.breaks.size() >= 2) {
    const CellPattern& outer = s.cells.back();
    if (!outer.lattice) return;
    std::size_t n = s.breaks.size();
    const CellPattern& inner = s.cells[n - 1];
    if (inner.fractal || inner.lattice) return;
    if (inner.bits[0][kIrrational] != outer.bits[0][kIrrational] ||
        inner.bits[0][kRational] != outer.bits[0][kRational])
      return;
    if (!(s.status[n - 1] == eval_pattern(outer, s.breaks[n - 1]))) return;
    if (!lattice_points(*outer.lattice, s.breaks[n - 2], s.breaks[n - 1]).empty()) return;
    CellPattern keep = outer;
    s.breaks.pop_back();
    s.status.pop_back();
    s.cells.pop_back();
    s.cells.back() = keep;
  }
}

inline CanonicalSet mirrored(const CanonicalSet& s);

inline void absorb_left(CanonicalSet& s) {
  CanonicalSet m = mirrored(s);
  absorb_right(m);
  s = mirrored(m);
}

inline void rebase_cantor(CanonicalSet& s) {
  std::vector<FractalAtom> roots;
  for (const CellPattern& c : s.cells)
    if (c.fractal && c.fractal->kind == FractalKind::Cantor &&
        std::find(roots.begin(), roots.end(), *c.fractal) == roots.end())
      roots.push_back(*c.fractal);
  for (const FractalAtom& root : roots) {
    std::optional<Scalar> lo, hi;
    for (std::size_t i = 0; i < s.cells.size(); ++i) {
      if (!(s.cells[i].fractal && *s.cells[i].fractal == root)) continue;
      if (!lo) lo = s.breaks[i - 1];
      hi = s.breaks[i];
    }
    auto j = minimal_stage(root, *lo, *hi);
    if (!j) continue;
    FractalAtom piece = FractalAtom::cantor(j->lo, j->hi, root.param);
    if (piece == root) continue;
    for (CellPattern& c : s.cells)
      if (c.fractal && *c.fractal == root) c.fractal = piece;
    for (std::size_t i = 0; i < s.status.size(); ++i) {
      PointStatus& p = s.status[i];
      if (p.ref && *p.ref == root && Scalar(piece.lo) <= s.breaks[i] &&
          s.breaks[i] <= Scalar(piece.hi))
        p.ref = piece;
    }
  }
}

}  // namespace detail

/// Brings a set into normal form: tidy cells, merge redundant breakpoints,
/// canonicalize Cantor pieces. Idempotent.
inline CanonicalSet simplify(CanonicalSet s) {
  detail::unify_cantor({&s});
  for (std::size_t i = 0; i < s.cells.size(); ++i) detail::tidy_cell(s, i);
  detail::tighten_fractal_cells(s);
  for (PointStatus& p : s.status) p = PointStatus::make(p.if_out, p.if_in, p.ref);
  for (int round = 0; round < 2; ++round) {
    detail::simple_merge(s);
    detail::absorb_right(s);
    detail::absorb_left(s);
    detail::simple_merge(s);
    detail::rebase_cantor(s);
  }
  return s;
}

inline CanonicalSet complement(const CanonicalSet& s) {
  CanonicalSet out = s;
  for (PointStatus& p : out.status) p = p.negated();
  for (CellPattern& c : out.cells) {
    for (int f = 0; f < (c.fractal ? 2 : 1); ++f)
      for (int cls = 0; cls < (c.lattice ? 3 : 2); ++cls) c.bits[f][cls] = !c.bits[f][cls];
  }
  return out;
}

inline CanonicalSet combine(CanonicalSet a, CanonicalSet b, const BoolOp& op) {
  detail::unify_cantor({&a, &b});
  std::vector<Scalar> grid = detail::merged_breaks(a.breaks, b.breaks);
  CanonicalSet ra = detail::refine(a, grid), rb = detail::refine(b, grid);
  if (ra.breaks.size() != grid.size() || rb.breaks.size() != grid.size()) {
    grid = detail::merged_breaks(ra.breaks, rb.breaks);
    ra = detail::refine(ra, grid);
    rb = detail::refine(rb, grid);
  }
  CanonicalSet out;
  out.breaks = grid;
  out.cells.clear();
  for (std::size_t i = 0; i < ra.cells.size(); ++i)
    out.cells.push_back(detail::combine_pattern(ra.cells[i], rb.cells[i], op));
  for (std::size_t i = 0; i < grid.size(); ++i)
    out.status.push_back(detail::combine_status(ra.status[i], rb.status[i], op));
  return simplify(std::move(out));
}

inline CanonicalSet set_union(const CanonicalSet& a, const CanonicalSet& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}
inline CanonicalSet set_intersection(const CanonicalSet& a, const CanonicalSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}
inline CanonicalSet set_difference(const CanonicalSet& a, const CanonicalSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && !y; });
}

namespace detail {

inline CanonicalSet affine_raw(const CanonicalSet& s, const Rat& a, const Rat& b) {
  CanonicalSet out = s;
  for (Scalar& x : out.breaks) x = x.affine(a, b);
  for (CellPattern& c : out.cells) {
    if (c.fractal) c.fractal = omega::affine(*c.fractal, a, b);
    if (c.lattice) c.lattice = c.lattice->affine(a, b);
  }
  for (PointStatus& p : out.status)
    if (p.ref) p.ref = omega::affine(*p.ref, a, b);
  if (a < 0) {
    std::reverse(out.breaks.begin(), out.breaks.end());
    std::reverse(out.status.begin(), out.status.end());
    std::reverse(out.cells.begin(), out.cells.end());
  }
  return out;
}

inline CanonicalSet mirrored(const CanonicalSet& s) { return affine_raw(s, Rat(-1), Rat(0)); }

}  // namespace detail

/// { a*x + b : x in s }, a != 0.
inline CanonicalSet affine_image(const CanonicalSet& s, const Rat& a, const Rat& b) {
  if (a == 0) fail(ErrorKind::InvalidArgument, "affine scale must be nonzero");
  return simplify(detail::affine_raw(s, a, b));
}

// ---------------------------------------------------------------------------
// Atoms and normalization.

inline CanonicalSet canonical_empty() { return CanonicalSet{}; }

inline CanonicalSet canonical_reals() {
  CanonicalSet s;
  s.cells[0] = CellPattern::full();
  return s;
}

inline CanonicalSet canonical_points(std::vector<Scalar> pts) {
  std::sort(pts.begin(), pts.end(), detail::scalar_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  CanonicalSet s;
  s.breaks = std::move(pts);
  s.status.assign(s.breaks.size(), PointStatus::constant(true));
  s.cells.assign(s.breaks.size() + 1, CellPattern{});
  return s;
}

inline CanonicalSet canonical_interval(const IntervalAtom& iv) {
  CanonicalSet s;
  s.cells.clear();
  if (iv.lo == iv.hi) return canonical_points({iv.lo.value()});
  if (iv.lo.is_finite()) {
    s.cells.push_back(CellPattern{});
    s.breaks.push_back(iv.lo.value());
    s.status.push_back(PointStatus::constant(iv.lo_closed));
  }
  s.cells.push_back(CellPattern::full());
  if (iv.hi.is_finite()) {
    s.breaks.push_back(iv.hi.value());
    s.status.push_back(PointStatus::constant(iv.hi_closed));
    s.cells.push_back(CellPattern{});
  }
  return simplify(std::move(s));
}

inline CanonicalSet canonical_rationals() {
  CanonicalSet s;
  s.cells[0].bits[0][kRational] = true;
  return s;
}

inline CanonicalSet canonical_lattice(const PeriodicSet& l) {
  CanonicalSet s;
  s.cells[0].lattice = l;
  s.cells[0].bits[0][kLattice] = true;
  return simplify(std::move(s));
}

inline CanonicalSet canonical_fractal(const FractalAtom& f) {
  CanonicalSet s;
  s.breaks = {Scalar(f.lo), Scalar(f.hi)};
  s.status = {PointStatus::constant(true), PointStatus::constant(true)};
  s.cells.assign(3, CellPattern{});
  s.cells[1].fractal = f;
  s.cells[1].bits[1][kIrrational] = s.cells[1].bits[1][kRational] = true;
  return simplify(std::move(s));
}

namespace detail {

inline bool tagged(const Error& e) {
  return std::string(e.what()).find(" [subtree: ") != std::string::npos;
}

}  // namespace detail

/// Normal form of an expression; throws UnsupportedCombination outside the
/// decidable fragment (the message names the offending subtree).
inline CanonicalSet normalize(const SetExpr& e) {
  struct Visitor {
    const SetExpr& self;
    CanonicalSet operator()(const EmptyAtom&) const { return canonical_empty(); }
    CanonicalSet operator()(const PointsAtom& p) const { return canonical_points(p.points); }
    CanonicalSet operator()(const IntervalAtom& i) const { return canonical_interval(i); }
    CanonicalSet operator()(const RationalsAtom&) const { return canonical_rationals(); }
    CanonicalSet operator()(const IntegersAtom&) const {
      return canonical_lattice(PeriodicSet::integers());
    }
    CanonicalSet operator()(const FractalNode& f) const { return canonical_fractal(f.atom); }
    CanonicalSet operator()(const UnionNode& u) const {
      CanonicalSet acc = normalize(u.children.front());
      for (std::size_t i = 1; i < u.children.size(); ++i)
        acc = set_union(acc, normalize(u.children[i]));
      return acc;
    }
    CanonicalSet operator()(const IntersectNode& u) const {
      CanonicalSet acc = normalize(u.children.front());
      for (std::size_t i = 1; i < u.children.size(); ++i)
        acc = set_intersection(acc, normalize(u.children[i]));
      return acc;
    }
    CanonicalSet operator()(const ComplementNode& c) const {
      return complement(normalize(c.child.front()));
    }
    CanonicalSet operator()(const AffineNode& a) const {
      return affine_image(normalize(a.child.front()), a.scale, a.shift);
    }
  };
  try {
    return std::visit(Visitor{e}, e.node());
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::UnsupportedCombination || detail::tagged(err)) throw;
    throw Error(err.kind(), std::string(err.what()) + " [subtree: " + e.str() + "]");
  }
}

inline bool semantically_equal(const SetExpr& a, const SetExpr& b) {
  return normalize(a) == normalize(b);
}

// ---------------------------------------------------------------------------
// Back to expressions.

namespace detail {

inline SetExpr lattice_expr(const PeriodicSet& l) {
  std::vector<SetExpr> parts;
  for (const Rat& r : l.residues()) {
    if (l.modulus() == 1 && r == 0) parts.push_back(SetExpr::integers());
    else parts.push_back(SetExpr::affine(l.modulus(), r, SetExpr::integers()));
  }
  return parts.size() == 1 ? parts.front() : SetExpr::unite(std::move(parts));
}

inline SetExpr with_cell(bool whole_line, const SetExpr& cell, std::vector<SetExpr> factors) {
  if (!whole_line) factors.insert(factors.begin(), cell);
  if (factors.empty()) return SetExpr::reals();
  return factors.size() == 1 ? factors.front() : SetExpr::intersect(std::move(factors));
}

}  // namespace detail

/// An expression denoting exactly the set `s`.
inline SetExpr to_expr(const CanonicalSet& s) {
  std::vector<SetExpr> parts;
  std::vector<bool> used(s.breaks.size(), false);
  auto included = [&](std::size_t b) {
    return s.status[b].is_constant() && s.status[b].value();
  };
  auto push_cell = [&](std::size_t i) {
    const CellPattern& p = s.cells[i];
    if (p.empty()) return;
    bool whole = s.breaks.empty();
    if (p.is_full()) {
      bool lc = i > 0 && included(i - 1), hc = i < s.breaks.size() && included(i);
      if (lc) used[i - 1] = true;
      if (hc) used[i] = true;
      parts.push_back(SetExpr::interval(s.cell_lo(i), s.cell_hi(i), lc, hc));
      return;
    }
    SetExpr cell = SetExpr::open(s.cell_lo(i), s.cell_hi(i));
    SetExpr irr = SetExpr::complement(SetExpr::rationals());
    if (p.lattice) {
      SetExpr lat = detail::lattice_expr(*p.lattice);
      bool i_bit = p.bits[0][kIrrational], r_bit = p.bits[0][kRational];
      if (i_bit == r_bit) {
        parts.push_back(detail::with_cell(whole, cell, {r_bit ? SetExpr::complement(lat) : lat}));
        return;
      }
      if (i_bit) parts.push_back(detail::with_cell(whole, cell, {irr}));
      if (p.bits[0][kLattice]) parts.push_back(detail::with_cell(whole, cell, {lat}));
      else
        parts.push_back(
            detail::with_cell(whole, cell, {SetExpr::rationals(), SetExpr::complement(lat)}));
      return;
    }
    for (int f = 0; f < (p.fractal ? 2 : 1); ++f) {
      bool i_bit = p.bits[f][kIrrational], r_bit = p.bits[f][kRational];
      if (!i_bit && !r_bit) continue;
      std::vector<SetExpr> factors;
      if (p.fractal) {
        SetExpr frac = SetExpr::fractal(*p.fractal);
        factors.push_back(f ? frac : SetExpr::complement(frac));
      }
      if (!i_bit) factors.push_back(SetExpr::rationals());
      else if (!r_bit) factors.push_back(irr);
      parts.push_back(detail::with_cell(whole, cell, std::move(factors)));
    }
  };
  for (std::size_t i = 0; i < s.cells.size(); ++i) push_cell(i);
  std::vector<Scalar> loose;
  for (std::size_t b = 0; b < s.breaks.size(); ++b) {
    const PointStatus& st = s.status[b];
    if (st.is_constant()) {
      if (st.value() && !used[b]) loose.push_back(s.breaks[b]);
    } else {
      SetExpr frac = SetExpr::fractal(*st.ref);
      parts.push_back(SetExpr::intersect(
          {SetExpr::point(s.breaks[b]), st.if_in ? frac : SetExpr::complement(frac)}));
    }
  }
  if (!loose.empty()) parts.push_back(SetExpr::points(loose));
  if (parts.empty()) return SetExpr::empty();
  return parts.size() == 1 ? parts.front() : SetExpr::unite(std::move(parts));
}

// ---------------------------------------------------------------------------
// Queries on the normal form.

inline PointStatus membership_status(const CanonicalSet& s, const Scalar& x) {
  auto it = std::lower_bound(s.breaks.begin(), s.breaks.end(), x, detail::scalar_less);
  std::size_t idx = static_cast<std::size_t>(it - s.breaks.begin());
  if (it != s.breaks.end() && *it == x) return s.status[idx];
  return detail::eval_pattern(s.cells[idx], x);
}

inline bool member(const Scalar& x, const CanonicalSet& s) {
  PointStatus st = membership_status(s, x);
  if (!st.is_constant())
    fail(ErrorKind::MembershipUndetermined,
         "membership of " + x.str() + " in " + st.ref->str() + " is undecidable here");
  return st.value();
}

inline bool member(const Scalar& x, const SetExpr& e) { return member(x, normalize(e)); }

/// Topological closure.
inline CanonicalSet closure(const CanonicalSet& s) {
  CanonicalSet out = s;
  auto add = [&](std::size_t bp, const PointStatus& extra) {
    out.status[bp] =
        detail::combine_status(out.status[bp], extra, [](bool x, bool y) { return x || y; });
  };
  for (std::size_t i = 0; i < s.cells.size(); ++i) {
    const CellPattern& p = s.cells[i];
    bool dense = p.bits[0][kIrrational] || p.bits[0][kRational];
    bool frac = p.fractal && (p.bits[1][kIrrational] || p.bits[1][kRational]);
    bool lat = p.lattice && p.bits[0][kLattice];
    CellPattern q;
    if (dense) {
      q = CellPattern::full();
      if (i > 0) add(i - 1, PointStatus::constant(true));
      if (i < s.breaks.size()) add(i, PointStatus::constant(true));
    } else if (frac) {
      q.fractal = p.fractal;
      q.bits[1][kIrrational] = q.bits[1][kRational] = true;
      auto contribution = [&](const Scalar& x, bool left_end) {
        Location loc = locate(*p.fractal, x);
        if (loc == Location::Unknown) return PointStatus::make(false, true, p.fractal);
        bool accumulates = loc == Location::Interior ||
                           (left_end ? loc == Location::LeftEndpoint
                                     : loc == Location::RightEndpoint);
        return PointStatus::constant(accumulates);
      };
      add(i - 1, contribution(s.breaks[i - 1], true));
      add(i, contribution(s.breaks[i], false));
    } else if (lat) {
      q = p;
    }
    out.cells[i] = q;
  }
  return simplify(std::move(out));
}

inline SetExpr closure(const SetExpr& e) { return to_expr(closure(normalize(e))); }

inline SetExpr affine_image(const Rat& a, const Rat& b, const SetExpr& e) {
  return SetExpr::affine(a, b, e);
}

/// Compact human-readable listing of the normal form.
inline std::string describe(const CanonicalSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.cells.size(); ++i) {
    const CellPattern& p = s.cells[i];
    if (!p.empty()) {
      out += "(" + s.cell_lo(i).str() + "," + s.cell_hi(i).str() + "):";
      if (p.fractal) out += p.fractal->str() + ":";
      if (p.lattice) out += "lattice " + p.lattice->str() + ":";
      for (int f = 0; f < 2; ++f)
        for (int c = 0; c < 3; ++c) out += p.bits[f][c] ? '1' : '0';
      out += " ";
    }
    if (i < s.breaks.size()) {
      const PointStatus& st = s.status[i];
      if (!st.is_constant())
        out += "{" + s.breaks[i].str() + "?" + st.ref->str() + "} ";
      else if (st.value())
        out += "{" + s.breaks[i].str() + "} ";
    }
  }
  return out.empty() ? "EMPTY" : out;
}

}  // namespace omega

#endif  // OMEGA_CANONICAL_HPP
