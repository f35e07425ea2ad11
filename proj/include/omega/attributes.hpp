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

#ifndef OMEGA_ATTRIBUTES_HPP
#define OMEGA_ATTRIBUTES_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "omega/canonical.hpp"
#include "omega/cardinality.hpp"
#include "omega/errors.hpp"
#include "omega/measure_value.hpp"

namespace omega {

/// The closed hull [inf A, sup A]; ends may be infinite.
struct Hull {
  ExtScalar lo;
  ExtScalar hi;
  bool operator==(const Hull&) const = default;
  std::string str() const {
    std::string l = lo.is_finite() ? "[" : "(";
    std::string r = hi.is_finite() ? "]" : ")";
    return l + lo.str() + "," + hi.str() + r;
  }
};

enum class Closedness { Yes, No, Unknown };

inline std::string to_string(Closedness c) {
  switch (c) {
    case Closedness::Yes: return "yes";
    case Closedness::No: return "no";
    case Closedness::Unknown: return "unknown";
  }
  return {};
}

struct SetAttributes {
  CardClass card;
  CardClass co_card;
  bool bounded = true;
  std::optional<Hull> hull;
  MeasureValue measure;
  Closedness closed = Closedness::Unknown;
};

struct MeasureConfig {
  Rat eps = make_rat(1, 1000000);
  unsigned depth = 40;
};

[[noreturn]] inline void underdetermined(const std::string& what, const SetExpr& e) {
  fail(ErrorKind::AttributeUnderdetermined, "cannot determine " + what + " of " + e.str());
}

// ---------------------------------------------------------------------------
// Normal-form attributes.

inline SizeClass size_of(const CanonicalSet& s) {
  bool infinite = false;
  for (const CellPattern& p : s.cells) {
    if (p.bits[0][kIrrational] || (p.fractal && p.bits[1][kIrrational]))
      return SizeClass::uncountable();
    if (!p.empty()) infinite = true;
  }
  if (infinite) return SizeClass::countable();
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < s.status.size(); ++i) {
    const PointStatus& st = s.status[i];
    if (!st.is_constant())
      fail(ErrorKind::AttributeUnderdetermined,
           "cannot count: membership of " + s.breaks[i].str() + " in " + st.ref->str() +
               " is undecidable here");
    if (st.value()) ++n;
  }
  return SizeClass::finite(n);
}

inline std::vector<Scalar> finite_points(const CanonicalSet& s) {
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < s.status.size(); ++i)
    if (s.status[i].is_constant() && s.status[i].value()) out.push_back(s.breaks[i]);
  return out;
}

/// inf of the set, nullopt for the empty set.
inline std::optional<ExtScalar> infimum(const CanonicalSet& s) {
  std::optional<Scalar> pending;
  auto settle = [&](const Scalar& candidate) -> ExtScalar {
    if (pending && !(*pending == candidate))
      fail(ErrorKind::AttributeUnderdetermined,
           "infimum depends on membership of " + pending->str());
    return candidate;
  };
  for (std::size_t i = 0; i < s.cells.size(); ++i) {
    const CellPattern& p = s.cells[i];
    if (!p.empty()) {
      if (i == 0) return ExtScalar::minus_inf();
      const Scalar& lo = s.breaks[i - 1];
      if (p.bits[0][kIrrational] || p.bits[0][kRational]) return settle(lo);
      if (p.lattice) {
        Rat a = enclose(lo, Rat(1)).hi;
        auto pts = detail::lattice_points(*p.lattice, lo, Scalar(Rat(a + 2 * p.lattice->modulus())));
        return settle(pts.front());
      }
      auto l = leftmost_above(*p.fractal, lo);
      if (!l)
        fail(ErrorKind::AttributeUnderdetermined,
             "infimum of " + p.fractal->str() + " above " + lo.str() + " is undecidable here");
      return settle(*l);
    }
    if (i < s.breaks.size()) {
      const PointStatus& st = s.status[i];
      if (st.is_constant()) {
        if (st.value()) return settle(s.breaks[i]);
      } else {
        if (pending)
          fail(ErrorKind::AttributeUnderdetermined,
               "infimum depends on membership of " + pending->str());
        pending = s.breaks[i];
      }
    }
  }
  if (pending)
    fail(ErrorKind::AttributeUnderdetermined,
         "emptiness depends on membership of " + pending->str());
  return std::nullopt;
}

inline std::optional<ExtScalar> supremum(const CanonicalSet& s) {
  auto m = infimum(detail::mirrored(s));
  if (!m) return std::nullopt;
  if (!m->is_finite()) return ExtScalar::plus_inf();
  return ExtScalar(-m->value());
}

inline std::optional<Hull> hull_of(const CanonicalSet& s) {
  auto lo = infimum(s);
  if (!lo) return std::nullopt;
  return Hull{*lo, *supremum(s)};
}

inline bool is_bounded(const CanonicalSet& s) {
  return s.cells.front().empty() && s.cells.back().empty();
}

inline MeasureValue lebesgue_measure(const CanonicalSet& s, const MeasureConfig& cfg = {}) {
  Estimate total;
  for (std::size_t i = 0; i < s.cells.size(); ++i) {
    const CellPattern& p = s.cells[i];
    bool outside = p.bits[0][kIrrational];
    bool inside = p.fractal && p.bits[1][kIrrational];
    if (!outside && !inside) continue;
    if (!s.cell_bounded(i)) return MeasureValue::infinite();
    Estimate len = est_sub(s.breaks[i], s.breaks[i - 1], cfg.eps);
    Estimate piece = len;
    if (p.fractal) {
      RatInterval mf = measure_in(*p.fractal, s.breaks[i - 1], s.breaks[i], cfg.depth);
      Estimate fm = Estimate::bounds(mf.lo, mf.hi);
      piece = inside ? fm : est_sub(len, fm, cfg.eps);
    }
    total = est_add(total, piece, cfg.eps);
  }
  return MeasureValue::from(total);
}

inline Closedness closedness(const CanonicalSet& s) {
  try {
    return closure(s) == s ? Closedness::Yes : Closedness::No;
  } catch (const Error&) {
    return Closedness::Unknown;
  }
}

// ---------------------------------------------------------------------------
// Expression-level attributes: exact through the normal form, compositional
// rules when the expression leaves the normalizable fragment.

namespace detail {

inline std::optional<CanonicalSet> try_normalize(const SetExpr& e) {
  try {
    return normalize(e);
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::UnsupportedCombination) throw;
    return std::nullopt;
  }
}

template <typename T>
const T* node_as(const SetExpr& e) {
  return std::get_if<T>(&e.node());
}

inline const std::vector<SetExpr>* children_of(const SetExpr& e) {
  if (auto u = node_as<UnionNode>(e)) return &u->children;
  if (auto n = node_as<IntersectNode>(e)) return &n->children;
  return nullptr;
}

}  // namespace detail

/// Membership by structural recursion; atoms go through the normal form.
inline bool member_expr(const Scalar& x, const SetExpr& e) {
  if (auto s = detail::try_normalize(e)) return member(x, *s);
  if (auto u = detail::node_as<UnionNode>(e)) {
    for (const SetExpr& c : u->children)
      if (member_expr(x, c)) return true;
    return false;
  }
  if (auto n = detail::node_as<IntersectNode>(e)) {
    for (const SetExpr& c : n->children)
      if (!member_expr(x, c)) return false;
    return true;
  }
  if (auto c = detail::node_as<ComplementNode>(e)) return !member_expr(x, c->child.front());
  if (auto a = detail::node_as<AffineNode>(e)) {
    Rat inv = 1 / a->scale;
    return member_expr(x.affine(inv, Rat(-a->shift * inv)), a->child.front());
  }
  fail(ErrorKind::MembershipUndetermined, "membership of " + x.str() + " in " + e.str());
}

inline SizeClass size_of(const SetExpr& e);

inline SizeClass size_of(const SetExpr& e) {
  if (auto s = detail::try_normalize(e)) return size_of(*s);
  auto guarded = [](const SetExpr& c) -> std::optional<SizeClass> {
    try {
      return size_of(c);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::AttributeUnderdetermined) throw;
      return std::nullopt;
    }
  };
  if (auto u = detail::node_as<UnionNode>(e)) {
    bool all_countable = true, infinite = false;
    std::vector<Scalar> pts;
    bool points_known = true;
    for (const SetExpr& c : u->children) {
      auto sc = guarded(c);
      if (sc && sc->kind == SizeClass::Kind::Uncountable) return SizeClass::uncountable();
      if (!sc) {
        all_countable = false;
        continue;
      }
      if (sc->kind == SizeClass::Kind::Countable) infinite = true;
      if (sc->kind == SizeClass::Kind::Finite) {
        auto cs = detail::try_normalize(c);
        if (cs) {
          auto p = finite_points(*cs);
          pts.insert(pts.end(), p.begin(), p.end());
        } else {
          points_known = false;
        }
      }
    }
    if (all_countable && infinite) return SizeClass::countable();
    if (all_countable && points_known)
      return size_of(canonical_points(std::move(pts)));
    underdetermined("cardinality", e);
  }
  if (auto n = detail::node_as<IntersectNode>(e)) {
    bool countable_child = false;
    for (const SetExpr& c : n->children) {
      auto sc = guarded(c);
      if (!sc || sc->kind == SizeClass::Kind::Uncountable) continue;
      countable_child = true;
      if (sc->kind != SizeClass::Kind::Finite) continue;
      auto cs = detail::try_normalize(c);
      if (!cs) continue;
      std::uint64_t count = 0;
      try {
        for (const Scalar& x : finite_points(*cs))
          if (member_expr(x, e)) ++count;
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::MembershipUndetermined) throw;
        continue;
      }
      return SizeClass::finite(count);
    }
    (void)countable_child;
    underdetermined("cardinality", e);
  }
  if (auto c = detail::node_as<ComplementNode>(e)) {
    auto sc = guarded(c->child.front());
    if (sc && sc->is_countable()) return SizeClass::uncountable();
    underdetermined("cardinality", e);
  }
  if (auto a = detail::node_as<AffineNode>(e)) return size_of(a->child.front());
  underdetermined("cardinality", e);
}

inline SizeClass co_size_of(const SetExpr& e) { return size_of(SetExpr::complement(e)); }

inline CardClass card_class(const SetExpr& e) {
  SizeClass own = size_of(e);
  if (own.kind != SizeClass::Kind::Uncountable) return CardClass::from_sizes(own, own);
  return CardClass::from_sizes(own, co_size_of(e));
}

inline bool bounded_of(const SetExpr& e) {
  if (auto s = detail::try_normalize(e)) return is_bounded(*s);
  if (auto u = detail::node_as<UnionNode>(e)) {
    for (const SetExpr& c : u->children)
      if (!bounded_of(c)) return false;
    return true;
  }
  if (auto n = detail::node_as<IntersectNode>(e)) {
    for (const SetExpr& c : n->children) {
      try {
        if (bounded_of(c)) return true;
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::AttributeUnderdetermined) throw;
      }
    }
    underdetermined("boundedness", e);
  }
  if (auto c = detail::node_as<ComplementNode>(e)) {
    if (bounded_of(c->child.front())) return false;
    underdetermined("boundedness", e);
  }
  if (auto a = detail::node_as<AffineNode>(e)) return bounded_of(a->child.front());
  underdetermined("boundedness", e);
}

inline std::optional<Hull> hull_of(const SetExpr& e) {
  if (auto s = detail::try_normalize(e)) return hull_of(*s);
  underdetermined("hull", e);
}

inline MeasureValue measure_of(const SetExpr& e, const MeasureConfig& cfg = {}) {
  if (auto s = detail::try_normalize(e)) return lebesgue_measure(*s, cfg);
  try {
    if (size_of(e).is_countable()) return MeasureValue::exact(Scalar(0));
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::AttributeUnderdetermined) throw;
  }
  if (auto u = detail::node_as<UnionNode>(e)) {
    Rat lo(0), hi(0);
    for (const SetExpr& c : u->children) {
      MeasureValue m = measure_of(c, cfg);
      if (m.is_infinite()) return m;
      RatInterval r = m.enclosure(cfg.eps);
      lo = std::max(lo, r.lo);
      hi += r.hi;
    }
    return MeasureValue::bounds(lo, hi);
  }
  if (auto n = detail::node_as<IntersectNode>(e)) {
    std::optional<Rat> hi;
    for (const SetExpr& c : n->children) {
      try {
        MeasureValue m = measure_of(c, cfg);
        if (m.is_infinite()) continue;
        Rat h = m.enclosure(cfg.eps).hi;
        if (!hi || h < *hi) hi = h;
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::AttributeUnderdetermined) throw;
      }
    }
    if (hi) return MeasureValue::bounds(Rat(0), *hi);
    underdetermined("measure", e);
  }
  if (auto c = detail::node_as<ComplementNode>(e)) {
    if (!measure_of(c->child.front(), cfg).is_infinite()) return MeasureValue::infinite();
    underdetermined("measure", e);
  }
  if (auto a = detail::node_as<AffineNode>(e)) {
    MeasureValue m = measure_of(a->child.front(), cfg);
    if (m.is_infinite()) return m;
    return MeasureValue::from(est_scale(m.estimate(), rat_abs(a->scale), cfg.eps));
  }
  underdetermined("measure", e);
}

inline Closedness closedness(const SetExpr& e) {
  if (auto s = detail::try_normalize(e)) return closedness(*s);
  return Closedness::Unknown;
}

inline SetAttributes attributes(const SetExpr& e, const MeasureConfig& cfg = {}) {
  SetAttributes a;
  a.card = card_class(e);
  a.co_card = card_class(SetExpr::complement(e));
  a.bounded = bounded_of(e);
  a.hull = hull_of(e);
  a.measure = measure_of(e, cfg);
  a.closed = closedness(e);
  return a;
}

}  // namespace omega

#endif  // OMEGA_ATTRIBUTES_HPP
