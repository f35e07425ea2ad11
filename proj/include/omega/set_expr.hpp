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

#ifndef OMEGA_SET_EXPR_HPP
#define OMEGA_SET_EXPR_HPP

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "omega/errors.hpp"
#include "omega/fractal.hpp"
#include "omega/rational.hpp"
#include "omega/scalar.hpp"

namespace omega {

class SetExpr;

struct EmptyAtom {
  bool operator==(const EmptyAtom&) const = default;
};
struct PointsAtom {
  std::vector<Scalar> points;
  bool operator==(const PointsAtom&) const = default;
};
struct IntervalAtom {
  ExtScalar lo;
  ExtScalar hi;
  bool lo_closed = false;
  bool hi_closed = false;
  bool operator==(const IntervalAtom&) const = default;
};
struct RationalsAtom {
  bool operator==(const RationalsAtom&) const = default;
};
struct IntegersAtom {
  bool operator==(const IntegersAtom&) const = default;
};
struct FractalNode {
  FractalAtom atom;
  bool operator==(const FractalNode&) const = default;
};
struct UnionNode {
  std::vector<SetExpr> children;
  bool operator==(const UnionNode&) const;
};
struct IntersectNode {
  std::vector<SetExpr> children;
  bool operator==(const IntersectNode&) const;
};
struct ComplementNode {
  std::vector<SetExpr> child;  // exactly one
  bool operator==(const ComplementNode&) const;
};
struct AffineNode {
  Rat scale;
  Rat shift;
  std::vector<SetExpr> child;  // exactly one
  bool operator==(const AffineNode&) const;
};

using SetNode = std::variant<EmptyAtom, PointsAtom, IntervalAtom, RationalsAtom, IntegersAtom,
                             FractalNode, UnionNode, IntersectNode, ComplementNode, AffineNode>;

/// Immutable expression tree over subsets of the real line.
class SetExpr {
 public:
  SetExpr() : node_(std::make_shared<const SetNode>(EmptyAtom{})) {}

  static SetExpr empty() { return SetExpr(EmptyAtom{}); }
  static SetExpr reals() {
    return interval(ExtScalar::minus_inf(), ExtScalar::plus_inf(), false, false);
  }
  static SetExpr rationals() { return SetExpr(RationalsAtom{}); }
  static SetExpr integers() { return SetExpr(IntegersAtom{}); }
  static SetExpr points(std::vector<Scalar> pts) { return SetExpr(PointsAtom{std::move(pts)}); }
  static SetExpr point(const Scalar& p) { return points({p}); }

  static SetExpr interval(const ExtScalar& lo, const ExtScalar& hi, bool lo_closed,
                          bool hi_closed) {
    if (lo.kind() == ExtScalar::Kind::PlusInf || hi.kind() == ExtScalar::Kind::MinusInf)
      fail(ErrorKind::InvalidArgument, "interval endpoints out of order");
    if ((!lo.is_finite() && lo_closed) || (!hi.is_finite() && hi_closed))
      fail(ErrorKind::InvalidArgument, "infinite interval endpoints must be open");
    auto c = lo <=> hi;
    if (c > 0) fail(ErrorKind::InvalidArgument, "interval requires lo <= hi");
    if (c == 0 && !(lo_closed && hi_closed))
      fail(ErrorKind::InvalidArgument, "degenerate interval must be closed on both sides");
    return SetExpr(IntervalAtom{lo, hi, lo_closed, hi_closed});
  }
  static SetExpr closed(const Scalar& lo, const Scalar& hi) { return interval(lo, hi, true, true); }
  static SetExpr open(const ExtScalar& lo, const ExtScalar& hi) {
    return interval(lo, hi, false, false);
  }

  static SetExpr cantor(const Rat& lo, const Rat& hi, const Rat& ratio) {
    return SetExpr(FractalNode{FractalAtom::cantor(lo, hi, ratio)});
  }
  static SetExpr svc(const Rat& lo, const Rat& hi, const Rat& beta) {
    return SetExpr(FractalNode{FractalAtom::svc(lo, hi, beta)});
  }
  static SetExpr fractal(const FractalAtom& atom) { return SetExpr(FractalNode{atom}); }

  static SetExpr unite(std::vector<SetExpr> children) {
    if (children.empty()) return empty();
    return SetExpr(UnionNode{std::move(children)});
  }
  static SetExpr intersect(std::vector<SetExpr> children) {
    if (children.empty()) return reals();
    return SetExpr(IntersectNode{std::move(children)});
  }
  static SetExpr complement(SetExpr child) { return SetExpr(ComplementNode{{std::move(child)}}); }
  static SetExpr difference(SetExpr a, SetExpr b) {
    return intersect({std::move(a), complement(std::move(b))});
  }
  static SetExpr affine(const Rat& scale, const Rat& shift, SetExpr child) {
    if (scale == 0) fail(ErrorKind::InvalidArgument, "affine scale must be nonzero");
    return SetExpr(AffineNode{scale, shift, {std::move(child)}});
  }

  const SetNode& node() const { return *node_; }

  bool is_atom() const {
    return !std::holds_alternative<UnionNode>(*node_) &&
           !std::holds_alternative<IntersectNode>(*node_) &&
           !std::holds_alternative<ComplementNode>(*node_) &&
           !std::holds_alternative<AffineNode>(*node_);
  }

  bool operator==(const SetExpr& o) const { return node_ == o.node_ || *node_ == *o.node_; }

  /// DSL rendering; parses back to an identical tree.
  std::string str() const;

 private:
  explicit SetExpr(SetNode n) : node_(std::make_shared<const SetNode>(std::move(n))) {}

  std::shared_ptr<const SetNode> node_;
};

inline bool UnionNode::operator==(const UnionNode& o) const { return children == o.children; }
inline bool IntersectNode::operator==(const IntersectNode& o) const {
  return children == o.children;
}
inline bool ComplementNode::operator==(const ComplementNode& o) const { return child == o.child; }
inline bool AffineNode::operator==(const AffineNode& o) const {
  return scale == o.scale && shift == o.shift && child == o.child;
}

namespace detail {

inline std::string operand(const SetExpr& e) {
  if (e.is_atom()) return e.str();
  if (std::holds_alternative<ComplementNode>(e.node()) ||
      std::holds_alternative<AffineNode>(e.node()))
    return e.str();
  return "(" + e.str() + ")";
}

inline std::string interval_str(const IntervalAtom& i) {
  if (!i.lo.is_finite() && !i.hi.is_finite()) return "RR";
  return std::string(i.lo_closed ? "[" : "(") + i.lo.str() + "," + i.hi.str() +
         (i.hi_closed ? "]" : ")");
}

}  // namespace detail

inline std::string SetExpr::str() const {
  struct Printer {
    std::string operator()(const EmptyAtom&) const { return "EMPTY"; }
    std::string operator()(const PointsAtom& p) const {
      std::string out = "{";
      for (std::size_t i = 0; i < p.points.size(); ++i) {
        if (i) out += ",";
        out += p.points[i].str();
      }
      return out + "}";
    }
    std::string operator()(const IntervalAtom& i) const { return detail::interval_str(i); }
    std::string operator()(const RationalsAtom&) const { return "QQ"; }
    std::string operator()(const IntegersAtom&) const { return "ZZ"; }
    std::string operator()(const FractalNode& f) const { return f.atom.str(); }
    std::string operator()(const UnionNode& u) const {
      std::string out;
      for (std::size_t i = 0; i < u.children.size(); ++i) {
        if (i) out += " | ";
        out += detail::operand(u.children[i]);
      }
      return out;
    }
    std::string operator()(const IntersectNode& u) const {
      std::string out;
      for (std::size_t i = 0; i < u.children.size(); ++i) {
        if (i) out += " & ";
        out += detail::operand(u.children[i]);
      }
      return out;
    }
    std::string operator()(const ComplementNode& c) const {
      const SetExpr& child = c.child.front();
      if (child.is_atom()) return child.str() + "^c";
      return "(" + child.str() + ")^c";
    }
    std::string operator()(const AffineNode& a) const {
      const SetExpr& child = a.child.front();
      std::string inner = child.is_atom() ? child.str() : "(" + child.str() + ")";
      std::string shift;
      if (a.shift < 0) shift = "-" + to_string(rat_abs(a.shift));
      else if (a.shift > 0) shift = "+" + to_string(a.shift);
      return to_string(a.scale) + "*" + inner + shift;
    }
  };
  return std::visit(Printer{}, *node_);
}

}  // namespace omega

#endif  // OMEGA_SET_EXPR_HPP
