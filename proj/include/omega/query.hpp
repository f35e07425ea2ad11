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

#ifndef OMEGA_QUERY_HPP
#define OMEGA_QUERY_HPP

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "omega/classify.hpp"
#include "omega/errors.hpp"
#include "omega/outer_measure.hpp"
#include "omega/power.hpp"

namespace omega {

// ---------------------------------------------------------------------------
// Query AST.

using SetOrCollection = std::variant<SetExpr, PowerCollection>;

struct CardQ { SetExpr set; bool operator==(const CardQ&) const = default; };
struct Step1Q { SetExpr set; bool operator==(const Step1Q&) const = default; };
struct Step2Q { SetExpr set; bool operator==(const Step2Q&) const = default; };
struct MeasureQ { SetExpr set; bool operator==(const MeasureQ&) const = default; };
struct CoverQ {
  SetExpr set;
  std::uint64_t depth = 1;
  bool operator==(const CoverQ&) const = default;
};
struct DhQ {
  SetExpr a;
  SetExpr b;
  bool operator==(const DhQ&) const = default;
};
struct MuQ { PowerCollection coll; bool operator==(const MuQ&) const = default; };
struct MemberQ {
  PowerCollection coll;
  SetExpr set;
  bool operator==(const MemberQ&) const = default;
};
struct TotQ { SetOrCollection arg; bool operator==(const TotQ&) const = default; };

/// Operand of cmp: tot(...), card(...), step1(...) or step2(...).
struct TotExpr {
  enum class Kind { Tot, Card, Step1, Step2 };
  Kind kind = Kind::Tot;
  SetOrCollection arg;
  bool operator==(const TotExpr&) const = default;
};
struct CmpQ {
  TotExpr a;
  TotExpr b;
  bool operator==(const CmpQ&) const = default;
};
struct InterleaveQ {
  std::vector<long> digits;
  bool operator==(const InterleaveQ&) const = default;
};

using Query = std::variant<CardQ, Step1Q, Step2Q, MeasureQ, CoverQ, DhQ, MuQ, MemberQ, TotQ, CmpQ,
                           InterleaveQ>;

// ---------------------------------------------------------------------------
// Printer.

inline std::string arg_str(const SetOrCollection& x) {
  if (auto s = std::get_if<SetExpr>(&x)) return s->str();
  return collection_str(std::get<PowerCollection>(x));
}

inline std::string tot_expr_str(const TotExpr& t) {
  static const char* names[] = {"tot", "card", "step1", "step2"};
  return std::string(names[static_cast<int>(t.kind)]) + "(" + arg_str(t.arg) + ")";
}

inline std::string query_str(const Query& q) {
  struct Printer {
    std::string operator()(const CardQ& x) const { return "card(" + x.set.str() + ")"; }
    std::string operator()(const Step1Q& x) const { return "step1(" + x.set.str() + ")"; }
    std::string operator()(const Step2Q& x) const { return "step2(" + x.set.str() + ")"; }
    std::string operator()(const MeasureQ& x) const { return "measure(" + x.set.str() + ")"; }
    std::string operator()(const CoverQ& x) const {
      return "cover(" + x.set.str() + ", " + std::to_string(x.depth) + ")";
    }
    std::string operator()(const DhQ& x) const { return "dh(" + x.a.str() + ", " + x.b.str() + ")"; }
    std::string operator()(const MuQ& x) const { return "mu(" + collection_str(x.coll) + ")"; }
    std::string operator()(const MemberQ& x) const {
      return "member(" + collection_str(x.coll) + ", " + x.set.str() + ")";
    }
    std::string operator()(const TotQ& x) const { return "tot(" + arg_str(x.arg) + ")"; }
    std::string operator()(const CmpQ& x) const {
      return "cmp(" + tot_expr_str(x.a) + ", " + tot_expr_str(x.b) + ")";
    }
    std::string operator()(const InterleaveQ& x) const {
      std::string out = "interleave([";
      for (std::size_t i = 0; i < x.digits.size(); ++i)
        out += (i ? "," : "") + std::to_string(x.digits[i]);
      return out + "])";
    }
  };
  return std::visit(Printer{}, q);
}

// ---------------------------------------------------------------------------
// Parser. Offsets in errors are 1-based byte positions.

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Query parse_query() {
    Query q = query();
    expect_end();
    return q;
  }

  SetExpr parse_set() {
    SetExpr e = set();
    expect_end();
    return e;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void error(std::vector<std::string> expected, const std::string& detail = {}) {
    throw ParseError(pos_ + 1, std::move(expected), detail);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(std::string_view tok) {
    skip_ws();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) error({std::string(tok)});
  }
  void expect_end() {
    if (!at_end()) error({"end of input"});
  }

  static bool word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }
  std::string peek_word() {
    skip_ws();
    std::size_t i = pos_;
    if (i >= s_.size() || !std::isalpha(static_cast<unsigned char>(s_[i]))) return {};
    while (i < s_.size() && word_char(s_[i])) ++i;
    return std::string(s_.substr(pos_, i - pos_));
  }
  bool accept_word(std::string_view w) {
    if (peek_word() != w) return false;
    pos_ += w.size();
    return true;
  }

  // -- numbers -------------------------------------------------------------

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  /// Unsigned p or p/q.
  std::optional<Rat> unsigned_rat() {
    std::size_t save = pos_;
    std::string num = digits();
    if (num.empty()) {
      pos_ = save;
      return std::nullopt;
    }
    std::string den = "1";
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        error({"digit"});
      den = digits();
      if (den.find_first_not_of('0') == std::string::npos) error({"nonzero denominator"});
    }
    return make_rat(BigInt{num}, BigInt{den});
  }

  Rat rat() {
    bool neg = accept("-");
    auto q = unsigned_rat();
    if (!q) error({"rational"});
    return neg ? Rat(-*q) : *q;
  }

  std::uint64_t natural() {
    std::string d = digits();
    if (d.empty()) error({"integer"});
    if (d.size() > 18) error({"integer below 10^18"});
    return std::stoull(d);
  }

  // -- scalars -------------------------------------------------------------

  std::optional<Constant> constant_word() {
    std::string w = peek_word();
    if (w == "sqrt2") return Constant::Sqrt2;
    if (w == "pi") return Constant::Pi;
    if (w == "e") return Constant::E;
    return std::nullopt;
  }

  Scalar term() {
    if (auto c = constant_word()) {
      pos_ += constant_name(*c).size();
      return Scalar::of(*c);
    }
    auto q = unsigned_rat();
    if (!q) error({"number", "sqrt2", "pi", "e"});
    std::size_t save = pos_;
    if (accept("*")) {
      if (auto c = constant_word()) {
        pos_ += constant_name(*c).size();
        return Scalar::make(*q, *c, Rat(0));
      }
      pos_ = save;
    }
    return Scalar(*q);
  }

  Scalar scalar() {
    std::size_t start = pos_;
    bool neg = accept("-");
    Scalar acc = term();
    if (neg) acc = -acc;
    for (;;) {
      skip_ws();
      std::size_t save = pos_;
      bool plus = accept("+");
      bool minus = !plus && accept("-");
      if (!plus && !minus) break;
      char c = peek();
      if (!(std::isdigit(static_cast<unsigned char>(c)) || constant_word())) {
        pos_ = save;
        break;
      }
      Scalar t = term();
      auto sum = try_add(acc, minus ? -t : t);
      if (!sum) {
        pos_ = start;
        fail(ErrorKind::UnsupportedScalar,
             "scalar at offset " + std::to_string(start + 1) + " mixes two different constants");
      }
      acc = *sum;
    }
    return acc;
  }

  ExtScalar ext_scalar() {
    std::size_t save = pos_;
    bool neg = accept("-");
    if (!neg) accept("+");
    if (accept_word("inf")) return neg ? ExtScalar::minus_inf() : ExtScalar::plus_inf();
    pos_ = save;
    return scalar();
  }

  // -- sets ----------------------------------------------------------------

  SetExpr set() {
    SetExpr acc = intersection();
    bool fresh_union = false;
    for (;;) {
      if (accept("|")) {
        SetExpr rhs = intersection();
        if (fresh_union) {
          auto kids = std::get<UnionNode>(acc.node()).children;
          kids.push_back(rhs);
          acc = SetExpr::unite(std::move(kids));
        } else {
          acc = SetExpr::unite({acc, rhs});
          fresh_union = true;
        }
      } else if (accept("\\")) {
        acc = SetExpr::difference(acc, intersection());
        fresh_union = false;
      } else {
        return acc;
      }
    }
  }

  SetExpr intersection() {
    SetExpr acc = postfix();
    bool fresh = false;
    while (accept("&")) {
      SetExpr rhs = postfix();
      if (fresh) {
        auto kids = std::get<IntersectNode>(acc.node()).children;
        kids.push_back(rhs);
        acc = SetExpr::intersect(std::move(kids));
      } else {
        acc = SetExpr::intersect({acc, rhs});
        fresh = true;
      }
    }
    return acc;
  }

  SetExpr postfix() {
    SetExpr e = primary();
    while (accept("^c")) e = SetExpr::complement(e);
    return e;
  }

  SetExpr interval_after_open(bool lo_closed) {
    ExtScalar lo = ext_scalar();
    expect(",");
    ExtScalar hi = ext_scalar();
    bool hi_closed;
    if (accept("]")) hi_closed = true;
    else if (accept(")")) hi_closed = false;
    else error({"]", ")"});
    return SetExpr::interval(lo, hi, lo_closed, hi_closed);
  }

  /// Closed bounded rational interval for fractal bases.
  std::pair<Rat, Rat> base_interval() {
    std::size_t at = pos_;
    if (!accept("[")) error({"["});
    SetExpr iv = interval_after_open(true);
    const auto& a = std::get<IntervalAtom>(iv.node());
    if (!a.hi_closed || !a.lo.is_finite() || !a.hi.is_finite() || !a.lo.value().is_rational() ||
        !a.hi.value().is_rational() || a.lo == a.hi) {
      pos_ = at;
      error({"closed bounded rational interval"});
    }
    return {a.lo.value().rational(), a.hi.value().rational()};
  }

  SetExpr fractal(bool cantor) {
    expect("(");
    auto [lo, hi] = base_interval();
    expect(",");
    Rat p = rat();
    expect(")");
    return cantor ? SetExpr::cantor(lo, hi, p) : SetExpr::svc(lo, hi, p);
  }

  SetExpr primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      std::size_t after = pos_;
      std::optional<ParseError> first;
      try {
        ext_scalar();
        expect(",");
        pos_ = after;
      } catch (const ParseError& e) {
        first = e;
      }
      if (!first) return interval_after_open(false);
      pos_ = after;
      try {
        SetExpr inner = set();
        expect(")");
        return inner;
      } catch (const ParseError& e) {
        if (e.offset() > first->offset()) throw;
        if (e.offset() < first->offset()) throw *first;
        std::vector<std::string> merged = first->expected();
        for (const auto& x : e.expected())
          if (std::find(merged.begin(), merged.end(), x) == merged.end()) merged.push_back(x);
        throw ParseError(e.offset(), merged);
      }
    }
    if (c == '[') {
      ++pos_;
      return interval_after_open(true);
    }
    if (c == '{') {
      ++pos_;
      std::vector<Scalar> pts{scalar()};
      while (accept(",")) pts.push_back(scalar());
      expect("}");
      return SetExpr::points(std::move(pts));
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      Rat a = rat();
      expect("*");
      SetExpr inner = primary();
      Rat b(0);
      std::size_t save = pos_;
      if (accept("+")) {
        if (auto q = unsigned_rat()) b = *q;
        else pos_ = save;
      } else if (accept("-")) {
        if (auto q = unsigned_rat()) b = -*q;
        else pos_ = save;
      }
      if (a == 0) error({"nonzero scale"});
      return SetExpr::affine(a, b, inner);
    }
    std::string w = peek_word();
    if (w == "RR") { pos_ += 2; return SetExpr::reals(); }
    if (w == "QQ") { pos_ += 2; return SetExpr::rationals(); }
    if (w == "ZZ") { pos_ += 2; return SetExpr::integers(); }
    if (w == "EMPTY") { pos_ += 5; return SetExpr::empty(); }
    if (w == "cantor") { pos_ += 6; return fractal(true); }
    if (w == "svc") { pos_ += 3; return fractal(false); }
    error({"set"});
  }

  // -- collections and queries ---------------------------------------------

  bool at_collection() {
    std::string w = peek_word();
    return w == "ball" || w == "family" || w == "allsets";
  }

  HBall ball() {
    if (!accept_word("ball")) error({"ball"});
    expect("(");
    SetExpr c = set();
    expect(",");
    std::size_t at = pos_;
    Rat r = rat();
    expect(")");
    if (r <= 0) {
      pos_ = at;
      error({"positive radius"});
    }
    return HBall::make(c, r);
  }

  PowerCollection collection() {
    if (accept_word("allsets")) return AllOfPX{RealLine{}};
    if (accept_word("family")) {
      expect("{");
      std::vector<SetExpr> members;
      if (!accept("}")) {
        members.push_back(set());
        while (accept(",")) members.push_back(set());
        expect("}");
      }
      return FiniteFamily{std::move(members)};
    }
    if (peek_word() != "ball") error({"ball", "family", "allsets"});
    std::vector<HBall> balls{ball()};
    while (accept("|")) balls.push_back(ball());
    if (balls.size() == 1) return balls.front();
    return UnionOfBalls{std::move(balls)};
  }

  SetOrCollection set_or_collection() {
    if (at_collection()) return collection();
    return set();
  }

  TotExpr tot_expr() {
    std::string w = peek_word();
    TotExpr t;
    if (w == "tot") t.kind = TotExpr::Kind::Tot;
    else if (w == "card") t.kind = TotExpr::Kind::Card;
    else if (w == "step1") t.kind = TotExpr::Kind::Step1;
    else if (w == "step2") t.kind = TotExpr::Kind::Step2;
    else error({"tot", "card", "step1", "step2"});
    pos_ += w.size();
    expect("(");
    if (t.kind == TotExpr::Kind::Tot) t.arg = set_or_collection();
    else t.arg = set();
    expect(")");
    return t;
  }

  Query query() {
    std::string w = peek_word();
    static const std::vector<std::string> names = {"card",   "step1", "step2", "measure",
                                                   "cover",  "dh",    "mu",    "member",
                                                   "tot",    "cmp",   "interleave"};
    if (std::find(names.begin(), names.end(), w) == names.end()) error(names);
    pos_ += w.size();
    expect("(");
    Query q;
    if (w == "card") q = CardQ{set()};
    else if (w == "step1") q = Step1Q{set()};
    else if (w == "step2") q = Step2Q{set()};
    else if (w == "measure") q = MeasureQ{set()};
    else if (w == "cover") {
      SetExpr s = set();
      expect(",");
      std::size_t at = pos_;
      std::uint64_t d = natural();
      if (d == 0) {
        pos_ = at;
        error({"positive depth"});
      }
      q = CoverQ{s, d};
    } else if (w == "dh") {
      SetExpr a = set();
      expect(",");
      q = DhQ{a, set()};
    } else if (w == "mu") q = MuQ{collection()};
    else if (w == "member") {
      PowerCollection c = collection();
      expect(",");
      q = MemberQ{c, set()};
    } else if (w == "tot") q = TotQ{set_or_collection()};
    else if (w == "cmp") {
      TotExpr a = tot_expr();
      expect(",");
      q = CmpQ{a, tot_expr()};
    } else {
      expect("[");
      std::vector<long> ds;
      if (!accept("]")) {
        do {
          bool neg = accept("-");
          std::uint64_t d = natural();
          ds.push_back(neg ? -static_cast<long>(d) : static_cast<long>(d));
        } while (accept(","));
        expect("]");
      }
      q = InterleaveQ{std::move(ds)};
    }
    expect(")");
    return q;
  }
};

inline Query parse_query(std::string_view text) { return Parser(text).parse_query(); }
inline SetExpr parse_set(std::string_view text) { return Parser(text).parse_set(); }

// ---------------------------------------------------------------------------
// Evaluation.

struct EvalConfig {
  Rat tol = make_rat(1, 1000000);
  unsigned max_depth = 40;
  std::uint64_t seed = 0;
  bool json = false;

  MeasureConfig measure() const { return {tol, max_depth}; }
  HausdorffConfig hausdorff() const {
    HausdorffConfig h;
    h.tol = tol;
    h.max_depth = max_depth;
    return h;
  }
};

struct EvalResult {
  std::string kind;
  std::string value;
  bool exact = true;
  std::optional<std::pair<std::string, std::string>> bounds;
  std::vector<std::string> warnings;
};

namespace detail {

inline void set_measure(EvalResult& r, const MeasureValue& m, const std::string& prefix = {}) {
  r.value = prefix + m.str();
  r.exact = m.kind() != MeasureValue::Kind::Bounds;
  if (!r.exact) {
    RatInterval b = m.enclosure(Rat(1));
    r.bounds = std::make_pair(to_string(b.lo), to_string(b.hi));
  }
}

struct Comparable {
  std::variant<Totality, CardClass, StepTotality> v;
};

inline Totality totality_of(const SetOrCollection& x, const EvalConfig& cfg) {
  if (auto s = std::get_if<SetExpr>(&x)) return set_totality(RealLine{}, *s, cfg.measure());
  return collection_totality(std::get<PowerCollection>(x), cfg.hausdorff());
}

inline Comparable comparable(const TotExpr& t, const EvalConfig& cfg,
                             std::vector<std::string>& warnings) {
  switch (t.kind) {
    case TotExpr::Kind::Tot: return {totality_of(t.arg, cfg)};
    case TotExpr::Kind::Card: return {card_class(std::get<SetExpr>(t.arg))};
    case TotExpr::Kind::Step1: return {step1_totality(std::get<SetExpr>(t.arg))};
    case TotExpr::Kind::Step2: return {step2_totality(std::get<SetExpr>(t.arg), &warnings)};
  }
  return {};
}

}  // namespace detail

inline EvalResult evaluate(const Query& q, const EvalConfig& cfg = {}) {
  EvalResult r;
  if (auto x = std::get_if<CardQ>(&q)) {
    r.kind = "cardinality";
    r.value = card_class(x->set).str();
  } else if (auto x = std::get_if<Step1Q>(&q)) {
    r.kind = "step_totality";
    r.value = step1_totality(x->set).str();
  } else if (auto x = std::get_if<Step2Q>(&q)) {
    r.kind = "step_totality";
    r.value = step2_totality(x->set, &r.warnings).str();
  } else if (auto x = std::get_if<MeasureQ>(&q)) {
    r.kind = "measure";
    detail::set_measure(r, measure_of(x->set, cfg.measure()));
  } else if (auto x = std::get_if<CoverQ>(&q)) {
    r.kind = "cover_bound";
    if (x->depth > 64) fail(ErrorKind::InvalidArgument, "cover depth above 64");
    r.value = greedy_cover_bound(x->set, static_cast<unsigned>(x->depth), cfg.tol).str();
  } else if (auto x = std::get_if<DhQ>(&q)) {
    r.kind = "distance";
    HResult d = hausdorff_distance(x->a, x->b, cfg.hausdorff());
    r.warnings = d.warnings;
    detail::set_measure(r, d.value);
  } else if (auto x = std::get_if<MuQ>(&q)) {
    r.kind = "measure";
    MuResult m = mu(x->coll, cfg.hausdorff());
    r.warnings = m.warnings;
    detail::set_measure(r, m.value);
  } else if (auto x = std::get_if<MemberQ>(&q)) {
    r.kind = "membership";
    BallMembership m = collection_contains(x->coll, x->set, cfg.hausdorff());
    r.warnings = m.warnings;
    r.value = m.member ? "true" : "false";
  } else if (auto x = std::get_if<TotQ>(&q)) {
    r.kind = "totality";
    Totality t = detail::totality_of(x->arg, cfg);
    if (t.kind == Totality::Kind::Omega) detail::set_measure(r, t.value, "Omega_");
    else r.value = t.str();
  } else if (auto x = std::get_if<CmpQ>(&q)) {
    r.kind = "ordering";
    auto a = detail::comparable(x->a, cfg, r.warnings);
    auto b = detail::comparable(x->b, cfg, r.warnings);
    if (a.v.index() != b.v.index())
      fail(ErrorKind::InvalidArgument, "cmp operands are different kinds of totality");
    std::strong_ordering o = std::strong_ordering::equal;
    if (auto t = std::get_if<Totality>(&a.v)) o = compare_totality(*t, std::get<Totality>(b.v), cfg.tol);
    else if (auto c = std::get_if<CardClass>(&a.v)) o = card_compare(*c, std::get<CardClass>(b.v));
    else o = step_compare(std::get<StepTotality>(a.v), std::get<StepTotality>(b.v));
    r.value = to_string(o);
  } else {
    const auto& iq = std::get<InterleaveQ>(q);
    r.kind = "digits";
    std::vector<int> ds;
    for (long d : iq.digits) {
      if (d < 0 || d > 9)
        fail(ErrorKind::DigitOutOfRange, "digit " + std::to_string(d) + " outside 0..9");
      ds.push_back(static_cast<int>(d));
    }
    std::string out = "[";
    auto res = interleave_digits(ds);
    for (std::size_t i = 0; i < res.size(); ++i) out += (i ? "," : "") + std::to_string(res[i]);
    r.value = out + "]";
  }
  return r;
}

// ---------------------------------------------------------------------------
// Rendering of one input line.

struct LineOutcome {
  std::string text;
  bool ok = true;
};

inline LineOutcome run_line(const std::string& input, const EvalConfig& cfg) {
  using nlohmann::ordered_json;
  LineOutcome out;
  try {
    EvalResult r = evaluate(parse_query(input), cfg);
    if (cfg.json) {
      ordered_json j;
      j["query"] = input;
      ordered_json res;
      res["kind"] = r.kind;
      res["value"] = r.value;
      res["exact"] = r.exact;
      if (r.bounds) res["bounds"] = {r.bounds->first, r.bounds->second};
      j["result"] = res;
      j["warnings"] = r.warnings;
      out.text = j.dump();
    } else {
      out.text = r.kind + ": " + r.value;
      if (!r.exact) out.text += " (bounds)";
      for (const auto& w : r.warnings) out.text += "; warning: " + w;
    }
  } catch (const Error& e) {
    out.ok = false;
    if (cfg.json) {
      ordered_json j;
      j["query"] = input;
      ordered_json err;
      err["kind"] = std::string(to_string(e.kind()));
      err["message"] = e.what();
      if (auto pe = dynamic_cast<const ParseError*>(&e)) {
        err["offset"] = pe->offset();
        err["expected"] = pe->expected();
      }
      j["error"] = err;
      j["warnings"] = ordered_json::array();
      out.text = j.dump();
    } else {
      out.text = "error: " + std::string(to_string(e.kind())) + ": " + e.what();
    }
  }
  return out;
}

}  // namespace omega

#endif  // OMEGA_QUERY_HPP
