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

#ifndef OMEGA_VERIFY_HPP
#define OMEGA_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "omega/classify.hpp"
#include "omega/outer_measure.hpp"
#include "omega/power.hpp"
#include "omega/random_sets.hpp"

namespace omega {

struct Violation {
  std::string check;
  std::vector<std::string> witnesses;
  std::string lhs;
  std::string rhs;
};

struct VerifyReport {
  std::string suite;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t checks = 0;
  std::size_t undecided = 0;
  std::size_t regenerated = 0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  nlohmann::ordered_json json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["samples"] = samples;
    j["seed"] = seed;
    j["checks"] = checks;
    j["undecided"] = undecided;
    j["regenerated"] = regenerated;
    j["violations"] = nlohmann::ordered_json::array();
    for (const Violation& v : violations)
      j["violations"].push_back(
          {{"check", v.check}, {"witnesses", v.witnesses}, {"lhs", v.lhs}, {"rhs", v.rhs}});
    return j;
  }

  std::string text() const {
    std::string out = "suite " + suite + ": " + std::to_string(samples) + " samples, seed " +
                      std::to_string(seed) + ", " + std::to_string(checks) + " checks, " +
                      std::to_string(violations.size()) + " violations, " +
                      std::to_string(undecided) + " undecided, " + std::to_string(regenerated) +
                      " regenerated\n";
    for (const Violation& v : violations) {
      out += "  violation [" + v.check + "] lhs=" + v.lhs + " rhs=" + v.rhs;
      for (const auto& w : v.witnesses) out += " | " + w;
      out += "\n";
    }
    return out;
  }
};

enum class Verdict { Holds, Fails, Undecided };

/// Certified x <= y.
inline Verdict certify_le(const MeasureValue& x, const MeasureValue& y, const Rat& eps) {
  if (y.is_infinite()) return Verdict::Holds;
  if (x.is_infinite()) return Verdict::Fails;
  if (x.is_exact() && y.is_exact()) {
    auto c = scalar_cmp(x.value(), y.value());
    return c <= 0 ? Verdict::Holds : Verdict::Fails;
  }
  RatInterval a = x.enclosure(eps), b = y.enclosure(eps);
  if (a.hi <= b.lo) return Verdict::Holds;
  if (a.lo > b.hi) return Verdict::Fails;
  return Verdict::Undecided;
}

namespace detail {

inline bool regenerable(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::UnsupportedCombination:
    case ErrorKind::AttributeUnderdetermined:
    case ErrorKind::MembershipUndetermined:
      return true;
    default:
      return false;
  }
}

/// Runs `body` until it completes without leaving the decidable fragment.
inline void with_retries(VerifyReport& report, const std::function<void()>& body) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    try {
      body();
      return;
    } catch (const Error& e) {
      if (!regenerable(e)) throw;
      ++report.regenerated;
    }
  }
  fail(ErrorKind::Indeterminate, "sample generation kept leaving the decidable fragment");
}

inline void record(VerifyReport& r, Verdict v, const std::string& check,
                   std::vector<std::string> witnesses, const std::string& lhs,
                   const std::string& rhs) {
  ++r.checks;
  if (v == Verdict::Undecided) ++r.undecided;
  if (v == Verdict::Fails) r.violations.push_back({check, std::move(witnesses), lhs, rhs});
}

inline Verdict verdict(bool holds) { return holds ? Verdict::Holds : Verdict::Fails; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Rewrites that preserve the denoted set.

inline SetExpr rewrite(Rng& rng, SetGenerator& gen, const SetExpr& e, int depth = 2) {
  SetExpr x = e;
  if (depth > 0) {
    if (auto u = std::get_if<UnionNode>(&x.node())) {
      std::vector<SetExpr> kids;
      for (const SetExpr& c : u->children) kids.push_back(rewrite(rng, gen, c, depth - 1));
      if (rng.coin()) std::reverse(kids.begin(), kids.end());
      x = SetExpr::unite(kids);
    } else if (auto n = std::get_if<IntersectNode>(&x.node())) {
      std::vector<SetExpr> kids;
      for (const SetExpr& c : n->children) kids.push_back(rewrite(rng, gen, c, depth - 1));
      if (rng.coin()) std::reverse(kids.begin(), kids.end());
      x = SetExpr::intersect(kids);
    } else if (auto c = std::get_if<ComplementNode>(&x.node())) {
      x = SetExpr::complement(rewrite(rng, gen, c->child.front(), depth - 1));
    }
  }
  switch (rng.range(0, 7)) {
    case 0: return SetExpr::complement(SetExpr::complement(x));
    case 1: return SetExpr::unite({x, SetExpr::empty()});
    case 2: return SetExpr::intersect({SetExpr::reals(), x});
    case 3: return SetExpr::affine(Rat(-1), Rat(0), SetExpr::affine(Rat(-1), Rat(0), x));
    case 4: {
      SetExpr cut = gen.interval();
      return SetExpr::unite({SetExpr::difference(x, cut), SetExpr::intersect({x, cut})});
    }
    case 5: {
      if (auto u = std::get_if<UnionNode>(&x.node())) {
        std::vector<SetExpr> comps;
        for (const SetExpr& c : u->children) comps.push_back(SetExpr::complement(c));
        return SetExpr::complement(SetExpr::intersect(comps));
      }
      return x;
    }
    case 6: return SetExpr::affine(Rat(2), Rat(1), SetExpr::affine(make_rat(1, 2), make_rat(-1, 2), x));
    default: return x;
  }
}

// ---------------------------------------------------------------------------
// Suites.

inline VerifyReport verify_outer_measure(std::uint64_t samples, std::uint64_t seed,
                                         const MeasureConfig& cfg = {}) {
  VerifyReport r;
  r.suite = "outer-measure";
  r.samples = samples;
  r.seed = seed;
  Rng rng(seed);
  SetGenerator gen(rng);
  detail::record(r, detail::verdict(measure_of(SetExpr::empty(), cfg) == MeasureValue::exact(0)),
                 "axiom1", {"EMPTY"}, measure_of(SetExpr::empty(), cfg).str(), "0");
  for (std::uint64_t i = 0; i < samples; ++i) {
    detail::with_retries(r, [&] {
      SetExpr b = gen.expr(3), e = gen.expr(2), c = gen.expr(3);
      SetExpr a = SetExpr::intersect({b, e});
      SetExpr nothing = SetExpr::intersect({a, SetExpr::complement(a)});
      SetExpr ac = SetExpr::unite({a, c});
      MeasureValue m0 = measure_of(nothing, cfg), ma = measure_of(a, cfg), mb = measure_of(b, cfg);
      MeasureValue mc = measure_of(c, cfg), mac = measure_of(ac, cfg);
      SizeClass sa = size_of(a);
      SetExpr bounded = gen.bounded_expr(2);
      MeasureValue mbd = measure_of(bounded, cfg);
      Scalar cover = greedy_cover_bound(bounded, 6, cfg.eps);

      detail::record(r, detail::verdict(m0 == MeasureValue::exact(0)), "axiom1",
                     {nothing.str()}, m0.str(), "0");
      detail::record(r, certify_le(ma, mb, cfg.eps), "axiom2", {a.str(), b.str()}, ma.str(),
                     mb.str());
      MeasureValue sum = measure_add(ma, mc, cfg.eps);
      detail::record(r, certify_le(mac, sum, cfg.eps), "axiom3", {a.str(), c.str()}, mac.str(),
                     sum.str());
      if (sa.is_countable())
        detail::record(r, detail::verdict(ma == MeasureValue::exact(0)), "countable-null",
                       {a.str()}, ma.str(), "0");
      detail::record(r, certify_le(mbd, MeasureValue::exact(cover), cfg.eps), "cover-bound",
                     {bounded.str()}, mbd.str(), cover.str());
    });
  }
  return r;
}

inline VerifyReport verify_hausdorff(std::uint64_t samples, std::uint64_t seed,
                                     const HausdorffConfig& cfg = {}) {
  VerifyReport r;
  r.suite = "hausdorff";
  r.samples = samples;
  r.seed = seed;
  Rng rng(seed);
  SetGenerator gen(rng);
  auto d = [&](const SetExpr& a, const SetExpr& b) { return hausdorff_distance(a, b, cfg).value; };
  for (std::uint64_t i = 0; i < samples; ++i) {
    SetExpr s = gen.closed_bounded(), t = gen.closed_bounded(), u = gen.closed_bounded();
    MeasureValue ss = d(s, s), st = d(s, t), ts = d(t, s), su = d(s, u), tu = d(t, u);
    detail::record(r, detail::verdict(ss == MeasureValue::exact(0)), "identity", {s.str()},
                   ss.str(), "0");
    detail::record(r, detail::verdict(st == ts), "symmetry", {s.str(), t.str()}, st.str(),
                   ts.str());
    MeasureValue via = measure_add(st, tu, cfg.tol);
    detail::record(r, certify_le(su, via, cfg.tol), "triangle", {s.str(), t.str(), u.str()},
                   su.str(), via.str());
    Rat x = gen.grid(), y = gen.grid();
    MeasureValue dxy = d(SetExpr::point(x), SetExpr::point(y));
    detail::record(r, detail::verdict(dxy == MeasureValue::exact(Scalar(rat_abs(Rat(x - y))))),
                   "singleton-isometry", {to_string(x), to_string(y)}, dxy.str(),
                   to_string(rat_abs(Rat(x - y))));
  }
  // The empty-set conventions break the triangle inequality; pin that.
  SetExpr p0 = SetExpr::point(0), p5 = SetExpr::point(5), none = SetExpr::empty();
  MeasureValue direct = d(p0, p5), detour = measure_add(d(p0, none), d(none, p5), cfg.tol);
  detail::record(r, certify_le(direct, detour, cfg.tol) == Verdict::Fails ? Verdict::Holds : Verdict::Fails,
                 "empty-convention-triangle-failure", {p0.str(), none.str(), p5.str()},
                 direct.str(), detour.str());
  return r;
}

inline VerifyReport verify_classify(std::uint64_t samples, std::uint64_t seed,
                                    const MeasureConfig& cfg = {}) {
  VerifyReport r;
  r.suite = "classify";
  r.samples = samples;
  r.seed = seed;
  Rng rng(seed);
  SetGenerator gen(rng);
  for (std::uint64_t i = 0; i < samples; ++i) {
    detail::with_retries(r, [&] {
      SetExpr a = gen.expr(3);
      SetExpr b = rewrite(rng, gen, a);
      bool same_form = normalize(a) == normalize(b);
      CardClass ca = card_class(a), cb = card_class(b);
      StepTotality sa = step2_totality(a), sb = step2_totality(b);
      StepTotality s1 = step1_totality(a);
      MeasureValue ma = measure_of(a, cfg), mb = measure_of(b, cfg);
      SetExpr big = gen.expr(3), sub = SetExpr::intersect({big, gen.expr(2)});
      CardClass cbig = card_class(big), csub = card_class(sub);

      detail::record(r, detail::verdict(same_form), "canonical-invariance", {a.str(), b.str()},
                     describe(normalize(a)), describe(normalize(b)));
      detail::record(r, detail::verdict(ca == cb), "card-invariance", {a.str(), b.str()},
                     ca.str(), cb.str());
      detail::record(r, detail::verdict(sa == sb), "step2-invariance", {a.str(), b.str()},
                     sa.str(), sb.str());
      detail::record(r, detail::verdict(ma == mb), "measure-invariance", {a.str(), b.str()},
                     ma.str(), mb.str());
      bool refines = (s1.kind == StepTotality::Kind::OmegaHalf)
                         ? (sa.kind == StepTotality::Kind::OmegaThird ||
                            sa.kind == StepTotality::Kind::OmegaTwoThirds)
                         : sa == s1;
      detail::record(r, detail::verdict(refines), "step2-refines-step1", {a.str()}, s1.str(),
                     sa.str());
      detail::record(r, detail::verdict(card_compare(csub, cbig) <= 0), "card-monotone",
                     {sub.str(), big.str()}, csub.str(), cbig.str());
    });
    std::vector<int> digits;
    long n = rng.range(0, 12);
    for (long k = 0; k < n; ++k) digits.push_back(static_cast<int>(rng.range(0, 9)));
    auto out = interleave_digits(digits);
    detail::record(r, detail::verdict(!has_repeated_nonzero(out) && out.size() == 2 * digits.size()),
                   "interleave-no-repeat", {std::to_string(digits.size())}, "", "");
  }
  std::vector<CardClass> all;
  for (std::uint64_t n = 0; n <= 5; ++n) {
    all.push_back(CardClass::fin(n));
    all.push_back(CardClass::unc_fin(n));
  }
  all.push_back(CardClass::aleph0());
  all.push_back(CardClass::unc_unc());
  all.push_back(CardClass::unc_co0());
  for (const auto& x : all)
    for (const auto& y : all) {
      bool anti = (card_compare(x, y) == 0) == (x == y) &&
                  card_compare(x, y) == (0 <=> card_compare(y, x));
      detail::record(r, detail::verdict(anti), "card-order-antisymmetry", {x.str(), y.str()}, "", "");
      for (const auto& z : all)
        if (card_compare(x, y) <= 0 && card_compare(y, z) <= 0)
          detail::record(r, detail::verdict(card_compare(x, z) <= 0), "card-order-transitivity",
                         {x.str(), y.str(), z.str()}, "", "");
    }
  return r;
}

inline VerifyReport verify_strategic_pair(std::uint64_t samples, std::uint64_t seed,
                                          const HausdorffConfig& cfg = {}) {
  VerifyReport r;
  r.suite = "strategic-pair";
  r.samples = samples;
  r.seed = seed;
  Rng rng(seed);
  SetGenerator gen(rng);
  MeasureConfig mcfg{cfg.tol, cfg.max_depth};
  std::vector<Rat> grid = {make_rat(1, 2), Rat(1), make_rat(7, 3), Rat(100)};
  for (std::uint64_t i = 0; i < samples; ++i) grid.push_back(make_rat(rng.range(1, 400), rng.range(1, 12)));
  std::vector<Totality> tots;
  for (const Rat& v : grid) {
    Totality ts = set_totality(RealLine{}, witness_set(v), mcfg);
    Totality tc = collection_totality(witness_collection(v), cfg);
    Totality want = Totality::omega(MeasureValue::exact(Scalar(v)));
    detail::record(r, detail::verdict(ts == want && tc == want), "witness-pair", {to_string(v)},
                   ts.str(), tc.str());
    tots.push_back(ts);
  }
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = 0; j < grid.size(); j += 1 + grid.size() / 16) {
      Totality tc = collection_totality(witness_collection(grid[j]), cfg);
      bool agree = compare_totality(tots[i], tc) == (cmp(grid[i], grid[j]) <=> 0);
      detail::record(r, detail::verdict(agree), "cross-space-order",
                     {to_string(grid[i]), to_string(grid[j])}, tots[i].str(), tc.str());
    }

  HBall unit = HBall::make(SetExpr::closed(-1, 1), Rat(1));
  for (std::uint64_t i = 0; i < samples; ++i) {
    SetExpr t = gen.closed_bounded(false);
    BallMembership in = ball_contains(unit, t, cfg);
    HDist dist = hausdorff_distance(t, unit.center, cfg).value;
    bool below = dist.is_exact() && dist.value() < Scalar(1);
    detail::record(r, detail::verdict(in.member == below), "ball-characterization", {t.str()},
                   in.member ? "member" : "not member", dist.str());
    // Every point of [-1,1] and every endpoint of T within distance < 1.
    bool pointwise = true;
    CanonicalSet ct = normalize(t);
    std::vector<Scalar> probes = {Scalar(-1), Scalar(1)};
    probes.insert(probes.end(), ct.breaks.begin(), ct.breaks.end());
    for (const Scalar& p : probes) {
      bool in_center = member(p, normalize(unit.center));
      bool in_t = member(p, ct);
      if (in_center) pointwise = pointwise && point_set_dist(p, t, cfg).value.value() < Scalar(1);
      if (in_t) pointwise = pointwise && point_set_dist(p, unit.center, cfg).value.value() < Scalar(1);
    }
    // Gap midpoints of T inside [-1,1] are the remaining extremal probes.
    for (std::size_t k = 1; k + 1 < ct.cells.size(); ++k) {
      if (!ct.cells[k].empty()) continue;
      auto mid = try_add(ct.breaks[k - 1], ct.breaks[k]);
      if (!mid) continue;
      Scalar m = mid->affine(make_rat(1, 2), Rat(0));
      if (member(m, normalize(unit.center)))
        pointwise = pointwise && point_set_dist(m, t, cfg).value.value() < Scalar(1);
    }
    detail::record(r, detail::verdict(pointwise == in.member), "ball-pointwise", {t.str()},
                   pointwise ? "all probes < 1" : "some probe >= 1", in.member ? "member" : "not member");

    SetExpr big = gen.bounded_expr(2);
    SetExpr small = SetExpr::intersect({big, gen.expr(2)});
    detail::with_retries(r, [&] {
      Totality ta = set_totality(RealLine{}, small, mcfg), tb = set_totality(RealLine{}, big, mcfg);
      bool ordered = true;
      if (ta.kind == Totality::Kind::Omega && tb.kind == Totality::Kind::Omega) {
        Verdict v = certify_le(ta.value, tb.value, cfg.tol);
        if (v == Verdict::Undecided) {
          detail::record(r, v, "totality-monotone", {small.str(), big.str()}, ta.str(), tb.str());
          return;
        }
        ordered = v == Verdict::Holds;
      } else {
        ordered = compare_totality(ta, tb) <= 0;
      }
      detail::record(r, detail::verdict(ordered), "totality-monotone", {small.str(), big.str()},
                     ta.str(), tb.str());
      big = gen.bounded_expr(2);
      small = SetExpr::intersect({big, gen.expr(2)});
    });

    Rat r1 = make_rat(rng.range(1, 8), 2), extra = make_rat(rng.range(1, 8), 2);
    SetExpr c1 = gen.closed_bounded(false);
    HBall inner = HBall::make(c1, r1);
    HBall outer = HBall::make(c1, Rat(r1 + extra));
    MuResult m = mu(UnionOfBalls{{inner, outer}}, cfg);
    bool nested = m.value == MeasureValue::exact(Scalar(Rat(2 * (r1 + extra)))) &&
                  compare_totality(collection_totality(inner, cfg), collection_totality(outer, cfg)) < 0;
    detail::record(r, detail::verdict(nested), "nested-ball-absorption", {inner.str(), outer.str()},
                   m.value.str(), to_string(Rat(2 * (r1 + extra))));
  }
  // Finite covers with total diameter at most 10 miss part of a window of length 20.
  for (std::uint64_t i = 0; i < samples; ++i) {
    std::vector<HBall> cover;
    Rat budget(10);
    std::string names;
    while (budget > 0 && cover.size() < 6) {
      Rat radius = make_rat(rng.range(1, 8), 4);
      if (2 * radius > budget) radius = budget / 2;
      budget -= 2 * radius;
      cover.push_back(HBall::make(gen.closed_bounded(false), radius));
      if (rng.coin(1, 3)) break;
    }
    for (const HBall& b : cover) names += (names.empty() ? "" : " | ") + b.str();
    Rat lb = mu_singleton_lower_bound(cover, Rat(0), Rat(20), mcfg);
    detail::record(r, detail::verdict(lb > 0), "singleton-lower-bound", {names}, to_string(lb), "0");
  }
  detail::record(r, detail::verdict(mu(AllOfPX{RealLine{}}).value.is_infinite()), "allsets-infinite",
                 {"allsets"}, mu(AllOfPX{RealLine{}}).value.str(), "inf");
  return r;
}

inline const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = {"outer-measure", "hausdorff", "classify",
                                                 "strategic-pair"};
  return names;
}

inline VerifyReport run_verify(const std::string& suite, std::uint64_t samples, std::uint64_t seed,
                               const Rat& tol = make_rat(1, 1000000), unsigned max_depth = 40) {
  if (samples == 0) fail(ErrorKind::InvalidArgument, "samples must be at least 1");
  HausdorffConfig h;
  h.tol = tol;
  h.max_depth = max_depth;
  MeasureConfig m{tol, max_depth};
  if (suite == "outer-measure") return verify_outer_measure(samples, seed, m);
  if (suite == "hausdorff") return verify_hausdorff(samples, seed, h);
  if (suite == "classify") return verify_classify(samples, seed, m);
  if (suite == "strategic-pair") return verify_strategic_pair(samples, seed, h);
  fail(ErrorKind::UnknownSuite, "unknown suite '" + suite + "'");
}

}  // namespace omega

#endif  // OMEGA_VERIFY_HPP
