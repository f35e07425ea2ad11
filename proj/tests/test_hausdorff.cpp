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

#include <gtest/gtest.h>

#include "omega/hausdorff.hpp"
#include "omega/query.hpp"
#include "omega/verify.hpp"

using namespace omega;

namespace {

SetExpr S(const char* text) { return parse_set(text); }
MeasureValue exact(const Rat& q) { return MeasureValue::exact(Scalar(q)); }
MeasureValue dh(const char* a, const char* b) { return hausdorff_distance(S(a), S(b)).value; }

// Grid oracle for finite unions of closed rational pieces: sample one set on
// a uniform grid and take exact distances to the other.
using Pieces = std::vector<std::pair<Rat, Rat>>;

Rat dist_to(const Rat& x, const Pieces& t) {
  Rat best = -1;
  for (const auto& [lo, hi] : t) {
    Rat d = x < lo ? Rat(lo - x) : x > hi ? Rat(x - hi) : Rat(0);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

Rat grid_directed(const Pieces& s, const Pieces& t, const Rat& step) {
  Rat worst = 0;
  for (const auto& [lo, hi] : s) {
    for (Rat x = lo; x <= hi; x += step) worst = std::max(worst, dist_to(x, t));
    worst = std::max(worst, dist_to(hi, t));
  }
  return worst;
}

Rat grid_hausdorff(const Pieces& s, const Pieces& t, const Rat& step) {
  return std::max(grid_directed(s, t, step), grid_directed(t, s, step));
}

Pieces pieces_of(const CanonicalSet& c) {
  // Closed, bounded, rational and fractal-free: pieces are the maximal
  // filled cells joined with their endpoints, plus isolated points.
  Pieces out;
  for (std::size_t i = 0; i < c.breaks.size(); ++i) {
    Rat x = c.breaks[i].rational();
    bool left_filled = i > 0 && !c.cells[i].empty();
    if (left_filled)
      out.back().second = x;
    else if (c.status[i].value())
      out.push_back({x, x});
  }
  return out;
}

}  // namespace

TEST(PointSetDistance, Examples) {
  EXPECT_EQ(point_set_dist(Scalar(make_rat(1, 2)), S("EMPTY")).value, exact(Rat(0)));
  EXPECT_EQ(point_set_dist(Scalar(Rat(3)), S("[0,1]")).value, exact(Rat(2)));
  EXPECT_EQ(point_set_dist(Scalar(make_rat(1, 2)), S("cantor([0,1],1/3)")).value,
            exact(make_rat(1, 6)));
  EXPECT_EQ(point_set_dist(Scalar(make_rat(1, 2)), S("ZZ")).value, exact(make_rat(1, 2)));
}

TEST(Hausdorff, Examples) {
  EXPECT_EQ(dh("EMPTY", "[0,1]"), exact(Rat(0)));
  EXPECT_EQ(dh("{2}", "{-1/3}"), exact(make_rat(7, 3)));
  EXPECT_EQ(dh("[-1,1]", "[0,1]"), exact(Rat(1)));
  EXPECT_EQ(dh("cantor([0,1],1/3)", "[0,1]"), exact(make_rat(1, 6)));
  EXPECT_EQ(dh("svc([0,1],1/4)", "[0,1]"), exact(make_rat(1, 8)));
  EXPECT_EQ(dh("ZZ", "1/2*ZZ"), exact(make_rat(1, 2)));
  EXPECT_TRUE(dh("[0,inf)", "[0,1]").is_infinite());
  EXPECT_EQ(dh("{sqrt2}", "{0}"), MeasureValue::exact(Scalar::of(Constant::Sqrt2)));
}

TEST(Hausdorff, ClosureWarning) {
  HResult r = hausdorff_distance(S("(0,1)"), S("[0,1]"));
  EXPECT_EQ(r.value, exact(Rat(0)));
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_EQ(r.warnings[0], "closure taken for (0,1)");
}

TEST(Hausdorff, DenseGridOracle) {
  Rat step = pow2(-16);
  Pieces a{{Rat(-1), Rat(1)}}, b{{Rat(0), Rat(1)}};
  Rat oracle = grid_hausdorff(a, b, step);
  MeasureValue got = dh("[-1,1]", "[0,1]");
  ASSERT_TRUE(got.is_exact());
  EXPECT_LE(rat_abs(Rat(got.value().rational() - oracle)), step);
}

TEST(HausdorffProperty, AgreesWithGridOracle) {
  Rng rng(77);
  SetGenerator gen(rng);
  Rat step = make_rat(1, 64);
  for (int i = 0; i < 60; ++i) {
    SetExpr s = gen.closed_bounded(false), t = gen.closed_bounded(false);
    MeasureValue got = hausdorff_distance(s, t).value;
    ASSERT_TRUE(got.is_exact()) << s.str() << " ; " << t.str();
    Rat oracle = grid_hausdorff(pieces_of(normalize(s)), pieces_of(normalize(t)), step);
    EXPECT_LE(oracle, got.value().rational()) << s.str() << " ; " << t.str();
    EXPECT_LE(Rat(got.value().rational() - oracle), step) << s.str() << " ; " << t.str();
  }
}

TEST(HausdorffProperty, PseudometricSuite) {
  VerifyReport r = run_verify("hausdorff", 200, 42);
  EXPECT_TRUE(r.ok()) << r.text();
  EXPECT_EQ(r.undecided, 0u);
}

TEST(HausdorffProperty, EmptyConventionBreaksTriangle) {
  MeasureValue direct = dh("{0}", "{5}");
  MeasureValue via = measure_add(dh("{0}", "EMPTY"), dh("EMPTY", "{5}"), make_rat(1, 1000));
  EXPECT_EQ(direct, exact(Rat(5)));
  EXPECT_EQ(via, exact(Rat(0)));
}

TEST(HausdorffProperty, SingletonIsometry) {
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    Rat x = make_rat(rng.range(-1000, 1000), rng.range(1, 50));
    Rat y = make_rat(rng.range(-1000, 1000), rng.range(1, 50));
    EXPECT_EQ(hausdorff_distance(SetExpr::point(x), SetExpr::point(y)).value,
              exact(rat_abs(Rat(x - y))));
  }
}
