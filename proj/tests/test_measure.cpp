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

#include "omega/outer_measure.hpp"
#include "omega/query.hpp"
#include "omega/verify.hpp"

using namespace omega;

namespace {

SetExpr S(const char* text) { return parse_set(text); }
MeasureValue exact(const Rat& q) { return MeasureValue::exact(Scalar(q)); }

}  // namespace

TEST(BallPremeasure, Examples) {
  EXPECT_EQ(ball_premeasure(RealLine{}, Scalar(Rat(0)), Rat(1)), Rat(2));
  EXPECT_EQ(ball_premeasure(RealLine{}, Scalar::of(Constant::Pi), make_rat(3, 2)), Rat(3));
  FiniteSpace two({"p", "q"}, {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}});
  EXPECT_EQ(ball_premeasure(two, "p", make_rat(1, 4)), make_rat(1, 2));
  EXPECT_THROW(ball_premeasure(two, "z", Rat(1)), Error);
  EXPECT_THROW(ball_premeasure(RealLine{}, Scalar(Rat(0)), Rat(0)), Error);
}

TEST(FiniteSpace, RejectsBadMatrices) {
  EXPECT_THROW(FiniteSpace({"a", "b"}, {{Rat(0), Rat(1)}, {Rat(2), Rat(0)}}), Error);
  EXPECT_THROW(FiniteSpace({"a", "b"}, {{Rat(0), Rat(0)}, {Rat(0), Rat(0)}}), Error);
  EXPECT_THROW(FiniteSpace({"a", "b", "c"},
                           {{Rat(0), Rat(1), Rat(5)}, {Rat(1), Rat(0), Rat(1)}, {Rat(5), Rat(1), Rat(0)}}),
               Error);
}

TEST(MetricOuterMeasure, Examples) {
  EXPECT_EQ(metric_outer_measure(RealLine{}, S("[-1,1]")), exact(Rat(2)));
  EXPECT_EQ(metric_outer_measure(RealLine{}, S("svc([0,1],1/4)")), exact(make_rat(2, 3)));
  EXPECT_TRUE(metric_outer_measure(RealLine{}, S("{7, sqrt2, pi, 100}^c")).is_infinite());
  EXPECT_EQ(metric_outer_measure(RealLine{}, S("EMPTY")), exact(Rat(0)));
  EXPECT_EQ(metric_outer_measure(RealLine{}, S("QQ")), exact(Rat(0)));
  EXPECT_EQ(metric_outer_measure(RealLine{}, S("[0,pi]")), MeasureValue::exact(Scalar::of(Constant::Pi)));
}

TEST(MetricOuterMeasure, FiniteSpaceIsDegenerate) {
  FiniteSpace three({"a", "b", "c"},
                    {{Rat(0), Rat(1), Rat(2)}, {Rat(1), Rat(0), Rat(1)}, {Rat(2), Rat(1), Rat(0)}});
  EXPECT_EQ(metric_outer_measure(three, {}), exact(Rat(0)));
  EXPECT_EQ(metric_outer_measure(three, {"a", "b", "c"}), exact(Rat(0)));
  EXPECT_THROW(metric_outer_measure(three, {"d"}), Error);
}

TEST(GreedyCover, Examples) {
  EXPECT_EQ(greedy_cover_bound(S("cantor([0,1],1/3)"), 5), Scalar(make_rat(32, 243)));
  EXPECT_EQ(greedy_cover_bound(S("EMPTY"), 7), Scalar(Rat(0)));
  EXPECT_EQ(greedy_cover_bound(S("[0,1]"), 10), Scalar(Rat(1)));
  EXPECT_THROW(greedy_cover_bound(S("(0,inf)"), 3), Error);
}

TEST(GreedyCover, CantorGapIsExact) {
  for (unsigned k = 0; k <= 12; ++k)
    EXPECT_EQ(greedy_cover_bound(S("cantor([0,1],1/3)"), k), Scalar(rat_pow(make_rat(2, 3), k)));
  // ratio 1/5 on a base of length 2
  for (unsigned k = 0; k <= 8; ++k)
    EXPECT_EQ(greedy_cover_bound(S("cantor([1,3],1/5)"), k), Scalar(Rat(2 * rat_pow(make_rat(4, 5), k))));
}

TEST(GreedyCover, SvcGapIsGeometricTail) {
  // Stage-d superset exceeds the limit by |base| beta^(d+1) / (1 - beta).
  Rat beta = make_rat(1, 4);
  for (unsigned d = 0; d <= 14; ++d) {
    Rat gap = rat_pow(beta, d + 1) / (1 - beta);
    EXPECT_EQ(greedy_cover_bound(S("svc([0,1],1/4)"), d), Scalar(Rat(make_rat(2, 3) + gap))) << d;
  }
  Scalar at14 = greedy_cover_bound(S("svc([0,1],1/4)"), 14);
  EXPECT_LE(Rat(at14.rational() - make_rat(2, 3)), make_rat(1, 1000));
}

TEST(GreedyCover, NonIncreasingInDepth) {
  for (const char* f : {"cantor([0,1],1/3)", "svc([0,1],1/4)", "svc([-2,5],1/3) & [0,4]"}) {
    Scalar prev = greedy_cover_bound(S(f), 0);
    for (unsigned d = 1; d <= 10; ++d) {
      Scalar next = greedy_cover_bound(S(f), d);
      EXPECT_LE(next, prev) << f << " depth " << d;
      prev = next;
    }
  }
}

TEST(OuterMeasureProperty, SuiteHasNoViolations) {
  VerifyReport r = run_verify("outer-measure", 200, 42);
  EXPECT_TRUE(r.ok()) << r.text();
  EXPECT_EQ(r.undecided, 0u);
  EXPECT_GT(r.checks, 800u);
}

TEST(OuterMeasureProperty, SuiteIsDeterministic) {
  EXPECT_EQ(run_verify("outer-measure", 40, 9).json().dump(),
            run_verify("outer-measure", 40, 9).json().dump());
}

TEST(OuterMeasureProperty, MeasureDominatedByCover) {
  Rng rng(31);
  SetGenerator gen(rng);
  for (int i = 0; i < 150; ++i) {
    SetExpr e = gen.bounded_expr(2);
    MeasureValue m;
    try {
      m = measure_of(e);
    } catch (const Error&) {
      continue;
    }
    for (unsigned d : {0u, 3u, 8u}) {
      Scalar c = greedy_cover_bound(e, d);
      EXPECT_EQ(certify_le(m, MeasureValue::exact(c), make_rat(1, 1000000)), Verdict::Holds) << e.str();
    }
  }
}
