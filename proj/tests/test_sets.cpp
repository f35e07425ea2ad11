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

#include "omega/attributes.hpp"
#include "omega/query.hpp"
#include "omega/random_sets.hpp"

using namespace omega;

namespace {

SetExpr S(const char* text) { return parse_set(text); }
Scalar pi() { return Scalar::of(Constant::Pi); }
Scalar sqrt2() { return Scalar::of(Constant::Sqrt2); }

}  // namespace

TEST(Normalize, MergesAdjacentIntervals) {
  EXPECT_EQ(normalize(S("(0,1) | (1,2) | {1}")), normalize(S("(0,2)")));
  EXPECT_EQ(to_expr(normalize(S("(0,1) | (1,2) | {1}"))).str(), "(0,2)");
}

TEST(Normalize, IrrationalsKeepCountableHole) {
  CanonicalSet irr = normalize(S("QQ^c"));
  EXPECT_FALSE(member(Scalar(make_rat(1, 2)), irr));
  EXPECT_TRUE(member(pi(), irr));
  EXPECT_EQ(size_of(irr).kind, SizeClass::Kind::Uncountable);
}

TEST(Normalize, OverlappingDistinctFractalsRejected) {
  try {
    normalize(S("cantor([0,1],1/3) & cantor([0,1],1/5)"));
    FAIL() << "expected UnsupportedCombination";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedCombination);
  }
}

TEST(Normalize, FractalCutsAreUnique) {
  EXPECT_EQ(normalize(S("cantor([0,1],1/3) & [0,1/2]")),
            normalize(S("cantor([0,1],1/3) & [0,1/3]")));
  EXPECT_TRUE(semantically_equal(S("cantor([0,1],1/3) & [0,1/3]"), S("cantor([0,1/3],1/3)")));
}

TEST(Membership, Examples) {
  SetExpr c = S("cantor([0,1],1/3)");
  EXPECT_FALSE(member(Scalar(make_rat(1, 2)), c));
  EXPECT_TRUE(member(Scalar(make_rat(1, 4)), c));
  EXPECT_TRUE(member(Scalar(make_rat(3, 4)), c));
  EXPECT_FALSE(member(pi(), S("QQ")));
  EXPECT_TRUE(member(sqrt2(), S("[1,3/2]")));
  EXPECT_FALSE(member(sqrt2(), S("[3/2,2]")));
}

TEST(Closure, Examples) {
  EXPECT_TRUE(semantically_equal(closure(S("(0,1)")), S("[0,1]")));
  EXPECT_TRUE(semantically_equal(closure(S("QQ")), S("RR")));
  EXPECT_TRUE(semantically_equal(closure(S("cantor([0,1],1/3)")), S("cantor([0,1],1/3)")));
}

TEST(SemanticEquality, Examples) {
  EXPECT_TRUE(semantically_equal(S("(0,2) \\ {1}"), S("(0,1) | (1,2)")));
  EXPECT_FALSE(semantically_equal(S("[0,1]"), S("(0,1)")));
  EXPECT_TRUE(semantically_equal(S("QQ^c^c"), S("QQ")));
}

TEST(Affine, Examples) {
  EXPECT_TRUE(semantically_equal(affine_image(Rat(2), Rat(1), S("[0,1]")), S("[1,3]")));
  EXPECT_TRUE(semantically_equal(affine_image(Rat(-1), Rat(0), S("(0,1)")), S("(-1,0)")));
  EXPECT_TRUE(semantically_equal(affine_image(make_rat(1, 3), Rat(0), S("cantor([0,1],1/3)")),
                                 S("cantor([0,1/3],1/3)")));
}

TEST(Attributes, Cantor) {
  SetAttributes a = attributes(S("cantor([0,1],1/3)"));
  EXPECT_EQ(a.card, CardClass::unc_unc());
  EXPECT_EQ(a.co_card, CardClass::unc_unc());
  EXPECT_TRUE(a.bounded);
  ASSERT_TRUE(a.hull.has_value());
  EXPECT_EQ(a.hull->str(), "[0,1]");
  EXPECT_EQ(a.measure, MeasureValue::exact(Scalar(Rat(0))));
  EXPECT_EQ(a.closed, Closedness::Yes);
}

TEST(Attributes, CofiniteSet) {
  SetAttributes a = attributes(S("{7, sqrt2, pi, 100}^c"));
  EXPECT_EQ(a.card, CardClass::unc_fin(4));
  EXPECT_FALSE(a.bounded);
  EXPECT_TRUE(a.measure.is_infinite());
}

TEST(Attributes, CantorRationals) {
  SetAttributes a = attributes(S("cantor([0,1],1/3) & QQ"));
  EXPECT_EQ(a.card, CardClass::aleph0());
  EXPECT_EQ(a.measure, MeasureValue::exact(Scalar(Rat(0))));
  EXPECT_TRUE(a.bounded);
}

TEST(Attributes, EmptySet) {
  SetAttributes a = attributes(S("EMPTY"));
  EXPECT_EQ(a.card, CardClass::fin(0));
  EXPECT_TRUE(a.bounded);
  EXPECT_FALSE(a.hull.has_value());
  EXPECT_EQ(a.measure, MeasureValue::exact(Scalar(Rat(0))));
}

// Properties over seeded random expressions.

class SetProperty : public ::testing::Test {
 protected:
  Rng rng{2024};
  SetGenerator gen{rng};

  template <class F>
  void for_samples(int n, F body) {
    int done = 0;
    for (int tries = 0; done < n && tries < 20 * n; ++tries) {
      try {
        body();
        ++done;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::UnsupportedCombination &&
            e.kind() != ErrorKind::AttributeUnderdetermined &&
            e.kind() != ErrorKind::MembershipUndetermined)
          throw;
      }
    }
    EXPECT_EQ(done, n);
  }
};

TEST_F(SetProperty, NormalizeIsIdempotent) {
  for_samples(500, [&] {
    SetExpr e = gen.expr(3);
    CanonicalSet c = normalize(e);
    EXPECT_EQ(normalize(to_expr(c)), c) << e.str();
  });
}

TEST_F(SetProperty, AttributesAgreeWithCanonicalForm) {
  for_samples(200, [&] {
    SetExpr e = gen.expr(3);
    SetExpr c = to_expr(normalize(e));
    EXPECT_EQ(card_class(e), card_class(c)) << e.str();
    EXPECT_EQ(measure_of(e), measure_of(c)) << e.str();
    EXPECT_EQ(bounded_of(e), bounded_of(c)) << e.str();
  });
}

TEST_F(SetProperty, AffineMembership) {
  for_samples(300, [&] {
    SetExpr e = gen.expr(2);
    Rat a = make_rat(rng.range(1, 4), rng.range(1, 3)) * (rng.coin() ? 1 : -1);
    Rat b = make_rat(rng.range(-6, 6), rng.range(1, 3));
    Rat x = gen.grid();
    EXPECT_EQ(member(Scalar(x), e), member(Scalar(Rat(a * x + b)), affine_image(a, b, e)))
        << e.str() << " a=" << a << " b=" << b << " x=" << x;
  });
}

TEST_F(SetProperty, MeasureAddsOverDisjointPieces) {
  for_samples(200, [&] {
    SetExpr e = gen.bounded_expr(2);
    Rat cut = gen.grid();
    SetExpr left = SetExpr::intersect({e, SetExpr::interval(ExtScalar::minus_inf(), Scalar(cut), false, false)});
    SetExpr right = SetExpr::intersect({e, SetExpr::interval(Scalar(cut), ExtScalar::plus_inf(), true, false)});
    MeasureValue whole = measure_of(e), l = measure_of(left), r = measure_of(right);
    if (whole.is_exact() && l.is_exact() && r.is_exact()) {
      auto sum = try_add(l.value(), r.value());
      ASSERT_TRUE(sum.has_value());
      EXPECT_EQ(*sum, whole.value()) << e.str() << " cut " << cut;
    }
  });
}

TEST_F(SetProperty, ClosureIsIdempotent) {
  for_samples(200, [&] {
    SetExpr e = gen.expr(2);
    SetExpr c = closure(e);
    EXPECT_TRUE(semantically_equal(closure(c), c)) << e.str();
  });
}

TEST_F(SetProperty, DeMorgan) {
  for_samples(200, [&] {
    SetExpr a = gen.expr(2), b = gen.expr(2);
    EXPECT_TRUE(semantically_equal(SetExpr::complement(SetExpr::unite({a, b})),
                                   SetExpr::intersect({SetExpr::complement(a), SetExpr::complement(b)})))
        << a.str() << " ; " << b.str();
  });
}

TEST_F(SetProperty, CountableSetsHaveMeasureZero) {
  for_samples(200, [&] {
    SetExpr e = gen.expr(2);
    if (size_of(e).kind != SizeClass::Kind::Uncountable) {
      EXPECT_EQ(measure_of(e), MeasureValue::exact(Scalar(Rat(0)))) << e.str();
    }
  });
}
