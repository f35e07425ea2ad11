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

#include <set>

#include "omega/classify.hpp"
#include "omega/query.hpp"
#include "omega/verify.hpp"

using namespace omega;

namespace {

SetExpr S(const char* text) { return parse_set(text); }
std::string card(const char* text) { return card_class(S(text)).str(); }
std::string step1(const char* text) { return step1_totality(S(text)).str(); }
std::string step2(const char* text) { return step2_totality(S(text)).str(); }

}  // namespace

TEST(CardClass, FixtureClasses) {
  EXPECT_EQ(card("{7, sqrt2, pi, 100}"), "4");
  EXPECT_EQ(card("QQ"), "aleph0");
  EXPECT_EQ(card("(0,1)"), "aleph1\\aleph1");
  EXPECT_EQ(card("QQ^c"), "aleph1\\aleph0");
  EXPECT_EQ(card("{7, sqrt2, pi, 100}^c"), "aleph1\\4");
}

TEST(CardClass, RenderingRoundTrips) {
  for (const char* s : {"0", "4", "aleph0", "aleph1\\aleph1", "aleph1\\aleph0", "aleph1\\4"})
    EXPECT_EQ(CardClass::parse(s).str(), s);
}

TEST(CardClass, OrderingExamples) {
  EXPECT_EQ(card_compare(CardClass::aleph0(), CardClass::unc_unc()), std::strong_ordering::less);
  EXPECT_EQ(card_compare(CardClass::fin(2), CardClass::fin(2)), std::strong_ordering::equal);
  EXPECT_EQ(card_compare(CardClass::unc_fin(4), CardClass::unc_fin(0)), std::strong_ordering::less);
}

TEST(CardClass, FixtureChainIsStrict) {
  std::vector<CardClass> chain = {CardClass::fin(3), CardClass::aleph0(), CardClass::unc_unc(),
                                  CardClass::unc_co0(), CardClass::unc_fin(4)};
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = 0; j < chain.size(); ++j)
      EXPECT_EQ(card_compare(chain[i], chain[j]), i <=> j) << chain[i].str() << " vs " << chain[j].str();
}

TEST(StepTotality, StepOne) {
  EXPECT_EQ(step1("QQ"), "Omega0");
  EXPECT_EQ(step1("(0,1)"), "Omega1/2");
  EXPECT_EQ(step1("QQ^c"), "Omega1");
  EXPECT_EQ(step1("{1,2,3}"), "3");
}

TEST(StepTotality, StepTwo) {
  EXPECT_EQ(step2("cantor([0,1],1/3)"), "Omega1/3");
  EXPECT_EQ(step2("(0,1)"), "Omega2/3");
  EXPECT_EQ(step2("QQ"), "Omega0");
  EXPECT_EQ(step2("QQ^c"), "Omega1");
}

// Two-step labels are not monotone: (0,1) sits inside a set with a smaller label.
TEST(StepTotality, MonotonicityCounterexampleRegression) {
  EXPECT_EQ(step2("(0,1) | cantor([2,3],1/3)"), "Omega1/3");
  EXPECT_EQ(step_compare(step2_totality(S("(0,1)")), step2_totality(S("(0,1) | cantor([2,3],1/3)"))),
            std::strong_ordering::greater);
}

TEST(StepTotality, UnboundedGetsVacuousWarning) {
  std::vector<std::string> warnings;
  EXPECT_EQ(step2_totality(S("(0,inf)"), &warnings).str(), "Omega1/3");
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_EQ(warnings[0], kVacuousWarning);
}

TEST(Interleave, Examples) {
  EXPECT_EQ(interleave_digits({3, 1, 4}), (std::vector<int>{3, 0, 1, 0, 4, 0}));
  EXPECT_TRUE(interleave_digits({}).empty());
  EXPECT_EQ(interleave_digits({7, 7}), (std::vector<int>{7, 0, 7, 0}));
  EXPECT_TRUE(has_repeated_nonzero({7, 7}));
  EXPECT_THROW(interleave_digits({10}), Error);
}

TEST(ClassifyProperty, InterleaveInjectiveWithoutRepeats) {
  Rng rng(5);
  std::set<std::vector<int>> inputs, outputs;
  while (inputs.size() < 10000) {
    std::vector<int> d(static_cast<std::size_t>(rng.range(1, 12)));
    for (int& x : d) x = static_cast<int>(rng.range(0, 9));
    if (!inputs.insert(d).second) continue;
    auto out = interleave_digits(d);
    EXPECT_FALSE(has_repeated_nonzero(out));
    EXPECT_TRUE(outputs.insert(out).second);
  }
}

TEST(ClassifyProperty, CardCompareIsTotalOrder) {
  std::vector<CardClass> all = {CardClass::aleph0(), CardClass::unc_unc(), CardClass::unc_co0()};
  for (std::uint64_t n = 0; n <= 5; ++n) {
    all.push_back(CardClass::fin(n));
    all.push_back(CardClass::unc_fin(n));
  }
  for (const auto& a : all)
    for (const auto& b : all) {
      EXPECT_EQ(card_compare(a, b) == 0, a == b);
      EXPECT_EQ(card_compare(a, b), 0 <=> card_compare(b, a));
      for (const auto& c : all)
        if (card_compare(a, b) <= 0 && card_compare(b, c) <= 0) {
          EXPECT_TRUE(card_compare(a, c) <= 0);
        }
    }
}

TEST(ClassifyProperty, SuiteHasNoViolations) {
  VerifyReport r = run_verify("classify", 200, 42);
  EXPECT_TRUE(r.ok()) << r.text();
  EXPECT_EQ(r.undecided, 0u);
}

TEST(ClassifyProperty, StepTwoRefinesStepOne) {
  Rng rng(8);
  SetGenerator gen(rng);
  int done = 0;
  while (done < 200) {
    SetExpr e = gen.expr(3);
    try {
      StepTotality s1 = step1_totality(e), s2 = step2_totality(e);
      bool split = s2.kind == StepTotality::Kind::OmegaThird ||
                   s2.kind == StepTotality::Kind::OmegaTwoThirds;
      EXPECT_EQ(split, s1.kind == StepTotality::Kind::OmegaHalf) << e.str();
      if (!split) {
        EXPECT_EQ(s1, s2) << e.str();
      }
      ++done;
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::UnsupportedCombination &&
          err.kind() != ErrorKind::AttributeUnderdetermined)
        throw;
    }
  }
}
