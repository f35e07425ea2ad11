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

// Runs every acceptance criterion and prints one PASS/FAIL line per item.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sys/wait.h>

#include "omega/omega.hpp"

using namespace omega;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string eval(const char* q) {
  EvalConfig cfg;
  return run_line(q, cfg).text;
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (detail.empty()) detail = what;
    }
  }
};

std::string capture(const std::string& cmd, int* status) {
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  if (!p) {
    *status = -1;
    return out;
  }
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int st = pclose(p);
  *status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return out;
}

Outcome illustrative_example() {
  Outcome o;
  auto t0 = Clock::now();
  o.require(eval("measure([-1,1])") == "measure: 2", "measure([-1,1]) != 2");
  o.require(eval("mu(ball([-1,1],1))") == "measure: 2", "mu(ball([-1,1],1)) != 2");
  o.require(eval("cmp(tot([-1,1]), tot(ball([-1,1],1)))") == "ordering: =", "totalities differ");
  o.require(seconds_since(t0) < 1.0, "slower than 1 s");
  return o;
}

Outcome cardinality_fixtures() {
  Outcome o;
  const std::pair<const char*, const char*> cases[] = {
      {"{7, sqrt2, pi, 100}", "4"},
      {"QQ", "aleph0"},
      {"(0,1)", "aleph1\\aleph1"},
      {"QQ^c", "aleph1\\aleph0"},
      {"{7, sqrt2, pi, 100}^c", "aleph1\\4"}};
  for (const auto& [set, want] : cases) {
    std::string got = card_class(parse_set(set)).str();
    o.require(got == want, std::string(set) + " -> " + got);
  }
  std::vector<CardClass> chain = {CardClass::fin(3), CardClass::aleph0(), CardClass::unc_unc(),
                                  CardClass::unc_co0(), CardClass::unc_fin(4)};
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = 0; j < chain.size(); ++j)
      o.require(card_compare(chain[i], chain[j]) == (i <=> j),
                "chain order " + chain[i].str() + " vs " + chain[j].str());
  return o;
}

Outcome step_fixtures() {
  Outcome o;
  const std::pair<const char*, const char*> cases[] = {
      {"cantor([0,1],1/3)", "Omega1/3"},
      {"(0,1)", "Omega2/3"},
      {"QQ", "Omega0"},
      {"QQ^c", "Omega1"},
      {"(0,1) | cantor([2,3],1/3)", "Omega1/3"}};
  for (const auto& [set, want] : cases) {
    std::string got = step2_totality(parse_set(set)).str();
    o.require(got == want, std::string(set) + " -> " + got);
  }
  return o;
}

Outcome suite(const char* name, std::uint64_t samples, std::uint64_t seed, double limit) {
  Outcome o;
  auto t0 = Clock::now();
  VerifyReport r = run_verify(name, samples, seed);
  double dt = seconds_since(t0);
  o.require(r.ok(), std::to_string(r.violations.size()) + " violations");
  o.require(r.undecided == 0, std::to_string(r.undecided) + " undecided checks");
  if (limit > 0) o.require(dt < limit, "took " + std::to_string(dt) + " s");
  o.detail = o.pass ? std::to_string(r.checks) + " checks" : o.detail;
  return o;
}

Outcome hausdorff_suite() {
  Outcome o = suite("hausdorff", 200, 42, 0);
  MeasureValue direct = hausdorff_distance(SetExpr::point(0), SetExpr::point(5)).value;
  MeasureValue via = measure_add(hausdorff_distance(SetExpr::point(0), SetExpr::empty()).value,
                                 hausdorff_distance(SetExpr::empty(), SetExpr::point(5)).value, Rat(1));
  o.require(measure_cmp(direct, via, Rat(1)) == std::strong_ordering::greater,
            "empty-set triangle failure not observed");
  return o;
}

Outcome singleton_isometry() {
  Outcome o;
  Rng rng(1000);
  for (int i = 0; i < 1000; ++i) {
    Rat x = make_rat(rng.range(-10000, 10000), rng.range(1, 97));
    Rat y = make_rat(rng.range(-10000, 10000), rng.range(1, 97));
    MeasureValue d = hausdorff_distance(SetExpr::point(x), SetExpr::point(y)).value;
    o.require(d == MeasureValue::exact(Scalar(rat_abs(Rat(x - y)))),
              "d({" + to_string(x) + "},{" + to_string(y) + "}) = " + d.str());
  }
  return o;
}

Outcome cover_convergence() {
  Outcome o;
  auto t0 = Clock::now();
  SetExpr c = parse_set("cantor([0,1],1/3)");
  for (unsigned k = 0; k <= 12; ++k)
    o.require(greedy_cover_bound(c, k) == Scalar(rat_pow(make_rat(2, 3), k)),
              "cantor depth " + std::to_string(k));
  Scalar s = greedy_cover_bound(parse_set("svc([0,1],1/4)"), 14);
  o.require(s.is_rational() && Rat(s.rational() - make_rat(2, 3)) <= make_rat(1, 1000) &&
                s.rational() >= make_rat(2, 3),
            "svc depth 14 gives " + s.str());
  o.require(seconds_since(t0) < 5.0, "slower than 5 s");
  return o;
}

Outcome strategic_pair() {
  Outcome o;
  std::vector<Rat> grid = {make_rat(1, 2), Rat(1), make_rat(7, 3), Rat(100)};
  for (const Rat& v : grid) {
    Totality want = Totality::omega(MeasureValue::exact(Scalar(v)));
    o.require(set_totality(RealLine{}, witness_set(v)) == want, "witness_set " + to_string(v));
    o.require(collection_totality(witness_collection(v)) == want, "witness_collection " + to_string(v));
  }
  for (const Rat& a : grid)
    for (const Rat& b : grid) {
      auto c = compare_totality(set_totality(RealLine{}, witness_set(a)),
                                collection_totality(witness_collection(b)));
      o.require(c == (cmp(a, b) <=> 0), "cross order " + to_string(a) + " vs " + to_string(b));
    }
  return o;
}

Outcome infinity_evidence() {
  Outcome o;
  Rng rng(9);
  SetGenerator gen(rng);
  for (int i = 0; i < 50; ++i) {
    std::vector<HBall> cover;
    Rat total(0);
    for (long n = rng.range(1, 6); n > 0; --n) {
      Rat r = make_rat(rng.range(1, 10), 10);
      if (total + 2 * r > 10) break;
      total += 2 * r;
      cover.push_back(HBall::make(gen.closed_bounded(false), r));
    }
    Rat lb = mu_singleton_lower_bound(cover, Rat(0), Rat(20));
    o.require(lb > 0, "cover " + std::to_string(i) + " leaves " + to_string(lb));
  }
  o.require(mu(AllOfPX{RealLine{}}).value.is_infinite(), "mu(allsets) is finite");
  o.require(collection_totality(AllOfPX{RealLine{}}) == set_totality(RealLine{}, SetExpr::reals()),
            "Omega_inf differs from tot(RR)");
  return o;
}

Outcome interleave_property() {
  Outcome o;
  Rng rng(10);
  std::set<std::vector<int>> inputs, outputs;
  while (inputs.size() < 10000) {
    std::vector<int> d(static_cast<std::size_t>(rng.range(1, 15)));
    for (int& x : d) x = static_cast<int>(rng.range(0, 9));
    if (!inputs.insert(d).second) continue;
    auto out = interleave_digits(d);
    o.require(!has_repeated_nonzero(out), "repeated nonzero digit");
    o.require(outputs.insert(out).second, "collision");
  }
  return o;
}

Outcome representation_invariance() {
  Outcome o;
  Rng rng(11);
  SetGenerator gen(rng);
  int done = 0;
  for (int tries = 0; done < 100 && tries < 2000; ++tries) {
    SetExpr a = gen.expr(3);
    SetExpr b = rewrite(rng, gen, a);
    try {
      bool same = normalize(a) == normalize(b) && card_class(a) == card_class(b) &&
                  step2_totality(a) == step2_totality(b) &&
                  set_totality(RealLine{}, a) == set_totality(RealLine{}, b) &&
                  measure_of(a) == measure_of(b);
      o.require(same, a.str() + " vs " + b.str());
      ++done;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UnsupportedCombination && e.kind() != ErrorKind::AttributeUnderdetermined)
        throw;
    }
  }
  o.require(done == 100, "only " + std::to_string(done) + " pairs evaluated");
  return o;
}

Outcome determinism() {
  Outcome o;
  std::string path = std::string(OMEGA_TEST_DIR) + "/acceptance_batch.q";
  {
    std::ofstream f(path);
    f << "# determinism fixture\n"
         "measure([-1,1])\nmu(ball([-1,1],1))\ncmp(tot([-1,1]), tot(ball([-1,1],1)))\n"
         "dh(cantor([0,1],1/3), [0,1])\ndh(svc([0,1],1/4), [0,1])\ncover(svc([0,1],1/4), 14)\n"
         "step2((0,1) | cantor([2,3],1/3))\nmu(ball({0},1) | ball({100},2))\ncard((0,1)\n"
         "member(ball([-1,1],1), [-2,2])\ntot(allsets)\ninterleave([3,1,4])\n";
    for (int i = 1; i <= 30; ++i) f << "dh([0," << i << "], cantor([0,1],1/3))\n";
  }
  std::string base = std::string(OMEGA_CLI_PATH) + " batch " + path + " --json";
  int s1 = 0, s2 = 0, s3 = 0, s4 = 0;
  std::string a = capture(base, &s1);
  std::string b = capture(base, &s2);
  std::string c = capture(base + " --jobs 8", &s3);
  o.require(!a.empty() && a == b, "repeated batch output differs");
  o.require(a == c, "parallel batch output differs");
  o.require(s1 == 1 && s2 == 1 && s3 == 1, "batch exit status should flag the malformed line");
  std::string v1 = capture(std::string(OMEGA_CLI_PATH) + " verify --suite classify --samples 60 --seed 5 --json", &s4);
  std::string v2 = capture(std::string(OMEGA_CLI_PATH) + " verify --suite classify --samples 60 --seed 5 --json", &s4);
  o.require(v1 == v2 && s4 == 0, "verify output differs across runs");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"illustrative example", illustrative_example},
      {"cardinality class fixtures", cardinality_fixtures},
      {"two-step totality fixtures", step_fixtures},
      {"outer-measure axiom suite", [] { return suite("outer-measure", 200, 42, 30.0); }},
      {"hausdorff pseudometric suite", hausdorff_suite},
      {"singleton isometry", singleton_isometry},
      {"cover convergence", cover_convergence},
      {"strategic pair witnesses", strategic_pair},
      {"infinity evidence", infinity_evidence},
      {"interleave property", interleave_property},
      {"representation invariance", representation_invariance},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << ". " << criteria[i].first;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << "\n";
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
