// Copyright 2026 The interdict Authors
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

#include "interdict/bench.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

namespace interdict {
namespace {

using bench::RunRecord;

std::string without_millis(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + "\n";
  return out;
}

TEST(RecordTest, CsvAndJson) {
  RunRecord r;
  r.suite = "random-small";
  r.seed = 3;
  r.n = 4;
  r.s_a = 1;
  r.s_b = 2;
  r.algo = "ptas";
  r.params = "eps=1/4;exhaustive";
  r.objective = Rational(3, 2);
  r.opt = Rational(1);
  r.bound_claim = "a, b";
  r.millis = 1.5;
  EXPECT_EQ(bench::to_csv_row(r),
            "random-small,3,4,1,2,ptas,eps=1/4;exhaustive,3/2,1,3/2,\"a, b\",0,1.500");
  EXPECT_EQ(std::string(bench::kCsvHeader),
            "suite,seed,n,s_a,s_b,algo,params,objective,opt,ratio,bound_claim,truncated,millis");
  Json j = bench::to_json(r);
  EXPECT_EQ(j["ratio"], "3/2");
  EXPECT_TRUE(j["certified_bound"].is_null());

  r.opt = Rational(0);
  r.objective = Rational(0);
  EXPECT_EQ(*r.ratio(), Rational(1));
  r.opt.reset();
  EXPECT_FALSE(r.ratio().has_value());
}

TEST(RecordTest, ResultRoundTrip) {
  Instance inst;
  inst.leader_budget = {Rational(1)};
  inst.follower_budget = {Rational(1)};
  inst.items.push_back({Rational(2), {Rational(1)}, {Rational(1)}, 0});
  inst.items.push_back({Rational(1), {Rational(1)}, {Rational(1)}, 1});
  BilevelResult r = solve_exact_bilevel(inst);
  Json doc = bench::result_to_json(r, "exact");
  BilevelResult back = bench::result_from_json(Json::parse(doc.dump()), inst);
  EXPECT_EQ(back.leader, r.leader);
  EXPECT_EQ(back.objective, Rational(1));
  EXPECT_TRUE(verify(inst, back).ok());
  doc["objective"] = "1/2";
  EXPECT_FALSE(verify(inst, bench::result_from_json(doc, inst)).ok());
  doc.erase("leader");
  EXPECT_THROW(bench::result_from_json(doc, inst), Error);
}

TEST(SuiteTest, HittingSetGap) {
  bench::SuiteParams p;
  p.per_seed = 4;
  auto rows = bench::bench_suite("hs3-gap", p, {1, 2, 3});
  ASSERT_EQ(rows.size(), 12u);
  std::size_t yes = 0;
  for (const auto& r : rows) {
    ASSERT_TRUE(r.opt.has_value());
    if (r.params.find("hitting=yes") != std::string::npos) {
      ++yes;
      EXPECT_LE(*r.opt, Rational(3));
    } else {
      EXPECT_EQ(*r.opt, Rational(4));
    }
  }
  EXPECT_GT(yes, 0u);
  EXPECT_LT(yes, rows.size());
}

TEST(SuiteTest, RandomSmallPtasWithinBound) {
  bench::SuiteParams p;
  p.algo.algo = "ptas";
  p.per_seed = 3;
  auto rows = bench::bench_suite("random-small", p, {5, 6});
  ASSERT_EQ(rows.size(), 6u);
  for (const auto& r : rows) {
    ASSERT_TRUE(r.ratio().has_value());
    EXPECT_GE(*r.ratio(), Rational(1));
    EXPECT_LE(*r.ratio(), Rational(1) + ptas::bound(p.algo.eps, r.s_a));
  }
}

TEST(SuiteTest, BicriteriaSweep) {
  bench::SuiteParams p;
  p.per_seed = 1;
  auto rows = bench::bench_suite("bicriteria-sweep", p, {7});
  ASSERT_EQ(rows.size(), 5u);
  const std::vector<Rational> alphas{Rational(1, 4), Rational(1, 3), Rational(1, 2),
                                     Rational(2, 3), Rational(3, 4)};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    ASSERT_TRUE(r.certified_bound.has_value());
    EXPECT_LE(r.objective, *r.certified_bound);
    // The leader may spend 1/alpha of the budget, so the objective can fall
    // below the budget-respecting optimum.
    EXPECT_LE(r.objective, *r.opt / (Rational(1) - alphas[i]) * Rational(1001, 1000));
  }
}

TEST(SuiteTest, DeterministicAcrossThreadCounts) {
  bench::SuiteParams p;
  p.per_seed = 3;
  setenv("INTERDICT_THREADS", "1", 1);
  const std::string one = bench::to_csv(bench::bench_suite("random-small", p, {1, 2}));
  setenv("INTERDICT_THREADS", "4", 1);
  const std::string four = bench::to_csv(bench::bench_suite("random-small", p, {1, 2}));
  unsetenv("INTERDICT_THREADS");
  EXPECT_EQ(without_millis(one), without_millis(four));
}

TEST(SuiteTest, UnknownSuite) {
  try {
    bench::bench_suite("nope", {}, {1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownSuite);
  }
}

}  // namespace
}  // namespace interdict
