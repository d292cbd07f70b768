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

#include "interdict/exact_bilevel.hpp"

#include <gtest/gtest.h>

#include <random>

#include "interdict/generators.hpp"
#include "oracles.hpp"

namespace interdict {
namespace {

Instance two_items() {
  Instance inst;
  inst.leader_budget = {Rational(1)};
  inst.follower_budget = {Rational(1)};
  inst.items.push_back({Rational(2), {Rational(1)}, {Rational(1)}, 0});
  inst.items.push_back({Rational(1), {Rational(1)}, {Rational(1)}, 1});
  return inst;
}

TEST(ExactBilevelTest, Examples) {
  Instance empty;
  empty.leader_budget = {Rational(1)};
  empty.follower_budget = {Rational(1)};
  EXPECT_EQ(solve_exact_bilevel(empty).objective, Rational(0));

  BilevelResult r = solve_exact_bilevel(two_items());
  EXPECT_EQ(r.objective, Rational(1));
  EXPECT_EQ(r.leader, (Selection{true, false}));
  EXPECT_EQ(r.follower_response.selected, (Selection{false, true}));

  Instance rich = two_items();
  rich.leader_budget = {Rational(2)};
  EXPECT_EQ(solve_exact_bilevel(rich).objective, Rational(0));
}

TEST(ExactBilevelTest, LimitAndCap) {
  Instance big = gen_random(21, 1, 1, ValueGrid{}, 1);
  try {
    solve_exact_bilevel(big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInstanceTooLarge);
  }
  Instance rich = two_items();
  rich.leader_budget = {Rational(2)};
  ExactOptions cap;
  cap.leader_cap = 1;
  EXPECT_EQ(solve_exact_bilevel(rich, cap).objective, Rational(1));
}

TEST(ExactBilevelTest, MatchesDoubleEnumeration) {
  std::mt19937_64 rng(31337);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = rng() % 11;
    Instance inst = gen_random(n, 1 + rng() % 3, 1 + rng() % 3, ValueGrid{}, rng());
    BilevelResult r = solve_exact_bilevel(inst);
    ASSERT_EQ(r.objective, testing::double_enumeration(inst)) << "trial " << t;
    EXPECT_TRUE(inst.leader_feasible(r.leader));
    EXPECT_TRUE(verify(inst, r).ok());
  }
}

TEST(ExactBilevelTest, TieBreakIsLexicographicallySmallest) {
  // Interdicting either item leaves value 1; x = (0,1) is the smaller vector.
  Instance inst;
  inst.leader_budget = {Rational(1)};
  inst.follower_budget = {Rational(2)};
  inst.items.push_back({Rational(1), {Rational(1)}, {Rational(1)}, 0});
  inst.items.push_back({Rational(1), {Rational(1)}, {Rational(1)}, 1});
  EXPECT_EQ(solve_exact_bilevel(inst).leader, (Selection{false, true}));
}

TEST(ExactBilevelTest, BudgetMonotonicityAndScaling) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng() % 9;
    Instance inst = gen_random(n, 1 + rng() % 2, 1 + rng() % 2, ValueGrid{}, rng());
    const Rational opt = solve_exact_bilevel(inst).objective;
    Instance more_leader = inst;
    for (auto& a : more_leader.leader_budget) a += Rational(3, 10);
    EXPECT_LE(solve_exact_bilevel(more_leader).objective, opt);
    Instance more_follower = inst;
    for (auto& b : more_follower.follower_budget) b += Rational(3, 10);
    EXPECT_GE(solve_exact_bilevel(more_follower).objective, opt);

    Instance scaled = inst;
    const Rational c(7, 3);
    for (auto& it : scaled.items) it.profit *= c;
    BilevelResult rs = solve_exact_bilevel(scaled);
    EXPECT_EQ(rs.objective, c * opt);
    EXPECT_EQ(evaluate_leader(inst, rs.leader, "").objective, opt);
  }
}

TEST(VerifyTest, FlagsDiscrepancies) {
  Instance inst = two_items();
  BilevelResult r = solve_exact_bilevel(inst);
  EXPECT_TRUE(verify(inst, r).ok());

  BilevelResult over = r;
  over.leader = {true, true};
  VerificationReport rep = verify(inst, over);
  EXPECT_FALSE(rep.leader_feasible);

  BilevelResult low = r;
  low.objective = Rational(1, 2);
  rep = verify(inst, low);
  EXPECT_FALSE(rep.objective_matches);
  EXPECT_EQ(rep.recomputed_objective, Rational(1));

  BilevelResult doubled = r;
  doubled.leader = {true, true};
  doubled.budget_multiplier = Rational(2);
  doubled.follower_response = {{false, false}, Rational(0), {Rational(0)}};
  doubled.objective = Rational(0);
  EXPECT_TRUE(verify(inst, doubled).ok());
}

TEST(HardnessGapTest, YesAndNoInstances) {
  // Two disjoint sets need two elements; k = 1 fails, k = 2 succeeds.
  HittingSetInstance hs{6, {{1, 2, 3}, {4, 5, 6}}, 1};
  EXPECT_EQ(solve_exact_bilevel(gen_3hs_reduction(hs)).objective, Rational(4));
  hs.k = 2;
  EXPECT_LE(solve_exact_bilevel(gen_3hs_reduction(hs)).objective, Rational(3));
  HittingSetInstance shared{5, {{1, 2, 3}, {1, 4, 5}}, 1};
  EXPECT_LE(solve_exact_bilevel(gen_3hs_reduction(shared)).objective, Rational(3));
}

}  // namespace
}  // namespace interdict
