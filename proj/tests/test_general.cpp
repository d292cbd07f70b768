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

#include "interdict/general.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "interdict/generators.hpp"
#include "oracles.hpp"

namespace interdict {
namespace {

using general::ClassifiedItem;
using general::LambdaGuess;
using general::LargeItem;
using general::RatioClass;
using general::SmallItem;

Rational R(long p, long q = 1) { return Rational(p, q); }

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kParse;
}

Instance unit_instance(std::size_t s_b, const std::vector<Vec>& weights) {
  Instance inst;
  inst.s_a = 1;
  inst.s_b = s_b;
  inst.leader_budget = {R(1)};
  inst.follower_budget.assign(s_b, R(1));
  for (std::size_t j = 0; j < weights.size(); ++j) {
    inst.items.push_back({R(1), {R(1)}, weights[j], j});
  }
  return inst;
}

// ---------------------------------------------------------------------------

TEST(DecompositionTest, Examples) {
  Instance four = unit_instance(2, std::vector<Vec>(4, Vec{R(1, 4), R(3, 8)}));
  auto r = general::decompose_feasible_follower_set({0, 1, 2, 3}, four, R(1, 2));
  ASSERT_EQ(r.parts.size(), 2u);
  EXPECT_EQ(r.parts[0], (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.parts[1], (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(r.satisfied_trace[0], (std::vector<std::size_t>{0, 1}));

  EXPECT_TRUE(general::decompose_feasible_follower_set({}, four, R(1, 2)).parts.empty());
  auto one = general::decompose_feasible_follower_set({2}, four, R(1, 2));
  ASSERT_EQ(one.parts.size(), 1u);
  EXPECT_EQ(one.parts[0], (std::vector<std::size_t>{2}));

  // A single heavy item in dimension 2 is split off on its own.
  Instance heavy = unit_instance(3, {{R(1, 4), R(0), R(1, 10)}, {R(1, 4), R(3, 5), R(0)},
                                     {R(1, 4), R(1, 2), R(1, 2)}, {R(1, 4), R(0), R(3, 5)}});
  auto h = general::decompose_feasible_follower_set({0, 1, 2, 3}, heavy, R(1, 2));
  ASSERT_EQ(h.parts.size(), 3u);
  EXPECT_EQ(h.parts[0], (std::vector<std::size_t>{1}));
  EXPECT_EQ(h.parts[1], (std::vector<std::size_t>{2}));
  EXPECT_EQ(h.parts[2], (std::vector<std::size_t>{0, 3}));
}

TEST(DecompositionTest, Errors) {
  Instance four = unit_instance(2, std::vector<Vec>(4, Vec{R(1, 4), R(3, 8)}));
  EXPECT_EQ(code_of([&] { general::decompose_feasible_follower_set({0}, four, R(0)); }),
            ErrorCode::kTauOutOfRange);
  EXPECT_EQ(code_of([&] { general::decompose_feasible_follower_set({0}, four, R(3, 5)); }),
            ErrorCode::kTauOutOfRange);
  EXPECT_EQ(code_of([&] { general::decompose_feasible_follower_set({0, 1, 2, 3}, four, R(1, 4)); }),
            ErrorCode::kBudgetViolation);
}

TEST(DecompositionTest, RandomAugmentedSetsSplitIntoFeasibleParts) {
  std::mt19937_64 rng(11);
  const std::vector<Rational> taus{R(1, 2), R(1, 3), R(1, 4)};
  int checked = 0;
  while (checked < 500) {
    const std::size_t s_b = 2 + rng() % 2;
    const Rational tau = taus[rng() % taus.size()];
    const std::size_t n = 1 + rng() % 8;
    Vec budget;
    for (std::size_t i = 0; i < s_b; ++i) budget.push_back(R(static_cast<long>(1 + rng() % 3), 2));
    // Every item fits the budget on its own.
    std::vector<Vec> w;
    for (std::size_t j = 0; j < n; ++j) {
      Vec v;
      for (std::size_t i = 0; i < s_b; ++i) v.push_back(budget[i] * R(static_cast<long>(rng() % 13), 12));
      w.push_back(v);
    }
    Instance inst = unit_instance(s_b, w);
    inst.follower_budget = budget;
    // Greedy random τ-feasible subset.
    std::vector<std::size_t> sel;
    Vec used(s_b);
    for (std::size_t j = 0; j < n; ++j) {
      if (rng() % 4 == 0) continue;
      bool ok = true;
      for (std::size_t i = 0; i < s_b; ++i) {
        const Rational cap = i == 0 ? inst.follower_budget[i] : (R(1) + tau) * inst.follower_budget[i];
        if (used[i] + w[j][i] > cap) ok = false;
      }
      if (!ok) continue;
      for (std::size_t i = 0; i < s_b; ++i) used[i] += w[j][i];
      sel.push_back(j);
    }
    auto r = general::decompose_feasible_follower_set(sel, inst, tau);
    EXPECT_LE(r.parts.size(), s_b);
    std::vector<std::size_t> all;
    for (const auto& part : r.parts) {
      EXPECT_FALSE(part.empty());
      Vec sum(s_b);
      for (std::size_t j : part) {
        all.push_back(j);
        for (std::size_t i = 0; i < s_b; ++i) sum[i] += w[j][i];
      }
      EXPECT_TRUE(leq(sum, inst.follower_budget));
    }
    std::sort(all.begin(), all.end());
    EXPECT_EQ(all, sel);
    ++checked;
  }
}

TEST(DecompositionTest, AugmentedOptimumWithinSbTimesOptimum) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t s_b = 2 + rng() % 2;
    Instance inst = gen_random(4 + rng() % 5, 1, s_b, ValueGrid{}, rng());
    // Items too heavy for the plain budget play no part.
    std::erase_if(inst.items, [&](const Item& it) { return !leq(it.weight, inst.follower_budget); });
    for (std::size_t j = 0; j < inst.size(); ++j) inst.items[j].id = j;
    const Rational tau(1, 2);
    Vec aug = inst.follower_budget;
    for (std::size_t i = 1; i < s_b; ++i) aug[i] *= R(1) + tau;
    const Rational opt = testing::double_enumeration(inst);
    const Rational opt_tau = testing::double_enumeration(inst, inst.leader_budget, aug);
    EXPECT_LE(opt, opt_tau);
    EXPECT_LE(opt_tau, Rational(static_cast<long>(s_b)) * opt);
  }
}

// ---------------------------------------------------------------------------

TEST(WeightRoundingTest, FeasibleSetsStayWithinAugmentedBudget) {
  std::mt19937_64 rng(17);
  const Rational delta(1, 16);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t s_b = 2 + rng() % 2;
    Instance inst = gen_random(3 + rng() % 6, 1, s_b, ValueGrid{}, rng());
    const ScaledInstance base = normalize(inst, R(1));
    const ScaledInstance si = round_weights_general(base, delta);
    const std::uint32_t full = 1u << inst.size();
    for (std::uint32_t m = 0; m < full; ++m) {
      Vec orig(s_b), rounded(s_b);
      for (std::size_t j = 0; j < inst.size(); ++j) {
        if (!((m >> j) & 1u)) continue;
        for (std::size_t i = 0; i < s_b; ++i) {
          orig[i] += base.instance.items[j].weight[i];
          rounded[i] += si.instance.items[j].weight[i];
        }
      }
      if (!leq(orig, Vec(s_b, R(1)))) continue;
      EXPECT_LE(rounded[0], R(1));
      for (std::size_t i = 1; i < s_b; ++i) EXPECT_LE(rounded[i], R(1) + R(2) * delta);
    }
  }
}

// ---------------------------------------------------------------------------

// Independent cell computation: bands by repeated subtraction, buckets by
// walking the geometric grid.
struct CellOracle {
  Rational eps, delta;
  std::size_t s_b;

  std::pair<std::size_t, std::vector<int>> key(const Rational& p, const Vec& used) const {
    std::size_t k = 1;
    Rational lo;
    while (lo + eps <= p) {
      lo += eps;
      ++k;
    }
    std::vector<int> v;
    for (std::size_t i = 1; i < s_b; ++i) {
      const Rational r = R(1) + R(2) * delta - used[i];
      if (r < eps) {
        v.push_back(-1);
        continue;
      }
      int b = 0;
      Rational edge = eps * (R(1) + eps);
      while (edge <= r) {
        edge *= R(1) + eps;
        ++b;
      }
      v.push_back(b);
    }
    return {k, v};
  }
};

TEST(DominantChoiceGeneralTest, EmptySetHasOneChoice) {
  auto theta = general::compute_dominant_choices_general({}, R(1, 2), R(1, 256), 2, 10);
  ASSERT_EQ(theta.choices.size(), 1u);
  const auto& c = theta.choices[0];
  EXPECT_EQ(c.band, 1u);
  EXPECT_TRUE(c.items.empty());
  EXPECT_EQ(c.consumed, (Vec{R(0), R(0)}));
  EXPECT_EQ(c.d[0], R(1));
  // 1 + 2/256 lies in [ (1/2)(3/2), (1/2)(9/4) ): bucket 1, right end 9/8.
  EXPECT_EQ(c.v, std::vector<int>{1});
  EXPECT_EQ(c.d[1], R(9, 8));
  EXPECT_FALSE(theta.exceeds_top);
}

TEST(DominantChoiceGeneralTest, MatchesCellwiseArgmin) {
  std::mt19937_64 rng(23);
  const Rational eps(1, 2), delta(1, 64);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t s_b = 2 + rng() % 2;
    const std::size_t m = 3 + rng() % 3;
    std::vector<LargeItem> items;
    for (std::size_t j = 0; j < m; ++j) {
      LargeItem it;
      it.id = 10 + j;
      it.profit = R(static_cast<long>(rng() % 5), 4);
      for (std::size_t i = 0; i < s_b; ++i) it.weight.push_back(R(static_cast<long>(rng() % 7), 8));
      items.push_back(it);
    }
    auto theta = general::compute_dominant_choices_general(items, eps, delta, s_b, m);
    CellOracle oracle{eps, delta, s_b};
    const std::size_t nb = 1 + 2 * s_b;  // 1 + ceil(s_B / eps)
    const Rational top = eps * R(static_cast<long>(nb));
    std::map<std::pair<std::size_t, std::vector<int>>, std::pair<Rational, Selection>> want;
    bool over = false;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      Rational p;
      Vec used(s_b);
      Selection sel = testing::mask_to_selection(mask, m);
      for (std::size_t j = 0; j < m; ++j) {
        if (!sel[j]) continue;
        p += items[j].profit;
        for (std::size_t i = 0; i < s_b; ++i) used[i] += items[j].weight[i];
      }
      bool fits = used[0] <= R(1);
      for (std::size_t i = 1; i < s_b; ++i) fits = fits && used[i] <= R(1) + R(2) * delta;
      if (!fits) continue;
      if (p >= top) {
        over = true;
        continue;
      }
      auto k = oracle.key(p, used);
      auto it = want.find(k);
      if (it == want.end() || used[0] < it->second.first ||
          (used[0] == it->second.first && lex_less(sel, it->second.second))) {
        want[k] = {used[0], sel};
      }
    }
    ASSERT_EQ(theta.choices.size(), want.size());
    EXPECT_EQ(theta.exceeds_top, over);
    for (const auto& c : theta.choices) {
      auto it = want.find({c.band, c.v});
      ASSERT_NE(it, want.end());
      std::vector<std::size_t> ids;
      for (std::size_t j = 0; j < m; ++j) {
        if (it->second.second[j]) ids.push_back(items[j].id);
      }
      EXPECT_EQ(c.items, ids);
      EXPECT_EQ(c.consumed[0], it->second.first);
      EXPECT_EQ(c.d[0], R(1) - c.consumed[0]);
    }
  }
}

// ---------------------------------------------------------------------------

bool on_shape_grid(const Rational& g, const Rational& eps) {
  if (g == R(1)) return true;
  for (Rational v = eps; v <= R(1); v *= R(1) + eps) {
    if (v == g) return true;
  }
  return false;
}

TEST(ShapeTest, ClassificationProperties) {
  std::mt19937_64 rng(31);
  const Rational eps(1, 4);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t s_b = 2 + rng() % 2;
    Vec d;
    for (std::size_t i = 0; i < s_b; ++i) d.push_back(R(static_cast<long>(1 + rng() % 8), 8));
    std::vector<SmallItem> small;
    for (std::size_t j = 0; j < 12; ++j) {
      SmallItem it{j, R(static_cast<long>(rng() % 30), 40), {}};
      for (std::size_t i = 0; i < s_b; ++i) it.weight.push_back(R(static_cast<long>(rng() % 6), 40));
      if (std::all_of(it.weight.begin(), it.weight.end(), [](const Rational& x) { return x.is_zero(); })) {
        it.weight[0] = R(1, 40);
      }
      small.push_back(it);
    }
    auto cls = general::classify_small_items(small, d, eps);
    EXPECT_EQ(cls.items.size() + cls.excluded.size(), small.size());
    for (const ClassifiedItem& c : cls.items) {
      Rational top;
      for (std::size_t i = 0; i < s_b; ++i) {
        EXPECT_EQ(c.scaled[i], small[c.id].weight[i] / d[i]);
        EXPECT_TRUE(on_shape_grid(c.shape[i], eps));
        EXPECT_GE(c.shape[i], c.scaled[i] / c.w);
        if (c.shape[i] > top) top = c.shape[i];
      }
      EXPECT_EQ(top, R(1));
      const Rational rho = small[c.id].profit / c.w;
      switch (c.ratio_class) {
        case RatioClass::kSmall: EXPECT_LE(rho, eps); break;
        case RatioClass::kBig: EXPECT_GT(rho, R(1) / eps); break;
        case RatioClass::kMedium:
          EXPECT_LE(c.rounded_ratio, rho);
          EXPECT_LT(rho, (R(1) + eps) * c.rounded_ratio);
          EXPECT_EQ(cls.subgroups[c.subgroup].shape, c.shape);
          EXPECT_EQ(cls.subgroups[c.subgroup].ratio, c.rounded_ratio);
          break;
      }
    }
    for (std::size_t j : cls.excluded) {
      bool over = false;
      for (std::size_t i = 0; i < s_b; ++i) over = over || small[j].weight[i] / d[i] > R(1);
      EXPECT_TRUE(over);
    }
    // Rounded weights w * shape inflate a fractional packing by at most
    // 1 + (s_B + 1) eps.
    for (int rep = 0; rep < 20; ++rep) {
      Vec load(s_b), inflated(s_b);
      for (const ClassifiedItem& c : cls.items) {
        const Rational y = R(static_cast<long>(rng() % 5), 4);
        bool fits = true;
        for (std::size_t i = 0; i < s_b; ++i) fits = fits && load[i] + y * c.scaled[i] <= R(1);
        if (!fits) continue;
        for (std::size_t i = 0; i < s_b; ++i) {
          load[i] += y * c.scaled[i];
          inflated[i] += y * c.w * c.shape[i];
        }
      }
      for (std::size_t i = 0; i < s_b; ++i) {
        EXPECT_LE(inflated[i], R(1) + R(static_cast<long>(s_b + 1)) * eps);
      }
    }
  }
}

TEST(ShapeTest, Examples) {
  const Rational eps(1, 2);
  // (1/2, 3/4) scaled by d = (1, 1): w = 3/4, direction (2/3, 1) rounds up to (3/4, 1).
  // Second item is a multiple with the same ratio.
  std::vector<SmallItem> small{{0, R(3, 4), {R(1, 2), R(3, 4)}}, {1, R(3, 8), {R(1, 4), R(3, 8)}},
                               {2, R(1), {R(1, 2), R(1, 2)}}};
  auto cls = general::classify_small_items(small, {R(1), R(1)}, eps);
  ASSERT_EQ(cls.items.size(), 3u);
  EXPECT_EQ(cls.items[0].shape, (Vec{R(3, 4), R(1)}));
  EXPECT_EQ(cls.items[1].shape, (Vec{R(3, 4), R(1)}));
  EXPECT_EQ(cls.items[0].ratio_class, RatioClass::kMedium);
  EXPECT_EQ(cls.items[0].rounded_ratio, R(3, 4));
  EXPECT_EQ(cls.items[0].subgroup, cls.items[1].subgroup);
  // Already on the grid: (1, 1).
  EXPECT_EQ(cls.items[2].shape, (Vec{R(1), R(1)}));
  EXPECT_EQ(cls.items[2].rounded_ratio, R(27, 16));
  EXPECT_EQ(cls.subgroups.size(), 2u);

  EXPECT_EQ(code_of([&] { general::classify_small_items(small, {R(0), R(1)}, eps); }),
            ErrorCode::kZeroResidual);
  EXPECT_EQ(code_of([&] {
              general::classify_small_items({{0, R(1), {R(0), R(0)}}}, {R(1), R(1)}, eps);
            }),
            ErrorCode::kZeroWeightItem);
  auto ex = general::classify_small_items(small, {R(1, 4), R(1)}, eps);
  EXPECT_EQ(ex.excluded, (std::vector<std::size_t>{0, 2}));
}

// ---------------------------------------------------------------------------

TEST(LambdaTest, GridAndStreamCounts) {
  const Rational eps(1, 2);
  const auto grid = general::lambda_grid(eps, 2);
  // 0, (1/64)(3/2)^t for t = 0..15, and 8.
  ASSERT_EQ(grid.size(), 18u);
  EXPECT_EQ(grid[0], R(0));
  EXPECT_EQ(grid[1], R(1, 64));
  EXPECT_EQ(grid.back(), R(8));
  EXPECT_LT(grid[16], R(8));
  EXPECT_GE(grid[16] * R(3, 2), R(8));

  std::size_t count = 0;
  auto s0 = general::enumerate_lambda_guesses(0, eps, 2, kUnlimited, [&](const LambdaGuess& g) {
    EXPECT_TRUE(g.lambda.empty());
    ++count;
  });
  EXPECT_EQ(count, 1u);
  EXPECT_FALSE(s0.truncated);

  std::set<std::pair<Rational, Rational>> seen;
  auto s1 = general::enumerate_lambda_guesses(1, eps, 2, kUnlimited, [&](const LambdaGuess& g) {
    EXPECT_LE(g.lambda_bar[0], g.lambda[0]);
    seen.insert({g.lambda[0], g.lambda_bar[0]});
  });
  EXPECT_EQ(s1.emitted, 18u * 19u / 2u);
  EXPECT_EQ(seen.size(), s1.emitted);

  auto s2 = general::enumerate_lambda_guesses(2, eps, 2, kUnlimited, [](const LambdaGuess&) {});
  EXPECT_EQ(s2.emitted, 171u * 171u);
  EXPECT_FALSE(s2.truncated);
}

TEST(LambdaTest, TruncationAndDeterminism) {
  std::vector<LambdaGuess> a, b;
  auto s = general::enumerate_lambda_guesses(3, R(1, 2), 2, 50,
                                             [&](const LambdaGuess& g) { a.push_back(g); });
  general::enumerate_lambda_guesses(3, R(1, 2), 2, 50, [&](const LambdaGuess& g) { b.push_back(g); });
  EXPECT_TRUE(s.truncated);
  EXPECT_EQ(s.emitted, 50u);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].lambda, b[i].lambda);
    EXPECT_EQ(a[i].lambda_bar, b[i].lambda_bar);
  }
}

// ---------------------------------------------------------------------------

// Two choices; the first sees items 0 and 1 in one medium subgroup, the
// second sees item 1 as big-ratio.
general::CenLpInput two_choice_input() {
  general::CenLpInput in;
  in.a_prime = {R(1, 4)};
  in.small_ids = {0, 1};
  in.small_cost = {{R(1, 2)}, {R(1, 2)}};
  in.fixed_zero = {false, false};
  in.small_profit = {R(1, 8), R(1, 4)};
  general::ChoiceView a;
  a.profit = R(1, 2);
  a.cls.items = {{0, {R(1, 8)}, R(1, 8), {R(1)}, RatioClass::kMedium, R(1), 0},
                 {1, {R(1, 8)}, R(1, 8), {R(1)}, RatioClass::kMedium, R(1), 0}};
  a.cls.subgroups = {{{R(1)}, R(1), {0, 1}}};
  general::ChoiceView b;
  b.profit = R(1, 4);
  b.big = {1};
  b.first_subgroup = 1;
  in.choices = {a, b};
  return in;
}

TEST(CenLpTest, RowFamilies) {
  const Rational eps(1, 2);
  general::CenLpInput in = two_choice_input();
  LambdaGuess mid{{R(1, 16)}, {R(1, 64)}};
  LinearProgram lp = general::build_cen_lp(in, mid, eps, 2);
  // leader, two objective rows, two interval rows.
  EXPECT_EQ(lp.num_variables(), 3u);
  EXPECT_EQ(lp.num_constraints(), 5u);
  EXPECT_EQ(lp.constraints()[3].tag, "choice1.group1.low");
  LambdaGuess none{{R(0)}, {R(0)}};
  EXPECT_EQ(general::build_cen_lp(in, none, eps, 2).num_constraints(), 4u);
  LambdaGuess all{{R(8)}, {R(8)}};
  LinearProgram full = general::build_cen_lp(in, all, eps, 2);
  EXPECT_EQ(full.constraints()[3].tag, "choice1.group1.all");
  // Total mass 1/4 cannot reach 8.
  EXPECT_EQ(solve_extreme_point(full).status, LPStatus::kInfeasible);

  LambdaGuess short_guess{{}, {}};
  EXPECT_EQ(code_of([&] { general::build_cen_lp(in, short_guess, eps, 2); }),
            ErrorCode::kDanglingSubgroup);

  // Without subgroups or big items the objective rows are P_l <= M.
  general::CenLpInput bare = in;
  bare.choices[0].cls = {};
  bare.choices[1].big.clear();
  bare.choices[1].first_subgroup = 0;
  LinearProgram b = general::build_cen_lp(bare, LambdaGuess{}, eps, 2);
  LPSolution sol = solve_extreme_point(b);
  ASSERT_EQ(sol.status, LPStatus::kOptimal);
  EXPECT_EQ(sol.objective_value, R(1, 2));
}

TEST(CenLpTest, MatchesVertexEnumeration) {
  const Rational eps(1, 2);
  general::CenLpInput in = two_choice_input();
  int feasible = 0;
  general::enumerate_lambda_guesses(1, eps, 2, kUnlimited, [&](const LambdaGuess& g) {
    LinearProgram lp = general::build_cen_lp(in, g, eps, 2);
    LPSolution sol = solve_extreme_point(lp);
    std::optional<Rational> want = testing::vertex_enumeration(lp);
    ASSERT_EQ(sol.status == LPStatus::kOptimal, want.has_value());
    if (!want) return;
    ++feasible;
    EXPECT_EQ(sol.objective_value, *want);
    EXPECT_TRUE(verify_extreme_point(lp, sol.x));
  });
  EXPECT_GT(feasible, 0);

  // lambda = 3/16 needs 3/16 <= (1/8)(2 - x0 - x1) <= 9/32; the leader row
  // allows x0 + x1 <= 3/2; minimizing M = max(1/2 + 3/64, 1/4 + (1/4)(1 - x1)).
  LambdaGuess g{{R(3, 16)}, {R(3, 64)}};
  LinearProgram lp = general::build_cen_lp(in, g, eps, 2);
  LPSolution sol = solve_extreme_point(lp);
  ASSERT_EQ(sol.status, LPStatus::kOptimal);
  EXPECT_EQ(sol.objective_value, R(35, 64));
  EXPECT_EQ(sol.objective_value, *testing::vertex_enumeration(lp));
}

TEST(RoundSolutionGeneralTest, Examples) {
  LPSolution sol;
  sol.status = LPStatus::kOptimal;
  sol.is_extreme_point = true;
  sol.x = {R(1), R(1, 2), R(0), R(1)};
  EXPECT_EQ(general::round_solution_general(sol), (Selection{true, false, false, true}));
  sol.x = {R(0), R(0)};
  EXPECT_EQ(general::round_solution_general(sol), (Selection{false, false}));
  sol.is_extreme_point = false;
  EXPECT_EQ(code_of([&] { general::round_solution_general(sol); }), ErrorCode::kNotExtremePoint);
}

// ---------------------------------------------------------------------------

TEST(GeneralSolveTest, Examples) {
  general::Options opt;
  opt.exhaustive = true;
  Instance inst = unit_instance(2, {{R(1, 2), R(1, 2)}, {R(1, 2), R(1, 4)}});
  inst.items[1].profit = R(2);
  BilevelResult r = general::solve(inst, opt);
  EXPECT_EQ(r.objective, R(1));
  EXPECT_EQ(r.leader, (Selection{false, true}));
  EXPECT_EQ(r.bound_claim, general::kExhaustiveClaim);
  EXPECT_TRUE(r.stats.precondition_ok);

  inst.leader_budget = {R(2)};
  EXPECT_EQ(general::solve(inst, opt).objective, R(0));
}

TEST(GeneralSolveTest, Errors) {
  Instance one = unit_instance(1, {{R(1, 2)}});
  EXPECT_EQ(code_of([&] { general::solve(one); }), ErrorCode::kWrongDimension);
  Instance two = unit_instance(2, {{R(1, 2), R(1, 2)}});
  general::Options opt;
  opt.eps = R(3, 4);
  EXPECT_EQ(code_of([&] { general::solve(two, opt); }), ErrorCode::kEpsilonOutOfRange);
}

TEST(GeneralSolveTest, PreconditionIsRecorded) {
  EXPECT_TRUE(general::precondition_holds(R(1, 2), 1, 2));
  // 100 + 2*32 > 128
  EXPECT_FALSE(general::precondition_holds(R(1, 2), 100, 2));
}

// Light items with a few heavy ones, so the small-item LP is exercised.
Instance light_items(std::mt19937_64& rng) {
  Instance inst;
  inst.s_a = 1;
  inst.s_b = 2;
  inst.follower_budget = {R(1), R(1)};
  const std::size_t n = 6 + rng() % 3;
  for (std::size_t j = 0; j < n; ++j) {
    Item it;
    it.id = j;
    const bool big = j < 2;
    it.profit = big ? R(static_cast<long>(4 + rng() % 4)) : R(static_cast<long>(1 + rng() % 4), 20);
    it.weight = {R(static_cast<long>(rng() % 3), 100), R(static_cast<long>(1 + rng() % 3), 100)};
    it.cost = {R(static_cast<long>(1 + rng() % 10), 10)};
    inst.items.push_back(std::move(it));
  }
  inst.leader_budget = {R(static_cast<long>(10 + rng() % 10), 10)};
  return inst;
}

TEST(GeneralSolveTest, WithinEnvelopeOfOptimum) {
  std::mt19937_64 rng(41);
  std::size_t lps = 0;
  for (int trial = 0; trial < 16; ++trial) {
    general::Options opt;
    opt.exhaustive = true;
    Instance inst;
    if (trial % 2) {
      inst = light_items(rng);
      opt.delta = R(1, 16);
      opt.exhaustive = false;
      opt.max_lambda_guesses = 200;
    } else {
      inst = gen_random(4 + rng() % 3, 1 + rng() % 2, 2, ValueGrid{}, rng());
    }
    BilevelResult r = general::solve(inst, opt);
    const Rational opt_value = testing::double_enumeration(inst);
    EXPECT_TRUE(inst.leader_feasible(r.leader));
    EXPECT_TRUE(verify(inst, r).ok());
    EXPECT_GE(r.objective, opt_value);
    if (!r.truncated) {
      EXPECT_LE(r.objective, R(4) * opt_value);
    }
    EXPECT_EQ(r.stats.fractional_violations, 0u);
    EXPECT_EQ(r.stats.extreme_point_failures, 0u);
    EXPECT_EQ(r.stats.leader_violations, 0u);
    lps += r.stats.lp_solves;
  }
  EXPECT_GT(lps, 0u);
}

TEST(GeneralSolveTest, CapsDowngradeTheClaim) {
  std::mt19937_64 rng(43);
  Instance inst = gen_random(8, 1, 2, ValueGrid{}, rng());
  general::Options opt;
  opt.max_large_guesses = 1;
  BilevelResult r = general::solve(inst, opt);
  EXPECT_TRUE(r.truncated);
  EXPECT_EQ(r.bound_claim, general::kCappedClaim);
  EXPECT_TRUE(verify(inst, r).ok());
}

}  // namespace
}  // namespace interdict
