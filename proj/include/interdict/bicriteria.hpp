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

// Bicriteria approximation for any number of leader and follower
// constraints: a fractional interdiction found by cutting planes against a
// follower oracle, then rounded at a threshold alpha. The leader budget may
// grow by 1/alpha; the objective is at most rho/(1-alpha) times optimal.

#ifndef INTERDICT_BICRITERIA_HPP_
#define INTERDICT_BICRITERIA_HPP_

#include <optional>
#include <string>
#include <vector>

#include "interdict/exact_bilevel.hpp"
#include "interdict/follower.hpp"
#include "interdict/instance.hpp"
#include "interdict/lp.hpp"

namespace interdict::bicriteria {

struct Options {
  Rational alpha{1, 2};
  Rational search_eps{1, 1000};
  std::size_t max_rounds = 20000;  // per target
  std::size_t exact_limit = 64;    // re-evaluate with the exact follower up to this n
};

inline constexpr const char* kClaim = "(ρ/(1−α), 1/α)-bicriteria";

// Cut for a follower set y at target t: sum_{j in y} p_j (1 - x_j) <= t.
inline Cut follower_cut(const Instance& inst, const Selection& y, const Rational& t) {
  const std::size_t n = inst.size();
  Cut c;
  c.coeffs.assign(n, Rational(0));
  Rational mass;
  for (std::size_t j = 0; j < n; ++j) {
    if (!y[j]) continue;
    c.coeffs[j] = -inst.items[j].profit;
    mass += inst.items[j].profit;
  }
  c.rel = Relation::kLeq;
  c.rhs = t - mass;
  c.provenance = "follower";
  return c;
}

inline Cut leader_cut(const Instance& inst, std::size_t row) {
  const std::size_t n = inst.size();
  Cut c;
  c.coeffs.resize(n);
  for (std::size_t j = 0; j < n; ++j) c.coeffs[j] = inst.items[j].cost[row];
  c.rel = Relation::kLeq;
  c.rhs = inst.leader_budget[row];
  c.provenance = "leader" + std::to_string(row);
  return c;
}

// Most violated leader row at x, ties to the lowest index.
inline std::optional<std::size_t> most_violated_leader_row(const Instance& inst,
                                                           const std::vector<Rational>& x) {
  std::optional<std::size_t> worst;
  Rational gap;
  for (std::size_t i = 0; i < inst.s_a; ++i) {
    Rational lhs;
    for (std::size_t j = 0; j < inst.size(); ++j) lhs.add_product(inst.items[j].cost[i], x[j]);
    const Rational over = lhs - inst.leader_budget[i];
    if (over.sign() > 0 && (!worst || over > gap)) {
      worst = i;
      gap = over;
    }
  }
  return worst;
}

// Follower set found by the oracle at x0, if its modified value exceeds t.
inline std::optional<Selection> violating_follower_set(const Instance& inst,
                                                       const std::vector<Rational>& x0,
                                                       const Rational& t,
                                                       const FollowerOracle& oracle) {
  const std::size_t n = inst.size();
  Vec profit(n);
  for (std::size_t j = 0; j < n; ++j) profit[j] = inst.items[j].profit * (Rational(1) - x0[j]);
  FollowerSolution y = oracle.solve(profit, Selection(n, true), inst.follower_budget);
  if (y.value > t) return y.selected;
  return std::nullopt;
}

inline SeparationOutcome separation(const Instance& inst, const std::vector<Rational>& x0,
                                    const Rational& t, const FollowerOracle& oracle) {
  if (x0.size() != inst.size()) throw Error(ErrorCode::kDimensionMismatch, "point has wrong length");
  if (auto y = violating_follower_set(inst, x0, t, oracle)) {
    return SeparationOutcome::violated(follower_cut(inst, *y, t));
  }
  if (auto row = most_violated_leader_row(inst, x0)) {
    return SeparationOutcome::violated(leader_cut(inst, *row));
  }
  return SeparationOutcome::accept();
}

// Cuts found so far. Follower sets stay valid for every target.
struct CutPool {
  std::vector<Selection> follower_sets;
  std::vector<std::size_t> leader_rows;
};

struct FractionalOutcome {
  FeasibilityStatus status = FeasibilityStatus::kRoundLimit;
  std::vector<Rational> point;
  std::vector<Cut> cuts;
  std::size_t rounds = 0;
};

inline LinearProgram box_lp(const Instance& inst) {
  LinearProgram lp;
  for (std::size_t j = 0; j < inst.size(); ++j) {
    lp.add_variable("x" + std::to_string(j), Rational(0), Rational(1));
  }
  return lp;
}

inline FractionalOutcome solve_fractional(const Instance& inst, const Rational& t,
                                          const FollowerOracle& oracle, std::size_t max_rounds,
                                          CutPool* pool = nullptr) {
  if (t.sign() < 0) throw Error(ErrorCode::kNegativeEntry, "target must be nonnegative");
  std::vector<Cut> initial;
  if (pool) {
    for (const auto& y : pool->follower_sets) initial.push_back(follower_cut(inst, y, t));
    for (std::size_t row : pool->leader_rows) initial.push_back(leader_cut(inst, row));
  }
  // Same decisions as separation(), recording what it finds.
  Separator sep = [&](const std::vector<Rational>& x0) {
    if (auto y = violating_follower_set(inst, x0, t, oracle)) {
      if (pool) pool->follower_sets.push_back(*y);
      return SeparationOutcome::violated(follower_cut(inst, *y, t));
    }
    if (auto row = most_violated_leader_row(inst, x0)) {
      if (pool) pool->leader_rows.push_back(*row);
      return SeparationOutcome::violated(leader_cut(inst, *row));
    }
    return SeparationOutcome::accept();
  };
  FeasibilityResult r = feasibility_with_separation(box_lp(inst), sep, max_rounds, std::move(initial));
  FractionalOutcome out;
  out.status = r.status;
  out.point = std::move(r.point);
  out.cuts = std::move(r.cuts);
  out.rounds = r.rounds;
  return out;
}

inline Selection threshold_round(const std::vector<Rational>& x, const Rational& alpha) {
  Selection out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) out[j] = x[j] >= alpha;
  return out;
}

struct BicriteriaResult {
  BilevelResult result;      // leader, best response, objective, multiplier 1/alpha
  Rational certified_bound;  // rho * target / (1 - alpha)
  Rational target;           // accepted fractional target
  Rational lower;            // largest target shown infeasible
  std::vector<Rational> fractional;
  bool objective_exact = true;
  bool round_limit = false;
  std::size_t searches = 0;
  std::size_t cuts = 0;
};

inline BicriteriaResult solve(const Instance& inst, const FollowerOracle& oracle,
                              const Options& opt = {}) {
  inst.validate();
  if (opt.alpha.sign() <= 0 || opt.alpha >= Rational(1)) {
    throw Error(ErrorCode::kAlphaOutOfRange, "alpha must lie in (0, 1), got " + opt.alpha.str());
  }
  if (opt.search_eps.sign() <= 0) {
    throw Error(ErrorCode::kEpsilonOutOfRange, "search_eps must be positive");
  }
  const std::size_t n = inst.size();
  Rational total, p_min;
  for (const auto& it : inst.items) {
    total += it.profit;
    if (it.profit.sign() > 0 && (p_min.is_zero() || it.profit < p_min)) p_min = it.profit;
  }
  CutPool pool;
  BicriteriaResult out;
  auto attempt = [&](const Rational& t) {
    ++out.searches;
    return solve_fractional(inst, t, oracle, opt.max_rounds, &pool);
  };

  FractionalOutcome top = attempt(total);
  if (top.status != FeasibilityStatus::kFeasible) {
    // Only the leader rows can cut here, and x = 0 satisfies them.
    throw Error(ErrorCode::kRoundLimit, "no fractional point accepted at the profit total");
  }
  Rational lo, hi = total;
  std::vector<Rational> x_hi = std::move(top.point);
  if (total.sign() > 0) {
    FractionalOutcome zero = attempt(Rational(0));
    if (zero.status == FeasibilityStatus::kFeasible) {
      hi = Rational(0);
      x_hi = std::move(zero.point);
    } else if (zero.status == FeasibilityStatus::kRoundLimit) {
      out.round_limit = true;
    }
  }
  while (!out.round_limit && hi - lo > opt.search_eps * max(lo, p_min)) {
    const Rational mid = (lo + hi) / Rational(2);
    FractionalOutcome r = attempt(mid);
    if (r.status == FeasibilityStatus::kFeasible) {
      hi = mid;
      x_hi = std::move(r.point);
    } else if (r.status == FeasibilityStatus::kInfeasible) {
      lo = mid;
    } else {
      out.round_limit = true;
    }
  }

  const Selection x = threshold_round(x_hi, opt.alpha);
  Selection avail(n);
  for (std::size_t j = 0; j < n; ++j) avail[j] = !x[j];
  BilevelResult& br = out.result;
  br.leader = x;
  if (n <= opt.exact_limit) {
    br.follower_response = KnapsackSolver(inst, inst.follower_budget).solve(avail);
  } else {
    Vec profit(n);
    for (std::size_t j = 0; j < n; ++j) profit[j] = avail[j] ? inst.items[j].profit : Rational(0);
    br.follower_response = oracle.solve(profit, avail, inst.follower_budget);
    out.objective_exact = false;
  }
  br.objective = br.follower_response.value;
  br.budget_multiplier = Rational(1) / opt.alpha;
  br.bound_claim = kClaim;
  br.truncated = out.round_limit;
  out.target = hi;
  out.lower = lo;
  out.fractional = std::move(x_hi);
  out.certified_bound = oracle.rho() * hi / (Rational(1) - opt.alpha);
  out.cuts = pool.follower_sets.size() + pool.leader_rows.size();
  return out;
}

}  // namespace interdict::bicriteria

#endif  // INTERDICT_BICRITERIA_HPP_
