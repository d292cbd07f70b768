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

#ifndef INTERDICT_EXACT_BILEVEL_HPP_
#define INTERDICT_EXACT_BILEVEL_HPP_

#include <optional>
#include <string>
#include <vector>

#include "interdict/follower.hpp"
#include "interdict/instance.hpp"

namespace interdict {

// Counters filled in by the approximation algorithms.
struct SolveStats {
  std::size_t scales = 0;
  std::size_t large_guesses = 0;
  std::size_t pruned_guesses = 0;
  std::size_t critical_tuples = 0;
  std::size_t lambda_guesses = 0;
  std::size_t lp_solves = 0;
  std::size_t lp_infeasible = 0;
  std::size_t candidates = 0;
  std::size_t max_fractional = 0;
  std::size_t fractional_violations = 0;  // fractional count above non-box rows
  std::size_t extreme_point_failures = 0;
  std::size_t leader_violations = 0;
  bool precondition_ok = true;
};

struct BilevelResult {
  Selection leader;
  FollowerSolution follower_response;
  Rational objective;
  std::string bound_claim;
  Rational budget_multiplier{1};  // leader cost is checked against this multiple of a
  bool truncated = false;
  SolveStats stats;
};

struct ExactOptions {
  std::size_t exhaustive_limit = 20;
  bool override_limit = false;
  std::optional<std::size_t> leader_cap;  // at most this many interdicted items
};

namespace detail {

class LeaderEnumerator {
 public:
  LeaderEnumerator(const Instance& inst, const ExactOptions& opt)
      : inst_(inst), solver_(inst, inst.follower_budget) {
    const std::size_t n = inst.size();
    for (std::size_t j = 0; j < n; ++j) {
      bool alone = true;
      for (std::size_t i = 0; i < inst.s_a; ++i) {
        alone = alone && inst.items[j].cost[i] <= inst.leader_budget[i];
      }
      if (alone) candidates_.push_back(j);
    }
    max_k_ = candidates_.size();
    if (opt.leader_cap) max_k_ = std::min(max_k_, *opt.leader_cap);
    x_.assign(n, false);
    spent_.assign(inst.s_a, Rational(0));
  }

  BilevelResult run() {
    for (std::size_t k = 0; k <= max_k_; ++k) {
      if (!choose(0, k)) break;
    }
    BilevelResult r;
    r.leader = best_x_;
    r.follower_response = best_y_;
    r.objective = best_y_.value;
    r.bound_claim = "exact optimum";
    return r;
  }

 private:
  // Lexicographic k-subsets of the candidates starting at position pos.
  // Returns false when no feasible subset of this size exists.
  bool choose(std::size_t pos, std::size_t k) {
    if (k == 0) {
      evaluate();
      return true;
    }
    bool any = false;
    for (std::size_t c = pos; c + k <= candidates_.size(); ++c) {
      const std::size_t j = candidates_[c];
      bool fits = true;
      for (std::size_t i = 0; i < inst_.s_a; ++i) {
        fits = fits && spent_[i] + inst_.items[j].cost[i] <= inst_.leader_budget[i];
      }
      if (!fits) continue;
      for (std::size_t i = 0; i < inst_.s_a; ++i) spent_[i] += inst_.items[j].cost[i];
      x_[j] = true;
      any = choose(c + 1, k - 1) || any;
      x_[j] = false;
      for (std::size_t i = 0; i < inst_.s_a; ++i) spent_[i] -= inst_.items[j].cost[i];
    }
    return any;
  }

  void evaluate() {
    Selection avail(x_.size());
    for (std::size_t j = 0; j < x_.size(); ++j) avail[j] = !x_[j];
    FollowerSolution y = solver_.solve(avail);
    if (!have_ || y.value < best_y_.value || (y.value == best_y_.value && lex_less(x_, best_x_))) {
      best_x_ = x_;
      best_y_ = std::move(y);
      have_ = true;
    }
  }

  const Instance& inst_;
  KnapsackSolver solver_;
  std::vector<std::size_t> candidates_;
  std::size_t max_k_ = 0;
  Selection x_, best_x_;
  Vec spent_;
  FollowerSolution best_y_;
  bool have_ = false;
};

}  // namespace detail

// Minimum over leader-feasible x of the follower optimum on 1 - x.
// Leader sets are visited by size, then lexicographically; ties keep the
// lexicographically smallest x.
inline BilevelResult solve_exact_bilevel(const Instance& inst, const ExactOptions& opt = {}) {
  inst.validate();
  if (inst.size() > opt.exhaustive_limit && !opt.override_limit) {
    throw Error(ErrorCode::kInstanceTooLarge,
                std::to_string(inst.size()) + " items exceed the exhaustive limit " +
                    std::to_string(opt.exhaustive_limit));
  }
  detail::LeaderEnumerator e(inst, opt);
  return e.run();
}

struct VerificationReport {
  bool leader_feasible = true;
  bool follower_feasible = true;
  bool objective_matches = true;
  Rational recomputed_objective;
  std::vector<std::string> messages;

  bool ok() const { return leader_feasible && follower_feasible && objective_matches; }
};

inline VerificationReport verify(const Instance& inst, const BilevelResult& r) {
  VerificationReport rep;
  const std::size_t n = inst.size();
  if (r.leader.size() != n) {
    rep.leader_feasible = false;
    rep.messages.push_back("leader vector length " + std::to_string(r.leader.size()) +
                           " != " + std::to_string(n));
    return rep;
  }
  if (!inst.leader_feasible(r.leader, r.budget_multiplier)) {
    rep.leader_feasible = false;
    rep.messages.push_back("leader-infeasible: cost exceeds " + r.budget_multiplier.str() +
                           " * budget");
  }
  const auto& y = r.follower_response.selected;
  if (y.size() == n) {
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] && r.leader[j]) {
        rep.follower_feasible = false;
        rep.messages.push_back("follower uses interdicted item " + std::to_string(j));
      }
    }
    if (!leq(inst.follower_weight(y), inst.follower_budget)) {
      rep.follower_feasible = false;
      rep.messages.push_back("follower response exceeds budget");
    }
    if (inst.profit_of(y) != r.follower_response.value) {
      rep.follower_feasible = false;
      rep.messages.push_back("follower value does not match its selection");
    }
  }
  Selection avail(n);
  for (std::size_t j = 0; j < n; ++j) avail[j] = !r.leader[j];
  rep.recomputed_objective = solve_exact(inst, avail, inst.follower_budget).value;
  if (rep.recomputed_objective != r.objective) {
    rep.objective_matches = false;
    rep.messages.push_back("objective-mismatch: reported " + r.objective.str() +
                           ", best response " + rep.recomputed_objective.str());
  }
  return rep;
}

// Exact follower best response to a leader vector.
inline BilevelResult evaluate_leader(const Instance& inst, const Selection& x,
                                     const std::string& bound_claim) {
  Selection avail(inst.size());
  for (std::size_t j = 0; j < inst.size(); ++j) avail[j] = !x[j];
  BilevelResult r;
  r.leader = x;
  r.follower_response = solve_exact(inst, avail, inst.follower_budget);
  r.objective = r.follower_response.value;
  r.bound_claim = bound_claim;
  return r;
}

}  // namespace interdict

#endif  // INTERDICT_EXACT_BILEVEL_HPP_
