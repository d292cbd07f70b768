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

// Approximation scheme for a single follower constraint: guess the leader's
// moves on large items, guess the follower's few dominant large-item
// choices and the greedy critical item for each, then settle small items
// with an LP and round its extreme point down.

#ifndef INTERDICT_PTAS_HPP_
#define INTERDICT_PTAS_HPP_

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "interdict/exact_bilevel.hpp"
#include "interdict/follower.hpp"
#include "interdict/guessing.hpp"
#include "interdict/instance.hpp"
#include "interdict/lp.hpp"

namespace interdict::ptas {

struct Options {
  Rational eps{1, 4};
  std::size_t max_guesses = 100000;   // large guesses per scale
  std::size_t max_criticals = 10000;  // critical tuples per large guess
  bool exhaustive = false;            // ignore both caps
  std::optional<std::size_t> size_cap;
  bool check_extreme_points = true;
};

inline Rational delta_for(const Rational& eps) { return eps * eps; }

// Additive loss of one core run when the scaled optimum is at most 1.
inline Rational bound(const Rational& eps, std::size_t s_a) {
  const Rational d = delta_for(eps);
  return eps +
         d * (Rational(static_cast<long>(s_a)) + Rational(2) +
              Rational(3) * (Rational(1) + eps) / eps) +
         Rational(2) * d;
}

inline std::size_t band_count(const Rational& eps) {
  return 1 + static_cast<std::size_t>((Rational(1) / eps).ceil().get_si());
}

struct DominantChoice {
  std::size_t band = 0;            // 1-based
  std::vector<std::size_t> items;  // ids
  Rational profit;                 // P
  Rational weight;                 // b
  bool feasible = false;
};

struct DominantChoices {
  std::vector<DominantChoice> bands;
  bool exceeds_top = false;  // some packable subset reaches the last band's top
};

// Minimum-weight subset per profit band [(k-1)eps, k eps) among subsets of
// at most size_cap items that fit the unit budget. Empty bands carry P = 0,
// b = 1.
inline DominantChoices compute_dominant_choices(const std::vector<RatioItem>& large,
                                                const Rational& eps, std::size_t size_cap) {
  const std::size_t nb = band_count(eps);
  const Rational top = eps * Rational(static_cast<long>(nb));
  const std::size_t m = large.size();
  DominantChoices out;
  std::vector<Selection> best_sel(nb);
  out.bands.resize(nb);
  for (std::size_t k = 0; k < nb; ++k) {
    out.bands[k].band = k + 1;
    out.bands[k].weight = Rational(1);
  }
  Selection cur(m, false);
  std::function<void(std::size_t, std::size_t, const Rational&, const Rational&)> dfs =
      [&](std::size_t idx, std::size_t size, const Rational& p, const Rational& w) {
        if (idx == m) {
          const std::size_t k = static_cast<std::size_t>((p / eps).floor().get_si());
          auto& c = out.bands[k];
          if (!c.feasible || w < c.weight || (w == c.weight && lex_less(cur, best_sel[k]))) {
            c.feasible = true;
            c.profit = p;
            c.weight = w;
            best_sel[k] = cur;
          }
          return;
        }
        dfs(idx + 1, size, p, w);
        if (size == size_cap) return;
        Rational p2 = p + large[idx].profit;
        Rational w2 = w + large[idx].weight;
        if (w2 > Rational(1)) return;
        if (p2 >= top) {
          out.exceeds_top = true;
          return;
        }
        cur[idx] = true;
        dfs(idx + 1, size + 1, p2, w2);
        cur[idx] = false;
      };
  dfs(0, 0, Rational(0), Rational(0));
  for (std::size_t k = 0; k < nb; ++k) {
    if (!out.bands[k].feasible) continue;
    for (std::size_t i = 0; i < m; ++i) {
      if (best_sel[k][i]) out.bands[k].items.push_back(large[i].id);
    }
  }
  return out;
}

// Per band, a position in the small-item ratio order (the dummy included).
struct CriticalGuess {
  std::vector<std::size_t> c;
};

struct SmallItems {
  std::vector<RatioItem> order;  // ratio order, dummy last
  std::vector<Vec> cost;         // per non-dummy position, scaled
  Selection fixed_zero;          // per non-dummy position
};

inline SmallItems make_small_items(const Instance& scaled, const std::vector<std::size_t>& ids,
                                   const Selection& forbidden) {
  std::vector<RatioItem> items;
  for (std::size_t j : ids) {
    items.push_back({scaled.items[j].profit, scaled.items[j].weight[0], j});
  }
  SmallItems s;
  s.order = ratio_order_with_dummy(std::move(items));
  for (std::size_t q = 0; q + 1 < s.order.size(); ++q) {
    const std::size_t j = s.order[q].id;
    s.cost.push_back(scaled.items[j].cost);
    s.fixed_zero.push_back(forbidden[j]);
  }
  return s;
}

// Small-item variables come first in ratio order, M is last.
inline LinearProgram build_lp(const LargeGuess& guess, const DominantChoices& theta,
                              const CriticalGuess& crit, const SmallItems& small) {
  const auto& order = small.order;
  if (order.empty() || order.back().id != kDummyId) {
    throw Error(ErrorCode::kUnsortedItems, "small items must end with the dummy");
  }
  const std::size_t m = order.size() - 1;
  for (std::size_t q = 0; q + 1 < m; ++q) {
    if (ratio_before(order[q + 1], order[q])) {
      throw Error(ErrorCode::kUnsortedItems, "small items not in ratio order");
    }
  }
  if (crit.c.size() != theta.bands.size()) {
    throw Error(ErrorCode::kDanglingCritical, "one critical per band required");
  }
  for (std::size_t c : crit.c) {
    if (c >= order.size() || order[c].weight.is_zero()) {
      throw Error(ErrorCode::kDanglingCritical, "critical position " + std::to_string(c));
    }
  }
  LinearProgram lp;
  for (std::size_t q = 0; q < m; ++q) {
    lp.add_variable("x" + std::to_string(order[q].id), Rational(0),
                    small.fixed_zero[q] ? Rational(0) : Rational(1));
  }
  Rational m_hi;
  for (std::size_t k = 0; k < theta.bands.size(); ++k) {
    const auto& b = theta.bands[k];
    const std::size_t c = crit.c[k];
    Rational hi = b.profit + (Rational(1) - b.weight) * order[c].profit / order[c].weight;
    for (std::size_t q = 0; q < c; ++q) hi += order[q].profit;
    m_hi = max(m_hi, hi);
  }
  const std::size_t mv = lp.add_variable("M", Rational(0), m_hi);
  const std::size_t nv = m + 1;
  const std::size_t s_a = guess.a_prime.size();
  for (std::size_t i = 0; i < s_a; ++i) {
    std::vector<Rational> row(nv);
    for (std::size_t q = 0; q < m; ++q) row[q] = small.cost[q][i];
    lp.add_constraint(std::move(row), Relation::kLeq, Rational(1) - guess.a_prime[i],
                      "leader" + std::to_string(i));
  }
  for (std::size_t k = 0; k < theta.bands.size(); ++k) {
    const auto& b = theta.bands[k];
    const std::size_t c = crit.c[k];
    const Rational r = Rational(1) - b.weight;
    const Rational slope = order[c].profit / order[c].weight;
    Rational pre_p, pre_w;
    std::vector<Rational> obj(nv), w(nv);
    for (std::size_t q = 0; q < c; ++q) {
      pre_p += order[q].profit;
      pre_w += order[q].weight;
      obj[q] = slope * order[q].weight - order[q].profit;
      w[q] = -order[q].weight;
    }
    obj[mv] = Rational(-1);
    const std::string tag = "band" + std::to_string(k + 1);
    lp.add_constraint(std::move(obj), Relation::kLeq, slope * pre_w - b.profit - pre_p - slope * r,
                      tag + ".value");
    lp.add_constraint(w, Relation::kLeq, r - pre_w, tag + ".before");
    lp.add_constraint(std::move(w), Relation::kGeq, r - order[c].weight - pre_w, tag + ".reach");
  }
  std::vector<Rational> objective(nv);
  objective[mv] = Rational(1);
  lp.set_objective(std::move(objective), Sense::kMin);
  return lp;
}

// Coordinates equal to 1 stay, everything else drops to 0.
inline Selection round_solution(const LPSolution& sol) {
  if (sol.status != LPStatus::kOptimal || !sol.is_extreme_point) {
    throw Error(ErrorCode::kNotExtremePoint, "rounding needs an extreme point");
  }
  Selection out(sol.x.size());
  for (std::size_t j = 0; j < sol.x.size(); ++j) out[j] = sol.x[j] == Rational(1);
  return out;
}

// Monotone critical tuples: a band with a smaller residual never gets a
// later critical than one with a larger residual, and equal residuals share
// one. A critical must be reachable: its weight plus everything before it
// covers the residual. Residual 0 takes the first positive-weight position.
class CriticalEnumerator {
 public:
  CriticalEnumerator(const DominantChoices& theta, const SmallItems& small)
      : theta_(theta), small_(small) {
    Rational pre;
    for (std::size_t q = 0; q < small.order.size(); ++q) {
      if (small.order[q].weight.sign() > 0) {
        eligible_.push_back(q);
        reach_.push_back(pre + small.order[q].weight);
      }
      pre += small.order[q].weight;
    }
    for (const auto& b : theta.bands) residuals_.push_back(Rational(1) - b.weight);
    distinct_ = residuals_;
    std::sort(distinct_.begin(), distinct_.end());
    distinct_.erase(std::unique(distinct_.begin(), distinct_.end()), distinct_.end());
  }

  // Returns true when the cap cut the stream short.
  bool run(std::size_t cap, const std::function<void(const CriticalGuess&)>& visit) {
    cap_ = cap;
    visit_ = &visit;
    pick_.assign(distinct_.size(), 0);
    rec(0, 0);
    return truncated_;
  }

 private:
  void rec(std::size_t level, std::size_t from) {
    if (truncated_) return;
    if (level == distinct_.size()) {
      if (emitted_ == cap_) {
        truncated_ = true;
        return;
      }
      ++emitted_;
      CriticalGuess g;
      for (const auto& r : residuals_) {
        auto it = std::lower_bound(distinct_.begin(), distinct_.end(), r);
        g.c.push_back(eligible_[pick_[static_cast<std::size_t>(it - distinct_.begin())]]);
      }
      (*visit_)(g);
      return;
    }
    const Rational& r = distinct_[level];
    if (r.is_zero()) {
      pick_[level] = 0;
      rec(level + 1, 0);
      return;
    }
    for (std::size_t e = from; e < eligible_.size(); ++e) {
      if (reach_[e] < r) continue;
      pick_[level] = e;
      rec(level + 1, e);
      if (truncated_) return;
    }
  }

  const DominantChoices& theta_;
  const SmallItems& small_;
  std::vector<std::size_t> eligible_;
  std::vector<Rational> reach_;
  std::vector<Rational> residuals_, distinct_;
  std::vector<std::size_t> pick_;
  std::size_t cap_ = 0, emitted_ = 0;
  bool truncated_ = false;
  const std::function<void(const CriticalGuess&)>* visit_ = nullptr;
};

inline void check_eps(const Rational& eps) {
  if (eps.sign() <= 0 || eps > Rational(1, 2)) {
    throw Error(ErrorCode::kEpsilonOutOfRange, "eps must lie in (0, 1/2], got " + eps.str());
  }
}

// Guess space for a scaled, profit-rounded single-constraint instance.
inline GuessSpace make_guess_space(const ScaledInstance& rounded, const Classification& cls,
                                   const Selection& must_take) {
  const std::size_t n = rounded.instance.size();
  const Rational& delta = cls.delta;
  GuessSpace sp;
  sp.kind.assign(n, LargeKind::kNone);
  sp.group_key.assign(n, Vec{});
  sp.order_weight.assign(n, Rational(0));
  sp.must_take = must_take;
  sp.cannot_take = rounded.leader_forbidden;
  sp.ignored = rounded.follower_infeasible;
  sp.budget = rounded.instance.leader_budget;
  for (std::size_t j = 0; j < n; ++j) {
    const auto& it = rounded.instance.items[j];
    sp.cost.push_back(it.cost);
    const bool heavy = cls.weight[j] == WeightClass::kLarge;
    if (cls.profit[j] == ProfitClass::kLarge && !heavy) {
      sp.kind[j] = LargeKind::kProfitOnly;
    } else if (heavy && cls.profit[j] == ProfitClass::kSmall) {
      sp.kind[j] = LargeKind::kWeightOnly;
    } else if (heavy) {
      sp.kind[j] = LargeKind::kWeightAndProfit;
      sp.group_key[j] = Vec{it.profit};
      sp.order_weight[j] = it.weight[0];
    }
  }
  const Rational inv = Rational(1) / delta;
  sp.key_count = static_cast<std::size_t>(inv.ceil().get_si());
  sp.leave_cap = sp.key_count - 1;
  return sp;
}

namespace detail {

// Best verified candidate with an evaluation cache keyed by leader vector.
class CandidatePool {
 public:
  explicit CandidatePool(const Instance& inst)
      : inst_(inst), solver_(inst, inst.follower_budget) {}

  const Rational& offer(const Selection& x) {
    auto it = cache_.find(x);
    if (it == cache_.end()) {
      Selection avail(x.size());
      for (std::size_t j = 0; j < x.size(); ++j) avail[j] = !x[j];
      FollowerSolution y = solver_.solve(avail);
      if (!have_ || y.value < best_y_.value ||
          (y.value == best_y_.value && lex_less(x, best_x_))) {
        best_x_ = x;
        best_y_ = y;
        have_ = true;
      }
      it = cache_.emplace(x, y.value).first;
    }
    return it->second;
  }

  const Rational& best_value() const { return best_y_.value; }

  BilevelResult result(const std::string& claim) const {
    BilevelResult r;
    r.leader = best_x_;
    r.follower_response = best_y_;
    r.objective = best_y_.value;
    r.bound_claim = claim;
    return r;
  }

  std::size_t evaluated() const { return cache_.size(); }

 private:
  const Instance& inst_;
  KnapsackSolver solver_;
  std::unordered_map<Selection, Rational> cache_;
  Selection best_x_;
  FollowerSolution best_y_;
  bool have_ = false;
};

// Scales Sum p / (1+eps)^t, t = 0..ceil(log_{1+eps}(Sum p / p_min)).
inline std::vector<Rational> scale_grid(const Rational& total, const Rational& p_min,
                                        const Rational& eps) {
  const Rational ratio = Rational(1) + eps;
  long t_max = grid_ceil_exponent(Rational(1), ratio, total / p_min);
  std::vector<Rational> out;
  Rational s = total;
  for (long t = 0; t <= t_max; ++t) {
    out.push_back(s);
    s /= ratio;
  }
  return out;
}

// Items the follower could pack on their own.
inline Selection packable(const Instance& inst) {
  Selection out(inst.size());
  for (std::size_t j = 0; j < inst.size(); ++j) {
    out[j] = leq(inst.items[j].weight, inst.follower_budget);
  }
  return out;
}

}  // namespace detail

inline constexpr const char* kExhaustiveClaim = "(1+O(ε))·OPT under exhaustive enumeration";
inline constexpr const char* kCappedClaim = "heuristic (budget-capped)";

// Core run for one scale. Returns false when the scale is provably below
// the optimum.
inline bool run_scale(const Instance& inst, const Rational& scale, const Options& opt,
                      const Selection& packable, detail::CandidatePool& pool, SolveStats& stats,
                      bool& truncated) {
  const std::size_t n = inst.size();
  const Rational delta = delta_for(opt.eps);
  Selection forced(n, false);
  for (std::size_t j = 0; j < n; ++j) forced[j] = packable[j] && inst.items[j].profit > scale;
  if (!inst.leader_feasible(forced)) return false;

  const ScaledInstance rounded = round_profits(normalize(inst, scale), delta);
  const Classification cls = classify(rounded, delta, WeightMode::kScalar);
  const GuessSpace space = make_guess_space(rounded, cls, forced);
  const std::size_t cap =
      opt.size_cap.value_or(static_cast<std::size_t>((Rational(2) / delta).ceil().get_si()));
  const std::size_t max_guesses = opt.exhaustive ? kUnlimited : opt.max_guesses;
  const std::size_t max_criticals = opt.exhaustive ? kUnlimited : opt.max_criticals;

  std::vector<std::size_t> small_ids;
  for (std::size_t j = 0; j < n; ++j) {
    if (packable[j] && !cls.is_large(j)) small_ids.push_back(j);
  }
  const SmallItems small = make_small_items(rounded.instance, small_ids, rounded.leader_forbidden);
  const std::size_t m = small.order.size() - 1;
  std::vector<std::size_t> x_vars(m);
  for (std::size_t q = 0; q < m; ++q) x_vars[q] = q;

  std::size_t survivors = 0;
  GuessStream stream = enumerate_guesses(space, max_guesses, [&](const LargeGuess& g) {
    ++stats.large_guesses;
    std::vector<RatioItem> open;
    for (std::size_t j = 0; j < n; ++j) {
      if (packable[j] && cls.is_large(j) && !g.takes[j]) {
        open.push_back({rounded.instance.items[j].profit, rounded.instance.items[j].weight[0], j});
      }
    }
    const DominantChoices theta = compute_dominant_choices(open, opt.eps, cap);
    if (theta.exceeds_top) {
      ++stats.pruned_guesses;
      return;
    }
    ++survivors;
    CriticalEnumerator crits(theta, small);
    bool cut = crits.run(max_criticals, [&](const CriticalGuess& cg) {
      ++stats.critical_tuples;
      const LinearProgram lp = build_lp(g, theta, cg, small);
      const LPSolution sol = solve_extreme_point(lp);
      ++stats.lp_solves;
      if (sol.status != LPStatus::kOptimal) {
        ++stats.lp_infeasible;
        return;
      }
      const std::size_t frac = count_fractional(lp, sol.x, x_vars);
      stats.max_fractional = std::max(stats.max_fractional, frac);
      if (frac > lp.num_constraints()) ++stats.fractional_violations;
      if (opt.check_extreme_points && !verify_extreme_point(lp, sol.x)) {
        ++stats.extreme_point_failures;
      }
      const Selection r = round_solution(sol);
      Selection x = g.takes;
      for (std::size_t q = 0; q < m; ++q) {
        if (r[q]) x[small.order[q].id] = true;
      }
      if (!inst.leader_feasible(x)) {
        ++stats.leader_violations;
        return;
      }
      pool.offer(x);
    });
    truncated = truncated || cut;
  });
  truncated = truncated || stream.truncated;
  // Every guess pruned: the scale is below the optimum. This relies on
  // the leave cap argument, which needs 1/delta to be an integer.
  const bool integral = (Rational(1) / delta).is_integer();
  return survivors > 0 || stream.truncated || !integral;
}

inline BilevelResult solve(const Instance& inst, const Options& opt = {}) {
  inst.validate();
  if (inst.s_b != 1) throw Error(ErrorCode::kWrongDimension, "this scheme needs s_B = 1");
  check_eps(opt.eps);
  const std::size_t n = inst.size();
  detail::CandidatePool pool(inst);
  SolveStats stats;
  bool truncated = false;
  pool.offer(Selection(n, false));
  const Selection packable = detail::packable(inst);
  Rational total, p_min;
  for (std::size_t j = 0; j < n; ++j) {
    const Rational& p = inst.items[j].profit;
    if (!packable[j] || p.is_zero()) continue;
    total += p;
    if (p_min.is_zero() || p < p_min) p_min = p;
  }
  if (total.sign() > 0) {
    for (const Rational& s : detail::scale_grid(total, p_min, opt.eps)) {
      if (pool.best_value().is_zero()) break;
      if (s > (Rational(1) + opt.eps) * pool.best_value()) continue;
      ++stats.scales;
      if (!run_scale(inst, s, opt, packable, pool, stats, truncated)) break;
    }
  }
  stats.candidates = pool.evaluated();
  BilevelResult r = pool.result(truncated ? kCappedClaim : kExhaustiveClaim);
  r.truncated = truncated;
  r.stats = stats;
  return r;
}

}  // namespace interdict::ptas

#endif  // INTERDICT_PTAS_HPP_
