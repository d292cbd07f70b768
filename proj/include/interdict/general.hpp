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

// Approximation for several follower constraints. Large items are guessed
// as in the single-constraint scheme, the follower's large-item choices are
// bucketed by profit and leftover budget, and small items are grouped by
// weight direction and profit ratio so that one LP per mass guess decides
// them.

#ifndef INTERDICT_GENERAL_HPP_
#define INTERDICT_GENERAL_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "interdict/exact_bilevel.hpp"
#include "interdict/guessing.hpp"
#include "interdict/instance.hpp"
#include "interdict/lp.hpp"
#include "interdict/ptas.hpp"

namespace interdict::general {

// ---------------------------------------------------------------------------
// Splitting a follower set packed under (1, 1+tau, ..., 1+tau) times the
// budget into at most s_B sets that each fit the budget.

struct DecompositionResult {
  std::vector<std::vector<std::size_t>> parts;
  std::vector<std::vector<std::size_t>> satisfied_trace;  // satisfied dims after each part
};

inline DecompositionResult decompose_feasible_follower_set(const std::vector<std::size_t>& selected,
                                                           const Instance& inst,
                                                           const Rational& tau) {
  if (tau.sign() <= 0 || tau > Rational(1, 2)) {
    throw Error(ErrorCode::kTauOutOfRange, "tau must lie in (0, 1/2], got " + tau.str());
  }
  const std::size_t s_b = inst.s_b;
  const Vec& b = inst.follower_budget;
  Vec total(s_b);
  for (std::size_t j : selected) {
    for (std::size_t i = 0; i < s_b; ++i) total[i] += inst.items[j].weight[i];
  }
  for (std::size_t i = 0; i < s_b; ++i) {
    const Rational cap = i == 0 ? b[i] : (Rational(1) + tau) * b[i];
    if (total[i] > cap) {
      throw Error(ErrorCode::kBudgetViolation,
                  "selected set exceeds the augmented budget in dimension " + std::to_string(i));
    }
  }
  // Work in budget units; dimensions with zero budget carry no weight here.
  auto unit = [&](std::size_t j, std::size_t i) {
    return b[i].is_zero() ? Rational(0) : inst.items[j].weight[i] / b[i];
  };
  std::vector<std::size_t> rest = selected;
  std::sort(rest.begin(), rest.end());
  std::vector<bool> satisfied(s_b, false);
  satisfied[0] = true;
  DecompositionResult out;
  auto trace = [&]() {
    std::vector<std::size_t> d;
    for (std::size_t i = 0; i < s_b; ++i) {
      if (satisfied[i]) d.push_back(i);
    }
    out.satisfied_trace.push_back(std::move(d));
  };
  auto proj_norm = [&](const Vec& v) {
    Rational m;
    for (std::size_t i = 0; i < s_b; ++i) {
      if (!satisfied[i] && v[i] > m) m = v[i];
    }
    return m;
  };
  for (std::size_t round = 0; round + 1 < s_b && !rest.empty(); ++round) {
    if (std::all_of(satisfied.begin(), satisfied.end(), [](bool s) { return s; })) break;
    std::vector<std::size_t> part;
    for (std::size_t j : rest) {
      Vec w(s_b);
      for (std::size_t i = 0; i < s_b; ++i) w[i] = unit(j, i);
      if (proj_norm(w) >= tau) {
        part = {j};
        break;
      }
    }
    if (part.empty()) {
      Vec acc(s_b);
      for (std::size_t j : rest) {
        part.push_back(j);
        for (std::size_t i = 0; i < s_b; ++i) acc[i] += unit(j, i);
        if (proj_norm(acc) >= tau) break;
      }
    }
    Vec sum(s_b);
    for (std::size_t j : part) {
      for (std::size_t i = 0; i < s_b; ++i) sum[i] += unit(j, i);
    }
    for (std::size_t i = 1; i < s_b; ++i) {
      if (!satisfied[i] && sum[i] >= tau) satisfied[i] = true;
    }
    std::vector<std::size_t> left;
    std::set_difference(rest.begin(), rest.end(), part.begin(), part.end(),
                        std::back_inserter(left));
    rest = std::move(left);
    out.parts.push_back(std::move(part));
    trace();
  }
  if (!rest.empty()) {
    out.parts.push_back(std::move(rest));
    trace();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Follower choices on the remaining large items.

struct Options {
  Rational eps{1, 2};
  std::optional<Rational> delta;  // default eps^(2 s_B + 4)
  std::size_t max_large_guesses = 20000;
  std::size_t max_lambda_guesses = 2000;  // per large guess
  bool exhaustive = false;
  std::optional<std::size_t> size_cap;
  bool check_extreme_points = true;
};

inline Rational default_delta(const Rational& eps, std::size_t s_b) {
  return pow(eps, static_cast<unsigned long>(2 * s_b + 4));
}

// 2 delta + eps (1 + 2 delta): the slack that dominant choices add to the
// non-principal follower budgets.
inline Rational augmented_slack(const Rational& eps, const Rational& delta) {
  return Rational(2) * delta + eps * (Rational(1) + Rational(2) * delta);
}

struct LargeItem {
  Rational profit;
  Vec weight;
  std::size_t id = 0;
};

struct DominantChoiceGeneral {
  std::size_t band = 0;    // 1-based profit band
  std::vector<int> v;      // residual bucket per dimension 2..s_B
  std::vector<std::size_t> items;
  Rational profit;         // P
  Vec consumed;            // b
  Vec d;                   // (1 - b[1], r_{v_2}, ..., r_{v_sB})
};

struct DominantChoicesGeneral {
  std::vector<DominantChoiceGeneral> choices;
  bool exceeds_top = false;
};

// Largest V with eps (1+eps)^V <= 1 + 2 delta.
inline int bucket_limit(const Rational& eps, const Rational& delta) {
  return static_cast<int>(grid_floor_exponent(eps, Rational(1) + eps, Rational(1) + Rational(2) * delta));
}

// Bucket of a leftover budget in [0, 1 + 2 delta]: -1 for [0, eps), else v
// with eps (1+eps)^v <= r < eps (1+eps)^(v+1).
inline int residual_bucket(const Rational& r, const Rational& eps) {
  if (r < eps) return -1;
  return static_cast<int>(grid_floor_exponent(eps, Rational(1) + eps, r));
}

inline Rational bucket_right(int v, const Rational& eps) {
  if (v < 0) return eps;
  return eps * pow(Rational(1) + eps, static_cast<unsigned long>(v + 1));
}

inline std::size_t band_count(const Rational& eps, std::size_t s_b) {
  return 1 + static_cast<std::size_t>(
                 (Rational(static_cast<long>(s_b)) / eps).ceil().get_si());
}

// Exhaustive search over subsets of at most size_cap items packable under
// (1, 1+2delta, ...); per nonempty (band, buckets) cell keep the subset of
// least first-dimension weight, ties to the lexicographically smaller set.
inline DominantChoicesGeneral compute_dominant_choices_general(const std::vector<LargeItem>& large,
                                                               const Rational& eps,
                                                               const Rational& delta,
                                                               std::size_t s_b,
                                                               std::size_t size_cap) {
  const std::size_t nb = band_count(eps, s_b);
  const Rational top = eps * Rational(static_cast<long>(nb));
  const Rational cap_hi = Rational(1) + Rational(2) * delta;
  const std::size_t m = large.size();
  struct Cell {
    Rational w1;
    Selection sel;
    Rational profit;
    Vec consumed;
  };
  std::map<std::pair<std::size_t, std::vector<int>>, Cell> cells;
  DominantChoicesGeneral out;
  Selection cur(m, false);
  Vec used(s_b);
  std::function<void(std::size_t, std::size_t, const Rational&)> dfs =
      [&](std::size_t idx, std::size_t size, const Rational& p) {
        if (idx == m) {
          const std::size_t k = static_cast<std::size_t>((p / eps).floor().get_si());
          std::vector<int> v;
          for (std::size_t i = 1; i < s_b; ++i) v.push_back(residual_bucket(cap_hi - used[i], eps));
          auto key = std::make_pair(k + 1, std::move(v));
          auto it = cells.find(key);
          if (it == cells.end() || used[0] < it->second.w1 ||
              (used[0] == it->second.w1 && lex_less(cur, it->second.sel))) {
            cells[key] = Cell{used[0], cur, p, used};
          }
          return;
        }
        dfs(idx + 1, size, p);
        if (size == size_cap) return;
        const auto& it = large[idx];
        bool fits = used[0] + it.weight[0] <= Rational(1);
        for (std::size_t i = 1; i < s_b && fits; ++i) fits = used[i] + it.weight[i] <= cap_hi;
        if (!fits) return;
        Rational p2 = p + it.profit;
        if (p2 >= top) {
          out.exceeds_top = true;
          return;
        }
        for (std::size_t i = 0; i < s_b; ++i) used[i] += it.weight[i];
        cur[idx] = true;
        dfs(idx + 1, size + 1, p2);
        cur[idx] = false;
        for (std::size_t i = 0; i < s_b; ++i) used[i] -= it.weight[i];
      };
  dfs(0, 0, Rational(0));
  for (auto& [key, cell] : cells) {
    DominantChoiceGeneral c;
    c.band = key.first;
    c.v = key.second;
    for (std::size_t i = 0; i < m; ++i) {
      if (cell.sel[i]) c.items.push_back(large[i].id);
    }
    c.profit = cell.profit;
    c.consumed = cell.consumed;
    c.d.push_back(Rational(1) - cell.consumed[0]);
    for (int v : c.v) c.d.push_back(bucket_right(v, eps));
    out.choices.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Small items seen through one choice.

enum class RatioClass { kSmall, kMedium, kBig };

struct SmallItem {
  std::size_t id = 0;
  Rational profit;
  Vec weight;
};

struct ClassifiedItem {
  std::size_t id = 0;
  Vec scaled;  // weight / d
  Rational w;  // max coordinate of scaled
  Vec shape;
  RatioClass ratio_class = RatioClass::kSmall;
  Rational rounded_ratio;  // medium items only
  std::size_t subgroup = 0;
};

struct Subgroup {
  Vec shape;
  Rational ratio;
  std::vector<std::size_t> members;  // item ids
};

struct ShapeClassification {
  std::vector<ClassifiedItem> items;
  std::vector<Subgroup> subgroups;
  std::vector<std::size_t> excluded;  // some scaled coordinate above 1
};

// Smallest eps (1+eps)^h at or above g, with everything up to eps mapped to
// eps, capped at 1.
inline Rational shape_coordinate(const Rational& g, const Rational& eps) {
  if (g <= eps) return eps;
  if (g >= Rational(1)) return Rational(1);
  long h = grid_ceil_exponent(eps, Rational(1) + eps, g);
  return min(eps * pow(Rational(1) + eps, static_cast<unsigned long>(h)), Rational(1));
}

inline ShapeClassification classify_small_items(const std::vector<SmallItem>& small, const Vec& d,
                                                const Rational& eps) {
  for (const auto& x : d) {
    if (x.sign() <= 0) throw Error(ErrorCode::kZeroResidual, "choice leaves no room in some dimension");
  }
  ShapeClassification out;
  std::map<std::pair<Vec, Rational>, std::size_t> index;
  const Rational lo_ratio = eps;
  const Rational hi_ratio = Rational(1) / eps;
  for (const auto& it : small) {
    ClassifiedItem c;
    c.id = it.id;
    bool too_big = false;
    for (std::size_t i = 0; i < d.size(); ++i) {
      c.scaled.push_back(it.weight[i] / d[i]);
      if (c.scaled.back() > Rational(1)) too_big = true;
      if (c.scaled.back() > c.w) c.w = c.scaled.back();
    }
    if (too_big) {
      out.excluded.push_back(it.id);
      continue;
    }
    if (c.w.is_zero()) {
      throw Error(ErrorCode::kZeroWeightItem, "item " + std::to_string(it.id) + " has no weight");
    }
    for (const auto& s : c.scaled) c.shape.push_back(shape_coordinate(s / c.w, eps));
    const Rational rho = it.profit / c.w;
    if (rho <= lo_ratio) {
      c.ratio_class = RatioClass::kSmall;
    } else if (rho > hi_ratio) {
      c.ratio_class = RatioClass::kBig;
    } else {
      c.ratio_class = RatioClass::kMedium;
      long k = grid_floor_exponent(eps, Rational(1) + eps, rho);
      c.rounded_ratio = eps * pow(Rational(1) + eps, static_cast<unsigned long>(k));
      index.emplace(std::make_pair(c.shape, c.rounded_ratio), 0);
    }
    out.items.push_back(std::move(c));
  }
  std::size_t next = 0;
  for (auto& [key, idx] : index) {
    idx = next++;
    out.subgroups.push_back({key.first, key.second, {}});
  }
  for (auto& c : out.items) {
    if (c.ratio_class != RatioClass::kMedium) continue;
    c.subgroup = index.at({c.shape, c.rounded_ratio});
    out.subgroups[c.subgroup].members.push_back(c.id);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Mass guesses.

// {0} u {eps^(s_B+4) (1+eps)^t < 2 s_B / eps} u {2 s_B / eps}, ascending.
inline std::vector<Rational> lambda_grid(const Rational& eps, std::size_t s_b) {
  const Rational top = Rational(2 * static_cast<long>(s_b)) / eps;
  std::vector<Rational> g{Rational(0)};
  for (Rational v = pow(eps, static_cast<unsigned long>(s_b + 4)); v < top; v *= Rational(1) + eps) {
    g.push_back(v);
  }
  g.push_back(top);
  return g;
}

struct LambdaGuess {
  std::vector<Rational> lambda;
  std::vector<Rational> lambda_bar;
};

// Odometer over (lambda, lambda_bar <= lambda) pairs per subgroup, last
// subgroup fastest.
inline GuessStream enumerate_lambda_guesses(std::size_t subgroups, const Rational& eps,
                                            std::size_t s_b, std::size_t budget,
                                            const std::function<void(const LambdaGuess&)>& visit) {
  if (budget == 0) throw Error(ErrorCode::kDimensionMismatch, "lambda budget must be positive");
  const std::vector<Rational> grid = lambda_grid(eps, s_b);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < grid.size(); ++a) {
    for (std::size_t b = 0; b <= a; ++b) pairs.push_back({a, b});
  }
  GuessStream out;
  std::vector<std::size_t> pos(subgroups, 0);
  LambdaGuess g;
  g.lambda.assign(subgroups, Rational(0));
  g.lambda_bar.assign(subgroups, Rational(0));
  for (;;) {
    if (out.emitted == budget) {
      out.truncated = true;
      return out;
    }
    for (std::size_t s = 0; s < subgroups; ++s) {
      g.lambda[s] = grid[pairs[pos[s]].first];
      g.lambda_bar[s] = grid[pairs[pos[s]].second];
    }
    ++out.emitted;
    visit(g);
    std::size_t s = subgroups;
    while (s > 0 && pos[s - 1] + 1 == pairs.size()) pos[--s] = 0;
    if (s == 0) return out;
    ++pos[s - 1];
  }
}

// ---------------------------------------------------------------------------
// The LP for one (large guess, mass guess) pair.

// How one choice sees the small items.
struct ChoiceView {
  Rational profit;                     // P_l
  std::vector<std::size_t> big;        // items the follower takes whenever open
  ShapeClassification cls;
  std::size_t first_subgroup = 0;      // offset into the global mass guess
};

struct CenLpInput {
  Vec a_prime;
  std::vector<std::size_t> small_ids;  // variable order
  std::vector<Vec> small_cost;         // per small id
  Selection fixed_zero;                // per small id
  std::vector<Rational> small_profit;  // per small id
  std::vector<ChoiceView> choices;
};

inline std::size_t total_subgroups(const CenLpInput& in) {
  std::size_t t = 0;
  for (const auto& c : in.choices) t += c.cls.subgroups.size();
  return t;
}

inline LinearProgram build_cen_lp(const CenLpInput& in, const LambdaGuess& guess,
                                  const Rational& eps, std::size_t s_b) {
  const std::size_t subgroups = total_subgroups(in);
  if (guess.lambda.size() != subgroups || guess.lambda_bar.size() != subgroups) {
    throw Error(ErrorCode::kDanglingSubgroup, "mass guess covers " +
                                                  std::to_string(guess.lambda.size()) + " of " +
                                                  std::to_string(subgroups) + " subgroups");
  }
  const std::size_t m = in.small_ids.size();
  std::map<std::size_t, std::size_t> var_of;
  LinearProgram lp;
  for (std::size_t q = 0; q < m; ++q) {
    var_of[in.small_ids[q]] = q;
    lp.add_variable("x" + std::to_string(in.small_ids[q]), Rational(0),
                    in.fixed_zero[q] ? Rational(0) : Rational(1));
  }
  const Rational floor_mass = pow(eps, static_cast<unsigned long>(s_b + 4));
  const Rational top = Rational(2 * static_cast<long>(s_b)) / eps;
  // Constant part of each objective row.
  std::vector<Rational> constant;
  Rational m_hi;
  for (const auto& c : in.choices) {
    if (c.first_subgroup + c.cls.subgroups.size() > subgroups) {
      throw Error(ErrorCode::kDanglingSubgroup, "choice refers past the mass guess");
    }
    Rational k = c.profit;
    for (std::size_t j : c.big) k += in.small_profit[var_of.at(j)];
    for (std::size_t s = 0; s < c.cls.subgroups.size(); ++s) {
      k += c.cls.subgroups[s].ratio * guess.lambda_bar[c.first_subgroup + s];
    }
    constant.push_back(k);
    m_hi = max(m_hi, k);
  }
  const std::size_t mv = lp.add_variable("M", Rational(0), m_hi);
  const std::size_t nv = m + 1;
  const std::size_t s_a = in.a_prime.size();
  for (std::size_t i = 0; i < s_a; ++i) {
    std::vector<Rational> row(nv);
    for (std::size_t q = 0; q < m; ++q) row[q] = in.small_cost[q][i];
    lp.add_constraint(std::move(row), Relation::kLeq, Rational(1) - in.a_prime[i],
                      "leader" + std::to_string(i));
  }
  for (std::size_t l = 0; l < in.choices.size(); ++l) {
    const auto& c = in.choices[l];
    std::vector<Rational> row(nv);
    for (std::size_t j : c.big) row[var_of.at(j)] = -in.small_profit[var_of.at(j)];
    row[mv] = Rational(-1);
    lp.add_constraint(std::move(row), Relation::kLeq, -constant[l],
                      "choice" + std::to_string(l + 1) + ".value");
  }
  for (std::size_t l = 0; l < in.choices.size(); ++l) {
    const auto& c = in.choices[l];
    std::map<std::size_t, const ClassifiedItem*> by_id;
    for (const auto& it : c.cls.items) by_id[it.id] = &it;
    for (std::size_t s = 0; s < c.cls.subgroups.size(); ++s) {
      const Rational& lam = guess.lambda[c.first_subgroup + s];
      std::vector<Rational> row(nv);
      Rational mass;
      for (std::size_t j : c.cls.subgroups[s].members) {
        const Rational& w = by_id.at(j)->w;
        row[var_of.at(j)] = -w;
        mass += w;
      }
      // sum w (1 - x) = mass - sum w x
      const std::string tag = "choice" + std::to_string(l + 1) + ".group" + std::to_string(s + 1);
      if (lam.is_zero()) {
        lp.add_constraint(std::move(row), Relation::kLeq, floor_mass - mass, tag + ".none");
      } else if (lam == top) {
        lp.add_constraint(std::move(row), Relation::kGeq, top - mass, tag + ".all");
      } else {
        lp.add_constraint(row, Relation::kGeq, lam - mass, tag + ".low");
        lp.add_constraint(std::move(row), Relation::kLeq, (Rational(1) + eps) * lam - mass,
                          tag + ".high");
      }
    }
  }
  std::vector<Rational> objective(nv);
  objective[mv] = Rational(1);
  lp.set_objective(std::move(objective), Sense::kMin);
  return lp;
}

inline Selection round_solution_general(const LPSolution& sol) { return ptas::round_solution(sol); }

// ---------------------------------------------------------------------------
// Driver.

inline constexpr const char* kExhaustiveClaim = "(s_B+O(ε))·OPT under exhaustive enumeration";
inline constexpr const char* kCappedClaim = "heuristic (budget-capped)";

// Sizing condition on eps: s_A + s_B / eps^(2 s_B + 1) <= 1 / eps^(2 s_B + 3).
inline bool precondition_holds(const Rational& eps, std::size_t s_a, std::size_t s_b) {
  const Rational lhs = Rational(static_cast<long>(s_a)) +
                       Rational(static_cast<long>(s_b)) / pow(eps, static_cast<unsigned long>(2 * s_b + 1));
  return lhs <= Rational(1) / pow(eps, static_cast<unsigned long>(2 * s_b + 3));
}

inline GuessSpace make_guess_space(const ScaledInstance& rounded, const Classification& cls,
                                   const Selection& must_take, const Rational& eps) {
  const std::size_t n = rounded.instance.size();
  const std::size_t s_b = rounded.instance.s_b;
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
      Vec key{it.profit};
      for (std::size_t i = 1; i < s_b; ++i) key.push_back(it.weight[i]);
      sp.group_key[j] = std::move(key);
      sp.order_weight[j] = it.weight[0];
    }
  }
  const Rational sb(static_cast<long>(s_b));
  sp.leave_cap = static_cast<std::size_t>((sb / delta).ceil().get_si()) - 1;
  const Rational keys = sb * (Rational(1) + augmented_slack(eps, delta)) / delta;
  sp.key_count = static_cast<std::size_t>(keys.ceil().get_si());
  return sp;
}

namespace detail {

// Choice views for one large guess. A choice with no room left in the
// first dimension only sees small items that weigh nothing there.
inline std::vector<ChoiceView> choice_views(const DominantChoicesGeneral& theta,
                                            const std::vector<SmallItem>& small,
                                            const Rational& eps) {
  std::vector<ChoiceView> views;
  std::size_t offset = 0;
  for (const auto& c : theta.choices) {
    ChoiceView v;
    v.profit = c.profit;
    std::vector<std::size_t> dims;
    for (std::size_t i = 0; i < c.d.size(); ++i) {
      if (c.d[i].sign() > 0) dims.push_back(i);
    }
    Vec d;
    for (std::size_t i : dims) d.push_back(c.d[i]);
    std::vector<SmallItem> seen;
    for (const auto& it : small) {
      bool blocked = false;
      bool weightless = true;
      for (std::size_t i = 0; i < c.d.size(); ++i) {
        if (c.d[i].sign() == 0 && it.weight[i].sign() > 0) blocked = true;
        if (it.weight[i].sign() > 0) weightless = false;
      }
      if (blocked) continue;
      if (weightless) {
        v.big.push_back(it.id);
        continue;
      }
      SmallItem r{it.id, it.profit, {}};
      for (std::size_t i : dims) r.weight.push_back(it.weight[i]);
      seen.push_back(std::move(r));
    }
    if (!dims.empty()) v.cls = classify_small_items(seen, d, eps);
    for (const auto& ci : v.cls.items) {
      if (ci.ratio_class == RatioClass::kBig) v.big.push_back(ci.id);
    }
    std::sort(v.big.begin(), v.big.end());
    v.first_subgroup = offset;
    offset += v.cls.subgroups.size();
    views.push_back(std::move(v));
  }
  return views;
}

}  // namespace detail

inline void run_scale(const Instance& inst, const Rational& scale, const Options& opt,
                      const Rational& delta, const Selection& packable,
                      ptas::detail::CandidatePool& pool, SolveStats& stats, bool& truncated,
                      bool& below_optimum) {
  const std::size_t n = inst.size();
  const Rational& eps = opt.eps;
  below_optimum = false;
  Selection forced(n, false);
  for (std::size_t j = 0; j < n; ++j) forced[j] = packable[j] && inst.items[j].profit > scale;
  if (!inst.leader_feasible(forced)) {
    below_optimum = true;
    return;
  }
  ScaledInstance rounded = round_profits(normalize(inst, scale), delta);
  if (rounded.instance.s_b >= 2) rounded = round_weights_general(rounded, delta);
  const std::size_t s_b = rounded.instance.s_b;
  const Classification cls = classify(rounded, delta, WeightMode::kInfinityNorm);
  const GuessSpace space = make_guess_space(rounded, cls, forced, eps);
  const std::size_t sbg = inst.s_b;
  const std::size_t cap = opt.size_cap.value_or(static_cast<std::size_t>(
      (Rational(2 * static_cast<long>(sbg)) / delta).ceil().get_si()));
  const bool can_prune =
      Rational(static_cast<long>(sbg)) * (Rational(1) + augmented_slack(eps, delta)) * delta < eps;
  const std::size_t max_large = opt.exhaustive ? kUnlimited : opt.max_large_guesses;
  const std::size_t max_lambda = opt.exhaustive ? kUnlimited : opt.max_lambda_guesses;

  std::vector<SmallItem> small;
  CenLpInput base;
  for (std::size_t j = 0; j < n; ++j) {
    if (!packable[j] || cls.is_large(j)) continue;
    const auto& it = rounded.instance.items[j];
    small.push_back({j, it.profit, it.weight});
    base.small_ids.push_back(j);
    base.small_cost.push_back(it.cost);
    base.fixed_zero.push_back(rounded.leader_forbidden[j]);
    base.small_profit.push_back(it.profit);
  }
  std::vector<std::size_t> x_vars(base.small_ids.size());
  for (std::size_t q = 0; q < x_vars.size(); ++q) x_vars[q] = q;

  GuessStream stream = enumerate_guesses(space, max_large, [&](const LargeGuess& g) {
    ++stats.large_guesses;
    std::vector<LargeItem> open;
    for (std::size_t j = 0; j < n; ++j) {
      if (packable[j] && cls.is_large(j) && !g.takes[j]) {
        open.push_back({rounded.instance.items[j].profit, rounded.instance.items[j].weight, j});
      }
    }
    const DominantChoicesGeneral theta = compute_dominant_choices_general(open, eps, delta, s_b, cap);
    if (theta.exceeds_top && can_prune) {
      ++stats.pruned_guesses;
      return;
    }
    CenLpInput in = base;
    in.a_prime = g.a_prime;
    in.choices = detail::choice_views(theta, small, eps);
    GuessStream lam = enumerate_lambda_guesses(
        total_subgroups(in), eps, inst.s_b, max_lambda, [&](const LambdaGuess& lg) {
          ++stats.lambda_guesses;
          const LinearProgram lp = build_cen_lp(in, lg, eps, inst.s_b);
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
          const Selection r = round_solution_general(sol);
          Selection x = g.takes;
          for (std::size_t q = 0; q < in.small_ids.size(); ++q) {
            if (r[q]) x[in.small_ids[q]] = true;
          }
          if (!inst.leader_feasible(x)) {
            ++stats.leader_violations;
            return;
          }
          pool.offer(x);
        });
    truncated = truncated || lam.truncated;
  });
  truncated = truncated || stream.truncated;
}

inline BilevelResult solve(const Instance& inst, const Options& opt = {}) {
  inst.validate();
  if (inst.s_b < 2) throw Error(ErrorCode::kWrongDimension, "this algorithm needs s_B >= 2");
  ptas::check_eps(opt.eps);
  const Rational delta = opt.delta.value_or(default_delta(opt.eps, inst.s_b));
  check_delta(delta);
  const std::size_t n = inst.size();
  ptas::detail::CandidatePool pool(inst);
  SolveStats stats;
  stats.precondition_ok = precondition_holds(opt.eps, inst.s_a, inst.s_b);
  bool truncated = false;
  pool.offer(Selection(n, false));
  const Selection packable = ptas::detail::packable(inst);
  Rational total, p_min;
  for (std::size_t j = 0; j < n; ++j) {
    const Rational& p = inst.items[j].profit;
    if (!packable[j] || p.is_zero()) continue;
    total += p;
    if (p_min.is_zero() || p < p_min) p_min = p;
  }
  if (total.sign() > 0) {
    for (const Rational& s : ptas::detail::scale_grid(total, p_min, opt.eps)) {
      if (pool.best_value().is_zero()) break;
      if (s > (Rational(1) + opt.eps) * pool.best_value()) continue;
      ++stats.scales;
      bool below = false;
      run_scale(inst, s, opt, delta, packable, pool, stats, truncated, below);
      if (below) break;
    }
  }
  stats.candidates = pool.evaluated();
  BilevelResult r = pool.result(truncated ? kCappedClaim : kExhaustiveClaim);
  r.truncated = truncated;
  r.stats = stats;
  return r;
}

}  // namespace interdict::general

#endif  // INTERDICT_GENERAL_HPP_
