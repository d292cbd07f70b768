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

#ifndef INTERDICT_INSTANCE_HPP_
#define INTERDICT_INSTANCE_HPP_

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "interdict/errors.hpp"
#include "interdict/rational.hpp"

namespace interdict {

using Vec = std::vector<Rational>;
// 0/1 selection vector, one entry per item.
using Selection = std::vector<bool>;

struct Item {
  Rational profit;
  Vec cost;    // s_A leader cost coordinates
  Vec weight;  // s_B follower weight coordinates
  std::size_t id = 0;
};

struct Instance {
  std::size_t s_a = 1;
  std::size_t s_b = 1;
  Vec leader_budget;
  Vec follower_budget;
  std::vector<Item> items;

  std::size_t size() const { return items.size(); }

  // Throws kDimensionMismatch / kNegativeEntry on malformed data.
  void validate() const {
    if (s_a == 0 || s_b == 0) {
      throw Error(ErrorCode::kDimensionMismatch, "s_a and s_b must be positive");
    }
    if (leader_budget.size() != s_a || follower_budget.size() != s_b) {
      throw Error(ErrorCode::kDimensionMismatch, "budget length");
    }
    for (const auto& v : leader_budget) {
      if (v.sign() < 0) throw Error(ErrorCode::kNegativeEntry, "leader budget");
    }
    for (const auto& v : follower_budget) {
      if (v.sign() < 0) throw Error(ErrorCode::kNegativeEntry, "follower budget");
    }
    for (const auto& it : items) {
      if (it.cost.size() != s_a || it.weight.size() != s_b) {
        throw Error(ErrorCode::kDimensionMismatch,
                    "item " + std::to_string(it.id) + " vector length");
      }
      if (it.profit.sign() < 0) {
        throw Error(ErrorCode::kNegativeEntry, "profit of item " + std::to_string(it.id));
      }
      for (const auto& v : it.cost) {
        if (v.sign() < 0) throw Error(ErrorCode::kNegativeEntry, "cost");
      }
      for (const auto& v : it.weight) {
        if (v.sign() < 0) throw Error(ErrorCode::kNegativeEntry, "weight");
      }
    }
  }

  Rational total_profit() const {
    Rational s;
    for (const auto& it : items) s += it.profit;
    return s;
  }

  Vec leader_cost(const Selection& x) const {
    Vec c(s_a);
    for (std::size_t j = 0; j < items.size(); ++j) {
      if (!x[j]) continue;
      for (std::size_t i = 0; i < s_a; ++i) c[i] += items[j].cost[i];
    }
    return c;
  }

  Vec follower_weight(const Selection& y) const {
    Vec w(s_b);
    for (std::size_t j = 0; j < items.size(); ++j) {
      if (!y[j]) continue;
      for (std::size_t i = 0; i < s_b; ++i) w[i] += items[j].weight[i];
    }
    return w;
  }

  Rational profit_of(const Selection& y) const {
    Rational p;
    for (std::size_t j = 0; j < items.size(); ++j) {
      if (y[j]) p += items[j].profit;
    }
    return p;
  }

  // A·x <= multiplier·a.
  bool leader_feasible(const Selection& x, const Rational& multiplier = Rational(1)) const {
    Vec c = leader_cost(x);
    for (std::size_t i = 0; i < s_a; ++i) {
      if (c[i] > multiplier * leader_budget[i]) return false;
    }
    return true;
  }
};

inline bool leq(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

// Lexicographic order on 0/1 vectors with 0 < 1.
inline bool lex_less(const Selection& a, const Selection& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Unit-budget view of an instance. Items keep their positions, so
// original_index[j] == j unless a caller builds a sub-instance.
struct ScaledInstance {
  Instance instance;
  Rational profit_scale{1};  // original profit = scaled profit * profit_scale
  std::vector<std::size_t> original_index;
  std::vector<bool> leader_forbidden;
  std::vector<bool> follower_infeasible;
  std::vector<std::size_t> leader_dims;    // retained original leader coordinates
  std::vector<std::size_t> follower_dims;  // retained original follower coordinates
};

namespace detail {

// Drops zero-budget coordinates. Items with positive entry in a dropped
// coordinate get flagged. Keeps one all-zero coordinate when every
// coordinate is dropped so that dimensions stay positive.
inline void drop_zero_dims(const Vec& budget, std::vector<Vec*> entries,
                           std::vector<bool>& flag, Vec& new_budget,
                           std::vector<std::size_t>& kept) {
  kept.clear();
  for (std::size_t i = 0; i < budget.size(); ++i) {
    if (budget[i].sign() > 0) {
      kept.push_back(i);
      continue;
    }
    for (std::size_t j = 0; j < entries.size(); ++j) {
      if ((*entries[j])[i].sign() > 0) flag[j] = true;
    }
  }
  for (auto* e : entries) {
    Vec scaled;
    if (kept.empty()) {
      scaled.assign(1, Rational(0));
    } else {
      for (std::size_t i : kept) scaled.push_back((*e)[i] / budget[i]);
    }
    *e = std::move(scaled);
  }
  new_budget.assign(kept.empty() ? 1 : kept.size(), Rational(1));
}

}  // namespace detail

// Scales every budget coordinate to 1 and divides profits by profit_unit.
inline ScaledInstance normalize(const Instance& in,
                                const Rational& profit_unit = Rational(1)) {
  if (in.items.empty()) throw Error(ErrorCode::kEmptyInstance, "normalize needs items");
  in.validate();
  if (profit_unit.sign() <= 0) {
    throw Error(ErrorCode::kNegativeEntry, "profit unit must be positive");
  }
  ScaledInstance out;
  out.profit_scale = profit_unit;
  out.instance = in;
  const std::size_t n = in.items.size();
  out.leader_forbidden.assign(n, false);
  out.follower_infeasible.assign(n, false);
  out.original_index.resize(n);
  std::vector<Vec*> costs, weights;
  for (std::size_t j = 0; j < n; ++j) {
    out.original_index[j] = j;
    costs.push_back(&out.instance.items[j].cost);
    weights.push_back(&out.instance.items[j].weight);
    out.instance.items[j].profit /= profit_unit;
  }
  detail::drop_zero_dims(in.leader_budget, costs, out.leader_forbidden,
                         out.instance.leader_budget, out.leader_dims);
  detail::drop_zero_dims(in.follower_budget, weights, out.follower_infeasible,
                         out.instance.follower_budget, out.follower_dims);
  out.instance.s_a = out.instance.leader_budget.size();
  out.instance.s_b = out.instance.follower_budget.size();
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& c : out.instance.items[j].cost) {
      if (c > Rational(1)) out.leader_forbidden[j] = true;
    }
    for (const auto& w : out.instance.items[j].weight) {
      if (w > Rational(1)) out.follower_infeasible[j] = true;
    }
  }
  return out;
}

// Largest delta^2 (1+delta)^h not above p, or p itself when p <= delta^2.
inline Rational round_profit(const Rational& p, const Rational& delta) {
  Rational base = delta * delta;
  if (p <= base) return p;
  long h = grid_floor_exponent(base, Rational(1) + delta, p);
  return base * pow(Rational(1) + delta, static_cast<unsigned long>(h));
}

inline void check_delta(const Rational& delta) {
  if (delta.sign() <= 0 || delta >= Rational(1)) {
    throw Error(ErrorCode::kDeltaOutOfRange, "delta must lie in (0,1), got " + delta.str());
  }
}

inline ScaledInstance round_profits(const ScaledInstance& in, const Rational& delta) {
  check_delta(delta);
  ScaledInstance out = in;
  for (auto& it : out.instance.items) it.profit = round_profit(it.profit, delta);
  return out;
}

inline Rational inf_norm(const Vec& v) {
  Rational m;
  for (const auto& x : v) {
    if (x > m) m = x;
  }
  return m;
}

// Coordinates 2..s_B of large-weight items move up onto the grid
// (delta^2/s_B)(1+delta)^h; the first coordinate is kept.
inline ScaledInstance round_weights_general(const ScaledInstance& in, const Rational& delta) {
  check_delta(delta);
  const std::size_t s_b = in.instance.s_b;
  if (s_b < 2) throw Error(ErrorCode::kDimensionTooSmall, "round_weights_general needs s_B >= 2");
  ScaledInstance out = in;
  Rational base = delta * delta / Rational(static_cast<long>(s_b));
  Rational ratio = Rational(1) + delta;
  for (auto& it : out.instance.items) {
    if (inf_norm(it.weight) <= delta) continue;
    for (std::size_t i = 1; i < s_b; ++i) {
      long h = grid_ceil_exponent(base, ratio, it.weight[i]);
      it.weight[i] = base * pow(ratio, static_cast<unsigned long>(h));
    }
  }
  return out;
}

enum class ProfitClass { kSmall, kMedium, kLarge };
enum class WeightClass { kSmall, kLarge };
enum class WeightMode { kScalar, kInfinityNorm };

struct Classification {
  Rational delta;
  std::vector<ProfitClass> profit;
  std::vector<WeightClass> weight;

  bool is_large(std::size_t j) const {
    return profit[j] == ProfitClass::kLarge || weight[j] == WeightClass::kLarge;
  }
};

inline Classification classify(const ScaledInstance& in, const Rational& delta, WeightMode mode) {
  if (mode == WeightMode::kScalar && in.instance.s_b != 1) {
    throw Error(ErrorCode::kModeMismatch, "scalar mode requires s_B = 1");
  }
  Classification c;
  c.delta = delta;
  Rational delta2 = delta * delta;
  for (const auto& it : in.instance.items) {
    if (it.profit > delta) {
      c.profit.push_back(ProfitClass::kLarge);
    } else if (it.profit > delta2) {
      c.profit.push_back(ProfitClass::kMedium);
    } else {
      c.profit.push_back(ProfitClass::kSmall);
    }
    const Rational w = mode == WeightMode::kScalar ? it.weight[0] : inf_norm(it.weight);
    c.weight.push_back(w > delta ? WeightClass::kLarge : WeightClass::kSmall);
  }
  return c;
}

}  // namespace interdict

#endif  // INTERDICT_INSTANCE_HPP_
