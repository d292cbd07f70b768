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

// Enumeration of leader decisions on large items, shared by the s_B = 1
// scheme and the general one.

#ifndef INTERDICT_GUESSING_HPP_
#define INTERDICT_GUESSING_HPP_

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <vector>

#include "interdict/instance.hpp"

namespace interdict {

// How a large item was decided inside one guess.
enum class GuessRule {
  kNotLarge,     // small item, left to the LP
  kIgnored,      // the follower can never pack it
  kLeftOpen,     // large profit, small weight: enumerated take/leave
  kForcedSkip,   // small profit, large weight: never taken
  kKeyItem,      // large weight, profit above delta^2: key-item rule
  kForcedTake,   // profit above the current scale
};

inline const char* rule_name(GuessRule r) {
  switch (r) {
    case GuessRule::kNotLarge: return "not-large";
    case GuessRule::kIgnored: return "ignored";
    case GuessRule::kLeftOpen: return "left-open";
    case GuessRule::kForcedSkip: return "forced-skip";
    case GuessRule::kKeyItem: return "key-item";
    case GuessRule::kForcedTake: return "forced-take";
  }
  return "?";
}

enum class LargeKind { kNone, kProfitOnly, kWeightOnly, kWeightAndProfit };

struct LargeGuess {
  Selection takes;              // leader takes, over all items
  std::vector<GuessRule> rule;  // per item
  Vec a_prime;                  // leader cost of the takes
};

// Everything the enumerator needs to know about the items.
struct GuessSpace {
  std::vector<LargeKind> kind;
  std::vector<Vec> group_key;          // kWeightAndProfit items only
  std::vector<Rational> order_weight;  // key-item order inside a group
  Selection must_take;
  Selection cannot_take;
  Selection ignored;
  std::vector<Vec> cost;
  Vec budget;
  std::size_t leave_cap = 0;  // un-interdicted kProfitOnly items allowed
  std::size_t key_count = 1;  // key items per group
};

struct GuessStream {
  std::size_t emitted = 0;
  bool truncated = false;
};

namespace detail {

struct GroupOption {
  std::vector<std::size_t> takes;  // item ids
  Vec cost;
};

// Leader choices inside one group sorted by (order weight, id): for every
// key_count-subset of keys, take the non-keys lying before the last key;
// plus every way to leave fewer than key_count items open.
inline std::vector<GroupOption> group_options(const std::vector<std::size_t>& group,
                                              const GuessSpace& sp) {
  const std::size_t g = group.size();
  const std::size_t k = sp.key_count;
  const std::size_t dims = sp.budget.size();
  std::vector<std::vector<bool>> masks;  // true = take
  if (g >= k) {
    std::vector<std::size_t> keys(k);
    for (std::size_t i = 0; i < k; ++i) keys[i] = i;
    for (;;) {
      std::vector<bool> m(g, false);
      std::vector<bool> is_key(g, false);
      for (std::size_t c : keys) is_key[c] = true;
      for (std::size_t i = 0; i < keys.back(); ++i) m[i] = !is_key[i];
      masks.push_back(std::move(m));
      std::size_t pos = k;
      while (pos > 0 && keys[pos - 1] == g - k + pos - 1) --pos;
      if (pos == 0) break;
      ++keys[pos - 1];
      for (std::size_t i = pos; i < k; ++i) keys[i] = keys[i - 1] + 1;
    }
  }
  // Left-open sets of size < k, by size then lexicographically.
  std::function<void(std::size_t, std::size_t, std::vector<bool>&)> open =
      [&](std::size_t start, std::size_t left, std::vector<bool>& m) {
        if (left == 0) {
          masks.push_back(m);
          return;
        }
        for (std::size_t i = start; i + left <= g; ++i) {
          m[i] = false;
          open(i + 1, left - 1, m);
          m[i] = true;
        }
      };
  for (std::size_t size = 0; size < k && size <= g; ++size) {
    std::vector<bool> m(g, true);
    open(0, size, m);
  }
  std::vector<GroupOption> out;
  for (const auto& m : masks) {
    GroupOption o;
    o.cost.assign(dims, Rational(0));
    bool ok = true;
    for (std::size_t i = 0; i < g && ok; ++i) {
      if (!m[i]) continue;
      const std::size_t j = group[i];
      if (sp.cannot_take[j]) ok = false;
      o.takes.push_back(j);
      for (std::size_t d = 0; d < dims; ++d) o.cost[d] += sp.cost[j][d];
    }
    if (ok && leq(o.cost, sp.budget)) out.push_back(std::move(o));
  }
  return out;
}

class GuessWalker {
 public:
  GuessWalker(const GuessSpace& sp, std::size_t max_guesses,
              const std::function<void(const LargeGuess&)>& visit)
      : sp_(sp), max_(max_guesses), visit_(visit) {}

  GuessStream run() {
    const std::size_t n = sp_.kind.size();
    const std::size_t dims = sp_.budget.size();
    g_.takes.assign(n, false);
    g_.rule.assign(n, GuessRule::kNotLarge);
    g_.a_prime.assign(dims, Rational(0));
    std::map<Vec, std::vector<std::size_t>> groups;
    for (std::size_t j = 0; j < n; ++j) {
      if (sp_.ignored[j]) {
        g_.rule[j] = GuessRule::kIgnored;
        continue;
      }
      if (sp_.must_take[j]) {
        g_.rule[j] = GuessRule::kForcedTake;
        g_.takes[j] = true;
        for (std::size_t d = 0; d < dims; ++d) g_.a_prime[d] += sp_.cost[j][d];
        continue;
      }
      switch (sp_.kind[j]) {
        case LargeKind::kNone: break;
        case LargeKind::kWeightOnly: g_.rule[j] = GuessRule::kForcedSkip; break;
        case LargeKind::kProfitOnly:
          g_.rule[j] = GuessRule::kLeftOpen;
          if (sp_.cannot_take[j]) {
            ++left_;
          } else {
            open_.push_back(j);
          }
          break;
        case LargeKind::kWeightAndProfit:
          g_.rule[j] = GuessRule::kKeyItem;
          groups[sp_.group_key[j]].push_back(j);
          break;
      }
    }
    if (!leq(g_.a_prime, sp_.budget) || left_ > sp_.leave_cap) return out_;
    for (auto& [key, members] : groups) {
      std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
        if (sp_.order_weight[a] != sp_.order_weight[b]) {
          return sp_.order_weight[a] < sp_.order_weight[b];
        }
        return a < b;
      });
      options_.push_back(group_options(members, sp_));
    }
    walk_open(0);
    return out_;
  }

 private:
  bool fits(const Vec& extra) const {
    for (std::size_t d = 0; d < extra.size(); ++d) {
      if (g_.a_prime[d] + extra[d] > sp_.budget[d]) return false;
    }
    return true;
  }

  void add(const Vec& c, int sign) {
    for (std::size_t d = 0; d < c.size(); ++d) {
      if (sign > 0) {
        g_.a_prime[d] += c[d];
      } else {
        g_.a_prime[d] -= c[d];
      }
    }
  }

  // Take/leave over the open items, leave-first.
  void walk_open(std::size_t idx) {
    if (out_.truncated) return;
    if (idx == open_.size()) {
      walk_groups(0);
      return;
    }
    const std::size_t j = open_[idx];
    if (left_ < sp_.leave_cap) {
      ++left_;
      walk_open(idx + 1);
      --left_;
    }
    if (fits(sp_.cost[j])) {
      g_.takes[j] = true;
      add(sp_.cost[j], 1);
      walk_open(idx + 1);
      add(sp_.cost[j], -1);
      g_.takes[j] = false;
    }
  }

  void walk_groups(std::size_t gi) {
    if (out_.truncated) return;
    if (gi == options_.size()) {
      if (out_.emitted >= max_) {
        out_.truncated = true;
        return;
      }
      ++out_.emitted;
      visit_(g_);
      return;
    }
    for (const auto& o : options_[gi]) {
      if (!fits(o.cost)) continue;
      for (std::size_t j : o.takes) g_.takes[j] = true;
      add(o.cost, 1);
      walk_groups(gi + 1);
      add(o.cost, -1);
      for (std::size_t j : o.takes) g_.takes[j] = false;
      if (out_.truncated) return;
    }
  }

  const GuessSpace& sp_;
  std::size_t max_;
  const std::function<void(const LargeGuess&)>& visit_;
  LargeGuess g_;
  std::vector<std::size_t> open_;
  std::size_t left_ = 0;
  std::vector<std::vector<GroupOption>> options_;
  GuessStream out_;
};

}  // namespace detail

// Streams every leader-feasible guess in a fixed order. Stops after
// max_guesses emissions and flags truncation if more would follow.
inline GuessStream enumerate_guesses(const GuessSpace& space, std::size_t max_guesses,
                                     const std::function<void(const LargeGuess&)>& visit) {
  if (space.key_count == 0) {
    throw Error(ErrorCode::kDimensionMismatch, "key_count must be positive");
  }
  detail::GuessWalker w(space, max_guesses, visit);
  return w.run();
}

inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

}  // namespace interdict

#endif  // INTERDICT_GUESSING_HPP_
