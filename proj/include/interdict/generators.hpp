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

#ifndef INTERDICT_GENERATORS_HPP_
#define INTERDICT_GENERATORS_HPP_

#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "interdict/instance.hpp"

namespace interdict {

// Entries are numerators[k] / denominator.
struct ValueGrid {
  std::vector<long> numerators = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  long denominator = 10;
};

namespace detail {

inline Rational draw(const ValueGrid& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, g.numerators.size() - 1);
  return Rational(g.numerators[pick(rng)], g.denominator);
}

// fraction_tenths/10 of the column total, rounded up to the grid step.
inline Rational budget_share(const Rational& total, long fraction_tenths, long denominator) {
  Rational v = total * Rational(fraction_tenths, 10) * Rational(denominator);
  return Rational(v.ceil(), mpz_class(denominator));
}

}  // namespace detail

// Deterministic for fixed arguments. Leader budgets take 20-40% of the
// total cost per coordinate, follower budgets 30-60% of the total weight.
inline Instance gen_random(std::size_t n, std::size_t s_a, std::size_t s_b,
                           const ValueGrid& grid, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Instance inst;
  inst.s_a = s_a;
  inst.s_b = s_b;
  for (std::size_t j = 0; j < n; ++j) {
    Item it;
    it.id = j;
    it.profit = detail::draw(grid, rng);
    for (std::size_t i = 0; i < s_a; ++i) it.cost.push_back(detail::draw(grid, rng));
    for (std::size_t i = 0; i < s_b; ++i) it.weight.push_back(detail::draw(grid, rng));
    inst.items.push_back(std::move(it));
  }
  std::uniform_int_distribution<long> lead(2, 4), foll(3, 6);
  for (std::size_t i = 0; i < s_a; ++i) {
    Rational total;
    for (const auto& it : inst.items) total += it.cost[i];
    inst.leader_budget.push_back(detail::budget_share(total, lead(rng), grid.denominator));
  }
  for (std::size_t i = 0; i < s_b; ++i) {
    Rational total;
    for (const auto& it : inst.items) total += it.weight[i];
    inst.follower_budget.push_back(detail::budget_share(total, foll(rng), grid.denominator));
  }
  return inst;
}

struct HittingSetInstance {
  std::size_t n_elements = 0;
  std::vector<std::array<std::size_t, 3>> sets;  // 1-based elements
  std::size_t k = 1;

  void validate() const {
    if (k == 0) throw Error(ErrorCode::kInvalidHittingSet, "k must be positive");
    std::vector<bool> covered(n_elements + 1, false);
    for (const auto& s : sets) {
      for (std::size_t e : s) {
        if (e < 1 || e > n_elements) {
          throw Error(ErrorCode::kInvalidHittingSet, "element out of range");
        }
        covered[e] = true;
      }
      if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2]) {
        throw Error(ErrorCode::kInvalidHittingSet, "set elements must be distinct");
      }
    }
    for (std::size_t e = 1; e <= n_elements; ++e) {
      if (!covered[e]) {
        throw Error(ErrorCode::kInvalidHittingSet,
                    "element " + std::to_string(e) + " is in no set");
      }
    }
  }
};

// Size of a minimum hitting set, by enumeration over element subsets.
inline std::size_t min_hitting_set_size(const HittingSetInstance& hs) {
  hs.validate();
  const std::size_t n = hs.n_elements;
  std::size_t best = n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::size_t size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size >= best) continue;
    bool hits = true;
    for (const auto& s : hs.sets) {
      bool h = false;
      for (std::size_t e : s) h = h || ((mask >> (e - 1)) & 1);
      if (!h) {
        hits = false;
        break;
      }
    }
    if (hits) best = size;
  }
  return best;
}

// IPC instance whose optimum is at most 3 iff hs has a hitting set of size
// at most k, and 4 otherwise. Items: one per element, then one per set.
inline Instance gen_3hs_reduction(const HittingSetInstance& hs) {
  hs.validate();
  const std::size_t n = hs.n_elements;
  std::vector<mpz_class> pow10(n + 1);
  pow10[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) pow10[i] = pow10[i - 1] * 10;
  mpz_class e_sum = 0;
  for (std::size_t i = 1; i <= n; ++i) e_sum += pow10[i];
  const mpz_class E = 10 * e_sum;
  const mpz_class Q = 10 * E;
  auto rat = [](const mpz_class& z) { return Rational(z, mpz_class(1)); };

  Instance inst;
  inst.s_a = 1;
  inst.s_b = 2;
  inst.leader_budget = {Rational(static_cast<long>(hs.k))};
  inst.follower_budget = {rat(E), rat(4 * Q - E)};
  for (std::size_t i = 1; i <= n; ++i) {
    Item it;
    it.id = inst.items.size();
    it.profit = 1;
    it.cost = {Rational(1)};
    it.weight = {rat(pow10[i]), rat(Q - pow10[i])};
    inst.items.push_back(std::move(it));
  }
  for (const auto& s : hs.sets) {
    const mpz_class w = pow10[s[0]] + pow10[s[1]] + pow10[s[2]];
    Item it;
    it.id = inst.items.size();
    it.profit = 1;
    it.cost = {Rational(static_cast<long>(hs.k + 1))};
    it.weight = {rat(E - w), rat(Q - E + w)};
    inst.items.push_back(std::move(it));
  }
  return inst;
}

}  // namespace interdict

#endif  // INTERDICT_GENERATORS_HPP_
