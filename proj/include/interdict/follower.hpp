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

#ifndef INTERDICT_FOLLOWER_HPP_
#define INTERDICT_FOLLOWER_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <optional>
#include <variant>
#include <vector>

#include "interdict/instance.hpp"

namespace interdict {

struct FollowerSolution {
  Selection selected;
  Rational value;
  Vec consumed;
};

namespace detail {

// Arithmetic shims so one branch-and-bound serves int64 and Rational data.
inline std::int64_t frac_part(std::int64_t p, std::int64_t rem, std::int64_t w) {
  // floor(p * rem / w); achievable values are integral so flooring is safe.
  return static_cast<std::int64_t>(static_cast<__int128>(p) * rem / w);
}
inline Rational frac_part(const Rational& p, const Rational& rem, const Rational& w) {
  return p * rem / w;
}
inline bool ratio_greater(std::int64_t pa, std::int64_t wa, std::int64_t pb, std::int64_t wb) {
  return static_cast<__int128>(pa) * wb > static_cast<__int128>(pb) * wa;
}
inline bool ratio_greater(const Rational& pa, const Rational& wa, const Rational& pb,
                          const Rational& wb) {
  return pa * wb > pb * wa;
}
inline bool is_zero(std::int64_t v) { return v == 0; }
inline bool is_zero(const Rational& v) { return v.is_zero(); }

// Depth-first branch and bound over items in index order, exclude-branch
// first, so leaves are met in lexicographic order and the first leaf of
// maximum value is the lexicographically smallest optimum.
template <class Num>
class BranchAndBound {
 public:
  BranchAndBound(std::vector<Num> profit, std::vector<std::vector<Num>> weight,
                 std::vector<Num> cap)
      : n_(profit.size()),
        dims_(cap.size()),
        p_(std::move(profit)),
        w_(std::move(weight)),
        cap_(std::move(cap)) {
    order_.resize(dims_);
    for (std::size_t d = 0; d < dims_; ++d) {
      auto& ord = order_[d];
      ord.resize(n_);
      std::iota(ord.begin(), ord.end(), std::size_t{0});
      std::stable_sort(ord.begin(), ord.end(), [&](std::size_t a, std::size_t b) {
        return ratio_greater(p_[a], w_[a][d], p_[b], w_[b][d]);
      });
    }
  }

  std::pair<Selection, Num> run(const Selection& available) {
    avail_ = available;
    for (std::size_t j = 0; j < n_; ++j) {
      if (!avail_[j]) continue;
      for (std::size_t d = 0; d < dims_; ++d) {
        if (w_[j][d] > cap_[d]) avail_[j] = false;
      }
    }
    rem_ = cap_;
    cur_.assign(n_, false);
    best_set_.assign(n_, false);
    found_ = false;
    cur_value_ = Num(0);
    best_ = greedy_value();
    dfs(0);
    return {best_set_, best_};
  }

 private:
  Num greedy_value() const {
    std::vector<Num> rem = cap_;
    Num v(0);
    for (std::size_t j : order_[0]) {
      if (!avail_[j]) continue;
      bool fits = true;
      for (std::size_t d = 0; d < dims_; ++d) fits = fits && w_[j][d] <= rem[d];
      if (!fits) continue;
      for (std::size_t d = 0; d < dims_; ++d) rem[d] -= w_[j][d];
      v += p_[j];
    }
    return v;
  }

  bool fits_now(std::size_t j) const {
    for (std::size_t d = 0; d < dims_; ++d) {
      if (w_[j][d] > rem_[d]) return false;
    }
    return true;
  }

  // Minimum over dimensions of the fractional single-constraint bound on
  // items idx..n-1 that still fit.
  Num bound(std::size_t idx) const {
    Num best_bound(0);
    bool first = true;
    for (std::size_t d = 0; d < dims_; ++d) {
      Num room = rem_[d];
      Num total(0);
      for (std::size_t j : order_[d]) {
        if (j < idx || !avail_[j] || !fits_now(j)) continue;
        if (w_[j][d] <= room) {
          room -= w_[j][d];
          total += p_[j];
        } else {
          total += frac_part(p_[j], room, w_[j][d]);
          break;
        }
      }
      if (first || total < best_bound) best_bound = total;
      first = false;
    }
    return best_bound;
  }

  void dfs(std::size_t idx) {
    if (idx == n_) {
      if (cur_value_ > best_ || (!found_ && cur_value_ == best_)) {
        best_ = cur_value_;
        best_set_ = cur_;
        found_ = true;
      }
      return;
    }
    Num ub = cur_value_ + bound(idx);
    if (ub < best_ || (found_ && ub <= best_)) return;
    dfs(idx + 1);
    if (avail_[idx] && fits_now(idx)) {
      cur_[idx] = true;
      cur_value_ += p_[idx];
      for (std::size_t d = 0; d < dims_; ++d) rem_[d] -= w_[idx][d];
      dfs(idx + 1);
      for (std::size_t d = 0; d < dims_; ++d) rem_[d] += w_[idx][d];
      cur_value_ -= p_[idx];
      cur_[idx] = false;
    }
  }

  std::size_t n_, dims_;
  std::vector<Num> p_;
  std::vector<std::vector<Num>> w_;
  std::vector<Num> cap_;
  std::vector<std::vector<std::size_t>> order_;
  Selection avail_, cur_, best_set_;
  std::vector<Num> rem_;
  Num cur_value_{0}, best_{0};
  bool found_ = false;
};

// Multiplies a rational column by the lcm of its denominators. Returns
// false when some scaled value or the column total leaves int64 range.
inline bool to_integers(const std::vector<const Rational*>& col, std::vector<std::int64_t>& out) {
  mpz_class l = 1;
  for (const auto* r : col) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r->mpq().get_den_mpz_t());
  const mpz_class limit = mpz_class(1) << 61;
  mpz_class total = 0;
  out.clear();
  for (const auto* r : col) {
    mpz_class v = r->mpq().get_num() * (l / r->mpq().get_den());
    total += v;
    if (total >= limit || !v.fits_slong_p()) return false;
    out.push_back(v.get_si());
  }
  return true;
}

}  // namespace detail

// Exact follower solver for fixed profits, weights and budget; solve() may
// be called repeatedly with different availability masks.
class KnapsackSolver {
 public:
  KnapsackSolver(const Vec& profit, const std::vector<Vec>& weight, const Vec& budget)
      : n_(profit.size()), profit_(profit), weight_(weight), budget_(budget) {
    for (const auto& w : weight_) {
      if (w.size() != budget_.size()) throw Error(ErrorCode::kDimensionMismatch, "weight length");
    }
    for (const auto& b : budget_) {
      if (b.sign() < 0) throw Error(ErrorCode::kNegativeEntry, "budget");
    }
    std::vector<std::int64_t> ip;
    std::vector<const Rational*> col;
    for (const auto& p : profit_) col.push_back(&p);
    bool ok = detail::to_integers(col, ip);
    const std::size_t dims = budget_.size();
    std::vector<std::vector<std::int64_t>> iw(n_, std::vector<std::int64_t>(dims));
    std::vector<std::int64_t> icap(dims);
    for (std::size_t d = 0; ok && d < dims; ++d) {
      col.clear();
      for (std::size_t j = 0; j < n_; ++j) col.push_back(&weight_[j][d]);
      col.push_back(&budget_[d]);
      std::vector<std::int64_t> scaled;
      ok = detail::to_integers(col, scaled);
      if (!ok) break;
      for (std::size_t j = 0; j < n_; ++j) iw[j][d] = scaled[j];
      icap[d] = scaled[n_];
    }
    if (ok) {
      int_solver_.emplace(std::move(ip), std::move(iw), std::move(icap));
    } else {
      rat_solver_.emplace(profit_, weight_, budget_);
    }
  }

  KnapsackSolver(const Instance& inst, const Vec& budget)
      : KnapsackSolver(profits_of(inst), weights_of(inst), budget) {}

  FollowerSolution solve(const Selection& available) {
    if (available.size() != n_) throw Error(ErrorCode::kDimensionMismatch, "mask length");
    Selection chosen;
    if (int_solver_) {
      chosen = int_solver_->run(available).first;
    } else {
      chosen = rat_solver_->run(available).first;
    }
    FollowerSolution s;
    s.selected = std::move(chosen);
    s.consumed.assign(budget_.size(), Rational(0));
    for (std::size_t j = 0; j < n_; ++j) {
      if (!s.selected[j]) continue;
      s.value += profit_[j];
      for (std::size_t d = 0; d < budget_.size(); ++d) s.consumed[d] += weight_[j][d];
    }
    return s;
  }

  bool uses_integer_path() const { return int_solver_.has_value(); }

  static Vec profits_of(const Instance& inst) {
    Vec p;
    for (const auto& it : inst.items) p.push_back(it.profit);
    return p;
  }
  static std::vector<Vec> weights_of(const Instance& inst) {
    std::vector<Vec> w;
    for (const auto& it : inst.items) w.push_back(it.weight);
    return w;
  }

 private:
  std::size_t n_;
  Vec profit_;
  std::vector<Vec> weight_;
  Vec budget_;
  std::optional<detail::BranchAndBound<std::int64_t>> int_solver_;
  std::optional<detail::BranchAndBound<Rational>> rat_solver_;
};

// max{p·y : B y <= budget, y <= available, y binary}; ties go to the
// lexicographically smallest y.
inline FollowerSolution solve_exact(const Instance& inst, const Selection& available,
                                    const Vec& budget) {
  if (budget.size() != inst.s_b) throw Error(ErrorCode::kDimensionMismatch, "budget length");
  KnapsackSolver solver(inst, budget);
  return solver.solve(available);
}

// Item in ratio order for the single-dimension fractional greedy.
struct RatioItem {
  Rational profit;
  Rational weight;
  std::size_t id = 0;
};

inline constexpr std::size_t kDummyId = std::numeric_limits<std::size_t>::max();

struct GreedyOutcome {
  Vec y;
  Rational value;
  std::size_t critical_index = 0;  // position in the ratio order
};

// Strict total order used for small items: ratio descending, then id.
inline bool ratio_before(const RatioItem& a, const RatioItem& b) {
  if (a.weight.is_zero() || b.weight.is_zero()) {
    if (a.weight.is_zero() != b.weight.is_zero()) return a.weight.is_zero();
    return a.id < b.id;
  }
  Rational lhs = a.profit * b.weight, rhs = b.profit * a.weight;
  if (lhs != rhs) return lhs > rhs;
  return a.id < b.id;
}

// Sorts items and appends the zero-profit dummy of weight 1 + total weight.
inline std::vector<RatioItem> ratio_order_with_dummy(std::vector<RatioItem> items) {
  std::sort(items.begin(), items.end(), ratio_before);
  Rational total(1);
  for (const auto& it : items) total += it.weight;
  items.push_back({Rational(0), total, kDummyId});
  return items;
}

// Fractional greedy over ratio-sorted items ending in the dummy. The
// critical item is the first item with positive availability and weight at
// which the budget is used up.
inline GreedyOutcome greedy_fractional(const std::vector<RatioItem>& items,
                                       const Vec& availability, const Rational& budget) {
  if (items.empty() || items.back().id != kDummyId || !items.back().profit.is_zero() ||
      items.back().weight < budget) {
    throw Error(ErrorCode::kMissingDummy, "ratio order must end with the dummy item");
  }
  if (availability.size() != items.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "availability length");
  }
  for (std::size_t j = 0; j + 2 < items.size(); ++j) {
    if (ratio_before(items[j + 1], items[j])) {
      throw Error(ErrorCode::kNotSorted, "items not in ratio order");
    }
  }
  GreedyOutcome out;
  out.y.assign(items.size(), Rational(0));
  Rational room = budget;
  for (std::size_t j = 0; j < items.size(); ++j) {
    const auto& it = items[j];
    if (availability[j].is_zero()) continue;
    if (it.weight.is_zero()) {
      out.y[j] = availability[j];
      out.value += it.profit * availability[j];
      continue;
    }
    Rational full = it.weight * availability[j];
    if (full >= room) {
      out.y[j] = room / it.weight;
      out.value += it.profit * out.y[j];
      out.critical_index = j;
      return out;
    }
    room -= full;
    out.y[j] = availability[j];
    out.value += it.profit * availability[j];
  }
  // The dummy always has availability 1 in callers; reaching here means it
  // was masked out.
  throw Error(ErrorCode::kMissingDummy, "dummy item unavailable");
}

// Follower oracle with a stated approximation guarantee rho >= 1.
class FollowerOracle {
 public:
  virtual ~FollowerOracle() = default;
  virtual Rational rho() const = 0;
  virtual FollowerSolution solve(const Vec& profit, const Selection& available,
                                 const Vec& budget) const = 0;
};

class ExactOracle : public FollowerOracle {
 public:
  explicit ExactOracle(const Instance& inst) : weights_(KnapsackSolver::weights_of(inst)) {}
  Rational rho() const override { return Rational(1); }
  FollowerSolution solve(const Vec& profit, const Selection& available,
                         const Vec& budget) const override {
    KnapsackSolver solver(profit, weights_, budget);
    return solver.solve(available);
  }

 private:
  std::vector<Vec> weights_;
};

enum class OracleStrategy { kExact, kGreedy };

// Items by profit over budget-normalized aggregate weight, compared with
// the best single item.
class GreedyOracle : public FollowerOracle {
 public:
  GreedyOracle(const Instance& inst, Rational rho)
      : weights_(KnapsackSolver::weights_of(inst)), rho_(std::move(rho)) {}
  Rational rho() const override { return rho_; }
  FollowerSolution solve(const Vec& profit, const Selection& available,
                         const Vec& budget) const override {
    const std::size_t n = profit.size();
    const std::size_t dims = budget.size();
    auto fits_alone = [&](std::size_t j) {
      for (std::size_t d = 0; d < dims; ++d) {
        if (weights_[j][d] > budget[d]) return false;
      }
      return true;
    };
    std::vector<std::size_t> cand;
    Vec agg(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (!available[j] || !fits_alone(j) || profit[j].is_zero()) continue;
      cand.push_back(j);
      for (std::size_t d = 0; d < dims; ++d) {
        if (budget[d].sign() > 0) agg[j] += weights_[j][d] / budget[d];
      }
    }
    std::stable_sort(cand.begin(), cand.end(), [&](std::size_t a, std::size_t b) {
      if (agg[a].is_zero() || agg[b].is_zero()) return agg[a].is_zero() && !agg[b].is_zero();
      return profit[a] * agg[b] > profit[b] * agg[a];
    });
    FollowerSolution greedy = empty(n, dims);
    for (std::size_t j : cand) {
      bool fits = true;
      for (std::size_t d = 0; d < dims; ++d) {
        fits = fits && greedy.consumed[d] + weights_[j][d] <= budget[d];
      }
      if (!fits) continue;
      greedy.selected[j] = true;
      greedy.value += profit[j];
      for (std::size_t d = 0; d < dims; ++d) greedy.consumed[d] += weights_[j][d];
    }
    std::optional<std::size_t> single;
    for (std::size_t j : cand) {
      if (!single || profit[j] > profit[*single]) single = j;
    }
    if (single && profit[*single] > greedy.value) {
      FollowerSolution s = empty(n, dims);
      s.selected[*single] = true;
      s.value = profit[*single];
      s.consumed = weights_[*single];
      return s;
    }
    return greedy;
  }

 private:
  static FollowerSolution empty(std::size_t n, std::size_t dims) {
    FollowerSolution s;
    s.selected.assign(n, false);
    s.consumed.assign(dims, Rational(0));
    return s;
  }
  std::vector<Vec> weights_;
  Rational rho_;
};

inline std::unique_ptr<FollowerOracle> make_exact_oracle(const Instance& inst) {
  return std::make_unique<ExactOracle>(inst);
}

inline std::unique_ptr<FollowerOracle> make_approx_oracle(const Instance& inst, const Rational& rho,
                                                          OracleStrategy strategy) {
  if (rho < Rational(1)) throw Error(ErrorCode::kDimensionMismatch, "rho must be >= 1");
  if (strategy == OracleStrategy::kExact) return make_exact_oracle(inst);
  return std::make_unique<GreedyOracle>(inst, rho);
}

}  // namespace interdict

#endif  // INTERDICT_FOLLOWER_HPP_
