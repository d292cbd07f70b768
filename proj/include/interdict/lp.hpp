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

#ifndef INTERDICT_LP_HPP_
#define INTERDICT_LP_HPP_

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "interdict/errors.hpp"
#include "interdict/rational.hpp"

namespace interdict {

enum class Relation { kLeq, kGeq, kEq };
enum class Sense { kMin, kMax };

struct LPVariable {
  std::string name;
  Rational lo;
  Rational hi;
};

struct LPConstraint {
  std::vector<Rational> coeffs;  // dense, one per variable
  Relation rel = Relation::kLeq;
  Rational rhs;
  std::string tag;
};

class LinearProgram {
 public:
  std::size_t add_variable(std::string name, Rational lo, Rational hi) {
    if (hi < lo) throw Error(ErrorCode::kDimensionMismatch, "empty box for " + name);
    vars_.push_back({std::move(name), std::move(lo), std::move(hi)});
    for (auto& c : constraints_) c.coeffs.emplace_back();
    objective_.emplace_back();
    return vars_.size() - 1;
  }

  void add_constraint(std::vector<Rational> coeffs, Relation rel, Rational rhs,
                      std::string tag = {}) {
    if (coeffs.size() != vars_.size()) {
      throw Error(ErrorCode::kDimensionMismatch, "constraint references undeclared variables");
    }
    constraints_.push_back({std::move(coeffs), rel, std::move(rhs), std::move(tag)});
  }

  void set_objective(std::vector<Rational> coeffs, Sense sense) {
    if (coeffs.size() != vars_.size()) {
      throw Error(ErrorCode::kDimensionMismatch, "objective length");
    }
    objective_ = std::move(coeffs);
    sense_ = sense;
  }

  void fix(std::size_t var, const Rational& value) {
    vars_.at(var).lo = value;
    vars_.at(var).hi = value;
  }

  std::size_t num_variables() const { return vars_.size(); }
  std::size_t num_constraints() const { return constraints_.size(); }
  const std::vector<LPVariable>& variables() const { return vars_; }
  const std::vector<LPConstraint>& constraints() const { return constraints_; }
  const std::vector<Rational>& objective() const { return objective_; }
  Sense sense() const { return sense_; }

  Rational evaluate(const std::vector<Rational>& x) const {
    Rational v;
    for (std::size_t j = 0; j < x.size(); ++j) v.add_product(objective_[j], x[j]);
    return v;
  }

  // Exact check of boxes and rows.
  bool satisfies(const std::vector<Rational>& x) const {
    if (x.size() != vars_.size()) return false;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x[j] < vars_[j].lo || x[j] > vars_[j].hi) return false;
    }
    for (const auto& c : constraints_) {
      Rational lhs;
      for (std::size_t j = 0; j < x.size(); ++j) lhs.add_product(c.coeffs[j], x[j]);
      if (c.rel == Relation::kLeq && lhs > c.rhs) return false;
      if (c.rel == Relation::kGeq && lhs < c.rhs) return false;
      if (c.rel == Relation::kEq && lhs != c.rhs) return false;
    }
    return true;
  }

  // One line per variable box, constraint and the objective.
  std::string dump() const {
    std::ostringstream os;
    auto term_list = [&](const std::vector<Rational>& coeffs) {
      std::string s;
      for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j].is_zero()) continue;
        s += (s.empty() ? "" : " + ") + coeffs[j].str() + " " + vars_[j].name;
      }
      return s.empty() ? std::string("0") : s;
    };
    os << (sense_ == Sense::kMin ? "minimize " : "maximize ") << term_list(objective_) << "\n";
    for (const auto& v : vars_) os << "bound " << v.lo << " <= " << v.name << " <= " << v.hi << "\n";
    for (const auto& c : constraints_) {
      const char* rel = c.rel == Relation::kLeq ? " <= " : c.rel == Relation::kGeq ? " >= " : " = ";
      os << "row";
      if (!c.tag.empty()) os << " [" << c.tag << "]";
      os << " " << term_list(c.coeffs) << rel << c.rhs << "\n";
    }
    return os.str();
  }

 private:
  std::vector<LPVariable> vars_;
  std::vector<LPConstraint> constraints_;
  std::vector<Rational> objective_;
  Sense sense_ = Sense::kMin;
};

enum class LPStatus { kOptimal, kInfeasible, kUnbounded };

struct LPSolution {
  LPStatus status = LPStatus::kInfeasible;
  std::vector<Rational> x;
  Rational objective_value;
  bool is_extreme_point = false;
  std::vector<std::size_t> basis;  // column ids: variables first, then row slacks
  std::size_t pivots = 0;
};

namespace detail {

// Dense bounded-variable primal simplex on the shifted problem
// A z = b, 0 <= z <= upper (upper may be absent), Bland's rule throughout.
class Simplex {
 public:
  Simplex(std::size_t rows, std::size_t cols)
      : m_(rows), n_(cols), a_(rows, std::vector<Rational>(cols)), b_(rows), upper_(cols) {}

  std::size_t m_, n_;
  std::vector<std::vector<Rational>> a_;  // current tableau B^-1 A
  std::vector<Rational> b_;               // current basic values
  std::vector<std::optional<Rational>> upper_;
  std::vector<std::size_t> basis_;
  std::vector<bool> at_upper_;  // status of nonbasic columns
  std::vector<bool> is_basic_;
  std::size_t pivots_ = 0;

  // Minimizes cost·z from the current basis. Returns false if unbounded.
  bool optimize(const std::vector<Rational>& cost) {
    for (;;) {
      // Reduced costs d_j = c_j - c_B B^-1 A_j.
      std::optional<std::size_t> enter;
      bool increase = true;
      for (std::size_t j = 0; j < n_ && !enter; ++j) {
        if (is_basic_[j]) continue;
        if (upper_[j] && upper_[j]->is_zero()) continue;
        Rational d = cost[j];
        for (std::size_t i = 0; i < m_; ++i) {
          if (!a_[i][j].is_zero() && !cost[basis_[i]].is_zero()) {
            d -= cost[basis_[i]] * a_[i][j];
          }
        }
        if (!at_upper_[j] && d.sign() < 0) {
          enter = j;
          increase = true;
        } else if (at_upper_[j] && d.sign() > 0) {
          enter = j;
          increase = false;
        }
      }
      if (!enter) return true;
      const std::size_t e = *enter;
      // Ratio test. Moving z_e by t in direction s changes basic i by
      // -s * a_ie * t.
      std::optional<Rational> best_t;
      std::optional<std::size_t> leave_row;
      bool leave_to_upper = false;
      if (upper_[e]) best_t = *upper_[e];
      for (std::size_t i = 0; i < m_; ++i) {
        const Rational& alpha = a_[i][e];
        if (alpha.is_zero()) continue;
        const int dir = increase ? alpha.sign() : -alpha.sign();
        std::optional<Rational> t;
        bool to_upper = false;
        if (dir > 0) {
          t = b_[i] / abs(alpha);
        } else if (upper_[basis_[i]]) {
          t = (*upper_[basis_[i]] - b_[i]) / abs(alpha);
          to_upper = true;
        }
        if (!t) continue;
        bool better = !best_t || *t < *best_t;
        if (!better && best_t && *t == *best_t) {
          // Bland: smallest column index among tied candidates.
          std::size_t incumbent = leave_row ? basis_[*leave_row] : e;
          better = basis_[i] < incumbent;
        }
        if (better) {
          best_t = t;
          leave_row = i;
          leave_to_upper = to_upper;
        }
      }
      if (!best_t) return false;
      const Rational t = *best_t;
      const Rational step = increase ? t : -t;
      if (!step.is_zero()) {
        for (std::size_t i = 0; i < m_; ++i) {
          if (!a_[i][e].is_zero()) b_[i] -= a_[i][e] * step;
        }
      }
      if (!leave_row) {
        at_upper_[e] = increase;  // bound flip
        continue;
      }
      const std::size_t r = *leave_row;
      const std::size_t out = basis_[r];
      // Entering value after the move.
      Rational enter_value = at_upper_[e] ? *upper_[e] : Rational(0);
      enter_value += step;
      pivot(r, e);
      b_[r] = enter_value;
      is_basic_[out] = false;
      at_upper_[out] = leave_to_upper;
      is_basic_[e] = true;
      at_upper_[e] = false;
    }
  }

  void pivot(std::size_t r, std::size_t e) {
    ++pivots_;
    const Rational piv = a_[r][e];
    for (std::size_t j = 0; j < n_; ++j) {
      if (!a_[r][j].is_zero()) a_[r][j] /= piv;
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || a_[i][e].is_zero()) continue;
      const Rational f = a_[i][e];
      for (std::size_t j = 0; j < n_; ++j) {
        if (!a_[r][j].is_zero()) a_[i][j] -= f * a_[r][j];
      }
    }
    basis_[r] = e;
  }

  Rational value(std::size_t j) const {
    if (is_basic_[j]) {
      for (std::size_t i = 0; i < m_; ++i) {
        if (basis_[i] == j) return b_[i];
      }
    }
    return at_upper_[j] ? *upper_[j] : Rational(0);
  }
};

}  // namespace detail

// Optimal basic feasible solution in exact arithmetic.
inline LPSolution solve_extreme_point(const LinearProgram& lp) {
  const std::size_t nv = lp.num_variables();
  const std::size_t m = lp.num_constraints();
  const auto& vars = lp.variables();
  const auto& rows = lp.constraints();

  // Columns: variables, one slack per inequality row, one artificial per row.
  std::vector<std::optional<std::size_t>> slack_col(m);
  std::size_t cols = nv;
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].rel != Relation::kEq) slack_col[i] = cols++;
  }
  const std::size_t first_art = cols;
  cols += m;

  detail::Simplex s(m, cols);
  for (std::size_t j = 0; j < nv; ++j) s.upper_[j] = vars[j].hi - vars[j].lo;
  s.basis_.assign(m, 0);
  s.is_basic_.assign(cols, false);
  s.at_upper_.assign(cols, false);

  for (std::size_t i = 0; i < m; ++i) {
    Rational rhs = rows[i].rhs;
    for (std::size_t j = 0; j < nv; ++j) {
      if (rows[i].coeffs[j].is_zero()) continue;
      s.a_[i][j] = rows[i].coeffs[j];
      if (!vars[j].lo.is_zero()) rhs -= rows[i].coeffs[j] * vars[j].lo;
    }
    if (slack_col[i]) s.a_[i][*slack_col[i]] = rows[i].rel == Relation::kLeq ? 1 : -1;
    // Keep the right-hand side nonnegative.
    if (rhs.sign() < 0) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (!s.a_[i][j].is_zero()) s.a_[i][j] = -s.a_[i][j];
      }
      rhs = -rhs;
    }
    s.b_[i] = rhs;
    std::size_t basic = first_art + i;
    if (slack_col[i] && s.a_[i][*slack_col[i]].sign() > 0) basic = *slack_col[i];
    s.a_[i][first_art + i] = 1;
    s.basis_[i] = basic;
    s.is_basic_[basic] = true;
  }
  // Artificials that did not enter the basis are fixed at zero.
  for (std::size_t i = 0; i < m; ++i) {
    if (!s.is_basic_[first_art + i]) s.upper_[first_art + i] = Rational(0);
  }

  LPSolution sol;
  std::vector<Rational> phase1(cols);
  bool need_phase1 = false;
  for (std::size_t i = 0; i < m; ++i) {
    if (s.is_basic_[first_art + i]) {
      phase1[first_art + i] = 1;
      need_phase1 = true;
    }
  }
  if (need_phase1) {
    s.optimize(phase1);
    Rational infeas;
    for (std::size_t i = 0; i < m; ++i) {
      if (s.basis_[i] >= first_art) infeas += s.b_[i];
    }
    if (infeas.sign() > 0) {
      sol.status = LPStatus::kInfeasible;
      sol.pivots = s.pivots_;
      return sol;
    }
    // Drive zero-valued artificials out where possible.
    for (std::size_t i = 0; i < m; ++i) {
      if (s.basis_[i] < first_art) continue;
      for (std::size_t j = 0; j < first_art; ++j) {
        if (s.is_basic_[j] || s.a_[i][j].is_zero()) continue;
        if (s.at_upper_[j]) continue;  // keep nonbasic values unchanged
        const std::size_t out = s.basis_[i];
        s.pivot(i, j);
        s.b_[i] = 0;
        s.is_basic_[out] = false;
        s.is_basic_[j] = true;
        break;
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) s.upper_[first_art + i] = Rational(0);

  std::vector<Rational> cost(cols);
  for (std::size_t j = 0; j < nv; ++j) {
    cost[j] = lp.sense() == Sense::kMin ? lp.objective()[j] : -lp.objective()[j];
  }
  if (!s.optimize(cost)) {
    sol.status = LPStatus::kUnbounded;
    sol.pivots = s.pivots_;
    return sol;
  }
  sol.status = LPStatus::kOptimal;
  sol.x.resize(nv);
  for (std::size_t j = 0; j < nv; ++j) sol.x[j] = vars[j].lo + s.value(j);
  sol.objective_value = lp.evaluate(sol.x);
  sol.is_extreme_point = true;
  sol.basis = s.basis_;
  sol.pivots = s.pivots_;
  return sol;
}

// Rank of a dense rational matrix by Gaussian elimination.
inline std::size_t matrix_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      Rational f = rows[i][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// True iff x is feasible and the tight rows and tight boxes have full rank.
inline bool verify_extreme_point(const LinearProgram& lp, const std::vector<Rational>& x) {
  if (!lp.satisfies(x)) return false;
  const std::size_t n = lp.num_variables();
  std::vector<std::vector<Rational>> active;
  for (const auto& c : lp.constraints()) {
    Rational lhs;
    for (std::size_t j = 0; j < n; ++j) lhs.add_product(c.coeffs[j], x[j]);
    if (lhs == c.rhs) active.push_back(c.coeffs);
  }
  for (std::size_t j = 0; j < n; ++j) {
    const auto& v = lp.variables()[j];
    if (x[j] == v.lo || x[j] == v.hi) {
      std::vector<Rational> e(n);
      e[j] = 1;
      active.push_back(std::move(e));
    }
  }
  return matrix_rank(std::move(active)) == n;
}

// Variables among `which` strictly inside their boxes.
inline std::size_t count_fractional(const LinearProgram& lp, const std::vector<Rational>& x,
                                    const std::vector<std::size_t>& which) {
  std::size_t k = 0;
  for (std::size_t j : which) {
    const auto& v = lp.variables()[j];
    if (x[j] > v.lo && x[j] < v.hi) ++k;
  }
  return k;
}

struct Cut {
  std::vector<Rational> coeffs;
  Relation rel = Relation::kLeq;
  Rational rhs;
  std::string provenance;

  bool violated_at(const std::vector<Rational>& x) const {
    Rational lhs;
    for (std::size_t j = 0; j < x.size(); ++j) lhs.add_product(coeffs[j], x[j]);
    if (rel == Relation::kLeq) return lhs > rhs;
    if (rel == Relation::kGeq) return lhs < rhs;
    return lhs != rhs;
  }
};

struct SeparationOutcome {
  bool feasible = true;
  Cut cut;

  static SeparationOutcome accept() { return {}; }
  static SeparationOutcome violated(Cut c) { return {false, std::move(c)}; }
};

using Separator = std::function<SeparationOutcome(const std::vector<Rational>&)>;

enum class FeasibilityStatus { kFeasible, kInfeasible, kRoundLimit };

struct FeasibilityResult {
  FeasibilityStatus status = FeasibilityStatus::kRoundLimit;
  std::vector<Rational> point;  // accepted point when feasible
  std::vector<Cut> cuts;        // every cut emitted, in order; the certificate
  std::size_t rounds = 0;
};

// Cutting-plane loop: solve the working LP (base plus accumulated cuts),
// ask the separator about its optimal vertex, add the returned cut, repeat.
// The base objective, if any, picks which point of the working LP is tried.
inline FeasibilityResult feasibility_with_separation(const LinearProgram& base,
                                                     const Separator& separator,
                                                     std::size_t max_rounds,
                                                     std::vector<Cut> initial_cuts = {}) {
  if (max_rounds == 0) throw Error(ErrorCode::kRoundLimit, "max_rounds must be positive");
  FeasibilityResult res;
  res.cuts = std::move(initial_cuts);
  LinearProgram working = base;
  for (const auto& c : res.cuts) working.add_constraint(c.coeffs, c.rel, c.rhs, c.provenance);
  for (;;) {
    LPSolution sol = solve_extreme_point(working);
    if (sol.status == LPStatus::kInfeasible) {
      res.status = FeasibilityStatus::kInfeasible;
      return res;
    }
    if (sol.status == LPStatus::kUnbounded) {
      throw Error(ErrorCode::kUnbounded, "working LP unbounded");
    }
    SeparationOutcome out = separator(sol.x);
    if (out.feasible) {
      res.status = FeasibilityStatus::kFeasible;
      res.point = std::move(sol.x);
      return res;
    }
    if (out.cut.coeffs.size() != base.num_variables() || !out.cut.violated_at(sol.x)) {
      throw Error(ErrorCode::kSeparatorContradiction,
                  "separator returned a cut the point satisfies (" + out.cut.provenance + ")");
    }
    working.add_constraint(out.cut.coeffs, out.cut.rel, out.cut.rhs, out.cut.provenance);
    res.cuts.push_back(std::move(out.cut));
    if (++res.rounds >= max_rounds) {
      res.status = FeasibilityStatus::kRoundLimit;
      return res;
    }
  }
}

}  // namespace interdict

#endif  // INTERDICT_LP_HPP_
