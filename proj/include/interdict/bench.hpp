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

// Benchmark suites, run records and their CSV / JSON-lines encodings.

#ifndef INTERDICT_BENCH_HPP_
#define INTERDICT_BENCH_HPP_

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "interdict/bicriteria.hpp"
#include "interdict/exact_bilevel.hpp"
#include "interdict/general.hpp"
#include "interdict/generators.hpp"
#include "interdict/instance_io.hpp"
#include "interdict/ptas.hpp"

namespace interdict::bench {

// ---------------------------------------------------------------------------
// Results as documents.

inline Json selection_to_json(const Selection& s) {
  Json a = Json::array();
  for (bool b : s) a.push_back(b ? 1 : 0);
  return a;
}

inline Selection selection_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParse, "expected 0/1 array");
  Selection s;
  for (const auto& v : j) {
    if (!v.is_number_integer() || (v != 0 && v != 1)) throw Error(ErrorCode::kParse, "expected 0 or 1");
    s.push_back(v == 1);
  }
  return s;
}

inline Json result_to_json(const BilevelResult& r, const std::string& algo) {
  Json doc;
  doc["version"] = 1;
  doc["algo"] = algo;
  doc["leader"] = selection_to_json(r.leader);
  doc["follower"] = selection_to_json(r.follower_response.selected);
  doc["objective"] = r.objective.str();
  doc["budget_multiplier"] = r.budget_multiplier.str();
  doc["bound_claim"] = r.bound_claim;
  doc["truncated"] = r.truncated;
  return doc;
}

inline BilevelResult result_from_json(const Json& doc, const Instance& inst) {
  for (const char* key : {"leader", "follower", "objective"}) {
    if (!doc.contains(key)) throw Error(ErrorCode::kParse, std::string("missing field ") + key);
  }
  BilevelResult r;
  r.leader = selection_from_json(doc.at("leader"));
  r.follower_response.selected = selection_from_json(doc.at("follower"));
  if (r.follower_response.selected.size() == inst.size()) {
    r.follower_response.value = inst.profit_of(r.follower_response.selected);
    r.follower_response.consumed = inst.follower_weight(r.follower_response.selected);
  }
  r.objective = rational_from_json(doc.at("objective"));
  if (doc.contains("budget_multiplier")) r.budget_multiplier = rational_from_json(doc.at("budget_multiplier"));
  if (doc.contains("bound_claim")) r.bound_claim = doc.at("bound_claim").get<std::string>();
  if (doc.contains("truncated")) r.truncated = doc.at("truncated").get<bool>();
  return r;
}

// ---------------------------------------------------------------------------
// Records.

struct RunRecord {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t index = 0;
  std::string digest;
  std::size_t n = 0, s_a = 0, s_b = 0;
  std::string algo;
  std::string params;
  Rational objective;
  std::optional<Rational> opt;
  std::optional<Rational> certified_bound;
  std::string bound_claim;
  bool truncated = false;
  double millis = 0;

  // objective / OPT; 1 when both are zero.
  std::optional<Rational> ratio() const {
    if (!opt) return std::nullopt;
    if (opt->is_zero()) return objective.is_zero() ? std::optional<Rational>(Rational(1)) : std::nullopt;
    return objective / *opt;
  }
};

inline constexpr const char* kCsvHeader =
    "suite,seed,n,s_a,s_b,algo,params,objective,opt,ratio,bound_claim,truncated,millis";

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string format_millis(double ms) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << ms;
  return os.str();
}

inline std::string to_csv_row(const RunRecord& r) {
  std::ostringstream os;
  auto ratio = r.ratio();
  os << csv_quote(r.suite) << ',' << r.seed << ',' << r.n << ',' << r.s_a << ',' << r.s_b << ','
     << csv_quote(r.algo) << ',' << csv_quote(r.params) << ',' << r.objective.str() << ','
     << (r.opt ? r.opt->str() : "") << ',' << (ratio ? ratio->str() : "") << ','
     << csv_quote(r.bound_claim) << ',' << (r.truncated ? 1 : 0) << ',' << format_millis(r.millis);
  return os.str();
}

inline Json to_json(const RunRecord& r) {
  Json o;
  o["suite"] = r.suite;
  o["seed"] = r.seed;
  o["index"] = r.index;
  o["digest"] = r.digest;
  o["n"] = r.n;
  o["s_a"] = r.s_a;
  o["s_b"] = r.s_b;
  o["algo"] = r.algo;
  o["params"] = r.params;
  o["objective"] = r.objective.str();
  o["opt"] = r.opt ? Json(r.opt->str()) : Json(nullptr);
  auto ratio = r.ratio();
  o["ratio"] = ratio ? Json(ratio->str()) : Json(nullptr);
  o["certified_bound"] = r.certified_bound ? Json(r.certified_bound->str()) : Json(nullptr);
  o["bound_claim"] = r.bound_claim;
  o["truncated"] = r.truncated;
  o["millis"] = r.millis;
  return o;
}

inline std::string to_jsonl(const RunRecord& r) { return to_json(r).dump() + "\n"; }

inline std::string to_csv(const std::vector<RunRecord>& rows) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& r : rows) out += to_csv_row(r) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Running one algorithm.

struct AlgoParams {
  std::string algo = "exact";  // exact | ptas | general | bicriteria
  Rational eps{1, 4};
  std::optional<Rational> delta;
  Rational alpha{1, 2};
  Rational search_eps{1, 1000};
  std::string oracle = "exact";  // exact | greedy
  Rational rho{2};
  bool exhaustive = true;
  std::size_t max_guesses = 100000;
  std::size_t max_lambda_guesses = 2000;
};

inline std::string describe(const AlgoParams& p) {
  if (p.algo == "ptas") return "eps=" + p.eps.str() + (p.exhaustive ? ";exhaustive" : "");
  if (p.algo == "general") {
    std::string s = "eps=" + p.eps.str();
    if (p.delta) s += ";delta=" + p.delta->str();
    return s + (p.exhaustive ? ";exhaustive" : "");
  }
  if (p.algo == "bicriteria") {
    std::string s = "alpha=" + p.alpha.str() + ";oracle=" + p.oracle + ";search_eps=" + p.search_eps.str();
    if (p.oracle == "greedy") s += ";rho=" + p.rho.str();
    return s;
  }
  return "";
}

struct AlgoRun {
  BilevelResult result;
  std::optional<Rational> certified_bound;
};

inline AlgoRun run_algorithm(const Instance& inst, const AlgoParams& p) {
  AlgoRun out;
  if (p.algo == "exact") {
    out.result = solve_exact_bilevel(inst);
  } else if (p.algo == "ptas") {
    ptas::Options o;
    o.eps = p.eps;
    o.exhaustive = p.exhaustive;
    o.max_guesses = p.max_guesses;
    out.result = ptas::solve(inst, o);
  } else if (p.algo == "general") {
    general::Options o;
    o.eps = p.eps;
    o.delta = p.delta;
    o.exhaustive = p.exhaustive;
    o.max_large_guesses = p.max_guesses;
    o.max_lambda_guesses = p.max_lambda_guesses;
    out.result = general::solve(inst, o);
  } else if (p.algo == "bicriteria") {
    std::unique_ptr<FollowerOracle> oracle =
        p.oracle == "greedy" ? make_approx_oracle(inst, p.rho, OracleStrategy::kGreedy)
                             : make_exact_oracle(inst);
    bicriteria::Options o;
    o.alpha = p.alpha;
    o.search_eps = p.search_eps;
    auto r = bicriteria::solve(inst, *oracle, o);
    out.result = std::move(r.result);
    out.certified_bound = r.certified_bound;
  } else {
    throw Error(ErrorCode::kParse, "unknown algorithm " + p.algo);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Suites.

struct SuiteParams {
  AlgoParams algo;
  std::size_t per_seed = 5;
  std::size_t exhaustive_limit = 12;  // exact OPT paired up to this n
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"random-small", "hs3-gap", "bicriteria-sweep"};
  return names;
}

struct Task {
  Instance inst;
  std::uint64_t seed = 0;
  std::size_t index = 0;
  AlgoParams algo;
  std::string extra;  // appended to params
};

// Random 3HS instance with at most 6 elements and 4 sets.
inline HittingSetInstance random_hitting_set(std::mt19937_64& rng) {
  HittingSetInstance hs;
  for (;;) {
    hs.n_elements = 3 + rng() % 4;
    hs.sets.clear();
    const std::size_t m = 1 + rng() % 4;
    std::vector<bool> covered(hs.n_elements + 1, false);
    for (std::size_t s = 0; s < m; ++s) {
      std::vector<std::size_t> pool(hs.n_elements);
      for (std::size_t e = 0; e < hs.n_elements; ++e) pool[e] = e + 1;
      for (std::size_t i = 0; i < 3; ++i) std::swap(pool[i], pool[i + rng() % (hs.n_elements - i)]);
      std::array<std::size_t, 3> set{pool[0], pool[1], pool[2]};
      std::sort(set.begin(), set.end());
      for (std::size_t e : set) covered[e] = true;
      hs.sets.push_back(set);
    }
    if (std::all_of(covered.begin() + 1, covered.end(), [](bool c) { return c; })) break;
  }
  hs.k = 1 + rng() % 2;
  return hs;
}

inline std::vector<Task> make_tasks(const std::string& suite, const SuiteParams& params,
                                    const std::vector<std::uint64_t>& seeds) {
  std::vector<Task> tasks;
  for (std::uint64_t seed : seeds) {
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < params.per_seed; ++i) {
      Task t;
      t.seed = seed;
      t.index = i;
      t.algo = params.algo;
      if (suite == "random-small") {
        const std::size_t n = 4 + rng() % 5;
        const std::size_t s_a = 1 + rng() % 2;
        std::size_t s_b = 1 + rng() % 3;
        if (params.algo.algo == "ptas") s_b = 1;
        if (params.algo.algo == "general") s_b = 2;
        t.inst = gen_random(n, s_a, s_b, ValueGrid{}, rng());
        tasks.push_back(std::move(t));
      } else if (suite == "hs3-gap") {
        HittingSetInstance hs = random_hitting_set(rng);
        t.inst = gen_3hs_reduction(hs);
        t.algo.algo = "exact";
        const bool yes = min_hitting_set_size(hs) <= hs.k;
        t.extra = "k=" + std::to_string(hs.k) + ";sets=" + std::to_string(hs.sets.size()) +
                  ";hitting=" + (yes ? "yes" : "no");
        tasks.push_back(std::move(t));
      } else if (suite == "bicriteria-sweep") {
        const std::size_t n = 4 + rng() % 6;
        Instance inst = gen_random(n, 1 + rng() % 4, 1 + rng() % 4, ValueGrid{}, rng());
        for (const Rational& a : {Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3),
                                  Rational(3, 4)}) {
          Task s = t;
          s.inst = inst;
          s.algo.algo = "bicriteria";
          s.algo.alpha = a;
          tasks.push_back(std::move(s));
        }
      } else {
        throw Error(ErrorCode::kUnknownSuite, "unknown suite " + suite);
      }
    }
  }
  return tasks;
}

// INTERDICT_THREADS caps the worker count; default is the hardware count.
inline std::size_t thread_count() {
  std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("INTERDICT_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return std::min<std::size_t>(hw, static_cast<std::size_t>(v));
  }
  return hw;
}

// The algorithm's own result goes to *run when given.
inline RunRecord run_task(const std::string& suite, const Task& t, std::size_t exhaustive_limit,
                          AlgoRun* run_out = nullptr) {
  RunRecord rec;
  rec.suite = suite;
  rec.seed = t.seed;
  rec.index = t.index;
  rec.digest = instance_digest(t.inst);
  rec.n = t.inst.size();
  rec.s_a = t.inst.s_a;
  rec.s_b = t.inst.s_b;
  rec.algo = t.algo.algo;
  rec.params = describe(t.algo);
  if (!t.extra.empty()) rec.params += (rec.params.empty() ? "" : ";") + t.extra;
  const auto start = std::chrono::steady_clock::now();
  AlgoRun run = run_algorithm(t.inst, t.algo);
  rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  rec.objective = run.result.objective;
  rec.bound_claim = run.result.bound_claim;
  rec.truncated = run.result.truncated;
  rec.certified_bound = run.certified_bound;
  if (t.algo.algo == "exact") {
    rec.opt = run.result.objective;
  } else if (rec.n <= exhaustive_limit) {
    rec.opt = solve_exact_bilevel(t.inst).objective;
  }
  if (run_out) *run_out = std::move(run);
  return rec;
}

// Runs every task, in parallel, and returns rows ordered by (seed, index,
// task order).
inline std::vector<RunRecord> bench_suite(const std::string& suite, const SuiteParams& params,
                                          const std::vector<std::uint64_t>& seeds) {
  const std::vector<Task> tasks = make_tasks(suite, params, seeds);
  std::vector<RunRecord> rows(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        rows[i] = run_task(suite, tasks[i], params.exhaustive_limit);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::min(thread_count(), std::max<std::size_t>(tasks.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const RunRecord& a, const RunRecord& b) {
    if (a.seed != b.seed) return a.seed < b.seed;
    return a.index < b.index;
  });
  return rows;
}

struct RatioSummary {
  std::size_t rows = 0;
  std::size_t with_opt = 0;
  Rational worst{1};
  Rational mean{1};
};

inline RatioSummary summarize(const std::vector<RunRecord>& rows) {
  RatioSummary s;
  Rational sum;
  s.rows = rows.size();
  for (const auto& r : rows) {
    auto q = r.ratio();
    if (!q) continue;
    ++s.with_opt;
    sum += *q;
    s.worst = max(s.worst, *q);
  }
  if (s.with_opt) s.mean = sum / Rational(static_cast<long>(s.with_opt));
  return s;
}

}  // namespace interdict::bench

#endif  // INTERDICT_BENCH_HPP_
