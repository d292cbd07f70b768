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

// interdict: generate, solve, verify and benchmark interdiction instances.
// Exit status: 0 success, 1 usage error, 2 solver or verification failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "interdict/bench.hpp"

namespace {

using interdict::Error;
using interdict::ErrorCode;
using interdict::Rational;

constexpr int kUsage = 1;
constexpr int kFailure = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "3/4", "2" or a plain decimal such as "0.25".
Rational parse_number(const std::string& flag, const std::string& text) {
  try {
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational::parse(text);
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    if (digits.empty() || digits == "-") throw std::invalid_argument("empty");
    mpz_class den = 1;
    for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    return Rational::parse(digits) / Rational(den, mpz_class(1));
  } catch (const std::invalid_argument&) {
    throw UsageError("bad value for " + flag + ": '" + text + "'");
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kParse, "cannot write " + path);
  out << text;
}

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto dash = tok.find('-');
    try {
      if (dash == std::string::npos) {
        seeds.push_back(std::stoull(tok));
      } else {
        const std::uint64_t a = std::stoull(tok.substr(0, dash)), b = std::stoull(tok.substr(dash + 1));
        if (b < a) throw std::invalid_argument("range");
        for (std::uint64_t s = a; s <= b; ++s) seeds.push_back(s);
      }
    } catch (const std::exception&) {
      throw UsageError("bad value for --seeds: '" + tok + "'");
    }
  }
  if (seeds.empty()) throw UsageError("--seeds is empty");
  return seeds;
}

// Raw option text; turned into numbers after CLI11 has parsed.
struct AlgoFlags {
  std::string eps = "1/4";
  std::string delta;
  std::string alpha = "1/2";
  std::string search_eps = "1/1000";
  std::string oracle = "exact";
  std::string rho = "2";
  bool exhaustive = false;
  std::size_t max_guesses = 100000;
  std::size_t max_lambda = 2000;
};

interdict::bench::AlgoParams to_params(const std::string& algo, const AlgoFlags& f) {
  interdict::bench::AlgoParams p;
  p.algo = algo;
  p.eps = parse_number("--eps", f.eps);
  if (!f.delta.empty()) p.delta = parse_number("--delta", f.delta);
  p.alpha = parse_number("--alpha", f.alpha);
  p.search_eps = parse_number("--search-eps", f.search_eps);
  p.oracle = f.oracle;
  p.rho = parse_number("--rho", f.rho);
  p.exhaustive = f.exhaustive;
  p.max_guesses = f.max_guesses;
  p.max_lambda_guesses = f.max_lambda;
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interdiction with packing constraints: solvers and benchmarks"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->require_subcommand(1);
  std::string gen_out;
  std::size_t gen_n = 8, gen_sa = 1, gen_sb = 1;
  std::uint64_t gen_seed = 1;
  auto* gen_random = gen->add_subcommand("random", "Random instance on a 1/10 value grid");
  gen_random->add_option("--n", gen_n, "Number of items")->check(CLI::Range(1, 64));
  gen_random->add_option("--sa", gen_sa, "Leader constraints")->check(CLI::Range(1, 16));
  gen_random->add_option("--sb", gen_sb, "Follower constraints")->check(CLI::Range(1, 16));
  gen_random->add_option("--seed", gen_seed, "Random seed");
  gen_random->add_option("--out", gen_out, "Output file (default stdout)");
  std::size_t hs_elements = 0, hs_k = 1;
  std::string hs_sets, hs_sets_file;
  auto* gen_hs = gen->add_subcommand("hs3", "Reduction instance from a 3-hitting-set instance");
  gen_hs->add_option("--elements", hs_elements, "Number of elements")->required();
  gen_hs->add_option("--k", hs_k, "Hitting set size")->required();
  auto* sets_opt = gen_hs->add_option("--sets", hs_sets, "Sets as '1 2 3;2 3 4'");
  gen_hs->add_option("--sets-file", hs_sets_file, "File with one set per line")->excludes(sets_opt);
  gen_hs->add_option("--out", gen_out, "Output file (default stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "Solve an instance");
  solve->require_subcommand(1);
  std::string solve_in, solve_out;
  AlgoFlags flags;
  std::vector<CLI::App*> solvers;
  for (const char* name : {"exact", "ptas", "general", "bicriteria"}) {
    auto* s = solve->add_subcommand(name, std::string("Run the ") + name + " solver");
    s->add_option("--in", solve_in, "Instance file")->required();
    s->add_option("--out", solve_out, "Write the result document here");
    solvers.push_back(s);
  }
  for (auto* s : {solvers[1], solvers[2]}) {
    s->add_option("--eps", flags.eps, "Accuracy parameter");
    s->add_flag("--exhaustive", flags.exhaustive, "Lift all enumeration caps");
    s->add_option("--max-large-guesses", flags.max_guesses, "Cap on large-item guesses");
  }
  solvers[1]->get_option("--max-large-guesses")->description("Cap on large-item guesses per scale");
  solvers[2]->add_option("--delta", flags.delta, "Item classification threshold");
  solvers[2]->add_option("--max-lambda-guesses", flags.max_lambda, "Cap on mass guesses per large guess");
  solvers[3]->add_option("--alpha", flags.alpha, "Rounding threshold in (0,1)");
  solvers[3]->add_option("--oracle", flags.oracle, "Follower oracle")
      ->check(CLI::IsMember({"exact", "greedy"}));
  solvers[3]->add_option("--rho", flags.rho, "Approximation ratio claimed for the greedy oracle");
  solvers[3]->add_option("--search-eps", flags.search_eps, "Relative gap ending the target search");

  // verify
  auto* verify = app.add_subcommand("verify", "Check a result document against an instance");
  std::string verify_in, verify_result;
  verify->add_option("--in", verify_in, "Instance file")->required();
  verify->add_option("--result", verify_result, "Result file")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite");
  std::string suite = "random-small", bench_algo = "exact", seeds_text = "1-3", csv_path, jsonl_path;
  std::size_t per_seed = 5, exhaustive_limit = 12;
  bench->add_option("--suite", suite, "random-small | hs3-gap | bicriteria-sweep");
  bench->add_option("--algo", bench_algo, "Algorithm for random-small")
      ->check(CLI::IsMember({"exact", "ptas", "general", "bicriteria"}));
  bench->add_option("--seeds", seeds_text, "Seeds, e.g. 1,2,5-9");
  bench->add_option("--per-seed", per_seed, "Instances per seed");
  bench->add_option("--exhaustive-limit", exhaustive_limit, "Pair with an exact run up to this n");
  bench->add_option("--eps", flags.eps, "Accuracy parameter");
  bench->add_option("--alpha", flags.alpha, "Rounding threshold for bicriteria");
  bench->add_flag("--exhaustive", flags.exhaustive, "Lift all enumeration caps");
  bench->add_option("--csv", csv_path, "CSV output (default stdout)");
  bench->add_option("--jsonl", jsonl_path, "JSON-lines output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (gen->parsed()) {
      interdict::Instance inst;
      if (gen_random->parsed()) {
        inst = interdict::gen_random(gen_n, gen_sa, gen_sb, interdict::ValueGrid{}, gen_seed);
      } else {
        std::string text = hs_sets_file.empty() ? hs_sets : interdict::read_file(hs_sets_file);
        for (char& c : text) {
          if (c == ';') c = '\n';
        }
        inst = interdict::gen_3hs_reduction(interdict::parse_sets(text, hs_elements, hs_k));
      }
      write_text(gen_out, interdict::serialize(inst));
      return 0;
    }

    if (solve->parsed()) {
      std::string algo;
      for (auto* s : solvers) {
        if (s->parsed()) algo = s->get_name();
      }
      const interdict::Instance inst = interdict::load_instance(solve_in);
      auto params = to_params(algo, flags);
      if (algo == "general" && !solvers[2]->get_option("--eps")->count()) params.eps = Rational(1, 2);
      interdict::bench::Task task;
      task.inst = inst;
      task.algo = params;
      interdict::bench::AlgoRun run;
      interdict::bench::RunRecord rec = interdict::bench::run_task("cli", task, 0, &run);
      if (!solve_out.empty()) {
        write_text(solve_out, interdict::bench::result_to_json(run.result, algo).dump(1) + "\n");
      }
      std::cout << interdict::bench::to_jsonl(rec);
      return 0;
    }

    if (verify->parsed()) {
      const interdict::Instance inst = interdict::load_instance(verify_in);
      interdict::Json doc;
      try {
        doc = interdict::Json::parse(interdict::read_file(verify_result));
      } catch (const interdict::Json::exception& e) {
        throw Error(ErrorCode::kParse, e.what());
      }
      const auto result = interdict::bench::result_from_json(doc, inst);
      const auto report = interdict::verify(inst, result);
      for (const auto& m : report.messages) std::cerr << m << "\n";
      std::cout << (report.ok() ? "ok" : "failed") << " objective=" << report.recomputed_objective.str()
                << "\n";
      return report.ok() ? 0 : kFailure;
    }

    if (bench->parsed()) {
      interdict::bench::SuiteParams sp;
      sp.algo = to_params(bench_algo, flags);
      if (bench_algo == "general" && !bench->get_option("--eps")->count()) sp.algo.eps = Rational(1, 2);
      sp.per_seed = per_seed;
      sp.exhaustive_limit = exhaustive_limit;
      const auto rows = interdict::bench::bench_suite(suite, sp, parse_seeds(seeds_text));
      write_text(csv_path, interdict::bench::to_csv(rows));
      if (!jsonl_path.empty()) {
        std::string lines;
        for (const auto& r : rows) lines += interdict::bench::to_jsonl(r);
        write_text(jsonl_path, lines);
      }
      const auto s = interdict::bench::summarize(rows);
      std::cerr << s.rows << " rows, " << s.with_opt << " with OPT, worst ratio " << s.worst.str()
                << "\n";
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
