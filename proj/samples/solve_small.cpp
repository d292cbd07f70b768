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

// Runs every solver on one small random instance and prints the results.
// Usage: sample_solve_small [seed]

#include <cstdlib>
#include <iostream>

#include "interdict/bicriteria.hpp"
#include "interdict/general.hpp"
#include "interdict/generators.hpp"
#include "interdict/instance_io.hpp"
#include "interdict/ptas.hpp"

namespace {

void print(const char* name, const interdict::Instance& inst, const interdict::BilevelResult& r) {
  std::cout << name << ": objective " << r.objective.str() << ", interdicted {";
  const char* sep = "";
  for (std::size_t j = 0; j < inst.size(); ++j) {
    if (r.leader[j]) {
      std::cout << sep << j;
      sep = ",";
    }
  }
  std::cout << "}, " << (interdict::verify(inst, r).ok() ? "verified" : "NOT verified") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 7;
  try {
    const interdict::Instance one = interdict::gen_random(8, 1, 1, interdict::ValueGrid{}, seed);
    const interdict::Instance two = interdict::gen_random(7, 1, 2, interdict::ValueGrid{}, seed);
    std::cout << interdict::serialize(one);

    print("exact", one, interdict::solve_exact_bilevel(one));
    interdict::ptas::Options popt;
    popt.exhaustive = true;
    print("ptas eps=1/4", one, interdict::ptas::solve(one, popt));

    interdict::ExactOracle oracle(one);
    const auto bi = interdict::bicriteria::solve(one, oracle);
    print("bicriteria alpha=1/2", one, bi.result);
    std::cout << "  certified bound " << bi.certified_bound.str() << " with leader budget x2\n";

    print("exact (s_B=2)", two, interdict::solve_exact_bilevel(two));
    interdict::general::Options gopt;
    gopt.exhaustive = true;
    print("general eps=1/2 (s_B=2)", two, interdict::general::solve(two, gopt));
  } catch (const interdict::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
