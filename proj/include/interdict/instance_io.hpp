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

#ifndef INTERDICT_INSTANCE_IO_HPP_
#define INTERDICT_INSTANCE_IO_HPP_

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "interdict/generators.hpp"
#include "interdict/instance.hpp"

namespace interdict {

using Json = nlohmann::ordered_json;

inline Json to_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

inline Rational rational_from_json(const Json& j) {
  try {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  throw Error(ErrorCode::kParse, "expected rational string, got " + j.dump());
}

inline Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParse, "expected array, got " + j.dump());
  Vec v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

inline Json to_json(const Instance& inst) {
  Json doc;
  doc["version"] = 1;
  doc["s_a"] = inst.s_a;
  doc["s_b"] = inst.s_b;
  doc["leader_budget"] = to_json(inst.leader_budget);
  doc["follower_budget"] = to_json(inst.follower_budget);
  Json items = Json::array();
  for (const auto& it : inst.items) {
    Json o;
    o["p"] = it.profit.str();
    o["cost"] = to_json(it.cost);
    o["weight"] = to_json(it.weight);
    items.push_back(std::move(o));
  }
  doc["items"] = std::move(items);
  return doc;
}

inline Instance instance_from_json(const Json& doc) {
  auto field = [&](const char* key) -> const Json& {
    if (!doc.contains(key)) throw Error(ErrorCode::kParse, std::string("missing field ") + key);
    return doc.at(key);
  };
  if (field("version") != 1) throw Error(ErrorCode::kParse, "unsupported version");
  Instance inst;
  inst.s_a = field("s_a").get<std::size_t>();
  inst.s_b = field("s_b").get<std::size_t>();
  inst.leader_budget = vec_from_json(field("leader_budget"));
  inst.follower_budget = vec_from_json(field("follower_budget"));
  for (const auto& o : field("items")) {
    Item it;
    it.id = inst.items.size();
    if (!o.contains("p") || !o.contains("cost") || !o.contains("weight")) {
      throw Error(ErrorCode::kParse, "item needs p, cost, weight");
    }
    it.profit = rational_from_json(o.at("p"));
    it.cost = vec_from_json(o.at("cost"));
    it.weight = vec_from_json(o.at("weight"));
    inst.items.push_back(std::move(it));
  }
  inst.validate();
  return inst;
}

inline std::string serialize(const Instance& inst) { return to_json(inst).dump(1) + "\n"; }

inline Instance parse_instance(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  return instance_from_json(doc);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

// FNV-1a over the canonical serialization.
inline std::string instance_digest(const Instance& inst) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : serialize(inst)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Sets file: one set per line, three 1-based element ids separated by
// whitespace or commas; '#' starts a comment.
inline HittingSetInstance parse_sets(const std::string& text, std::size_t n_elements,
                                     std::size_t k) {
  HittingSetInstance hs;
  hs.n_elements = n_elements;
  hs.k = k;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    for (char& c : line) {
      if (c == ',') c = ' ';
    }
    std::istringstream row(line);
    std::vector<long> vals;
    long v;
    while (row >> v) vals.push_back(v);
    if (!row.eof()) throw Error(ErrorCode::kParse, "bad sets line: " + line);
    if (vals.empty()) continue;
    if (vals.size() != 3 || vals[0] < 1 || vals[1] < 1 || vals[2] < 1) {
      throw Error(ErrorCode::kInvalidHittingSet, "each set needs 3 positive ids: " + line);
    }
    hs.sets.push_back({static_cast<std::size_t>(vals[0]), static_cast<std::size_t>(vals[1]),
                       static_cast<std::size_t>(vals[2])});
  }
  hs.validate();
  return hs;
}

}  // namespace interdict

#endif  // INTERDICT_INSTANCE_IO_HPP_
