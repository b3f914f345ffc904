// Copyright 2026 The Authors.
//
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

#include "regmax/run_trace.h"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace regmax {

using nlohmann::json;

void RunTrace::RecordAdd(Element e, double objective, double key,
                         double density) {
  added.push_back(e);
  prefix_objectives.push_back(objective);
  accept_keys.push_back(key);
  accept_densities.push_back(density);
}

void RunTrace::SelectBestPrefix() {
  std::size_t best_len = 0;
  for (std::size_t i = 1; i < prefix_objectives.size(); ++i) {
    if (prefix_objectives[i] > prefix_objectives[best_len]) best_len = i;
  }
  best.assign(added.begin(), added.begin() + static_cast<long>(best_len));
  best_value = prefix_objectives[best_len];
}

std::string TraceToJson(const RunTrace& trace, int indent) {
  json j;
  j["algorithm"] = trace.algorithm;
  j["params"] = trace.params;
  j["added"] = trace.added;
  j["prefix_objectives"] = trace.prefix_objectives;
  j["oracle_calls"] = trace.oracle_calls;
  j["best"] = trace.best;
  j["best_value"] = trace.best_value;
  j["seed"] = trace.seed;
  j["accept_keys"] = trace.accept_keys;
  j["accept_densities"] = trace.accept_densities;
  return j.dump(indent);
}

RunTrace TraceFromJson(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
    RunTrace t;
    t.algorithm = j.at("algorithm").get<std::string>();
    t.params = j.at("params").get<std::map<std::string, double>>();
    t.added = j.at("added").get<std::vector<Element>>();
    t.prefix_objectives = j.at("prefix_objectives").get<std::vector<double>>();
    t.oracle_calls = j.at("oracle_calls").get<std::int64_t>();
    t.best = j.at("best").get<std::vector<Element>>();
    t.best_value = j.at("best_value").get<double>();
    t.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("accept_keys")) {
      t.accept_keys = j["accept_keys"].get<std::vector<double>>();
    }
    if (j.contains("accept_densities")) {
      t.accept_densities = j["accept_densities"].get<std::vector<double>>();
    }
    if (t.prefix_objectives.size() != t.added.size() + 1) {
      throw std::invalid_argument(
          "prefix_objectives must have one more entry than added");
    }
    return t;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed trace JSON: ") +
                                e.what());
  }
}

std::string FormatTrace(const RunTrace& trace) {
  std::ostringstream out;
  out << "algorithm    " << trace.algorithm << "\n";
  for (const auto& [key, value] : trace.params) {
    out << "  " << key << " = " << value << "\n";
  }
  out << "seed         " << trace.seed << "\n";
  out << "oracle calls " << trace.oracle_calls << "\n";
  out << "best value   " << trace.best_value << "  (|best| = "
      << trace.best.size() << ")\n";
  out << "step  element  objective\n";
  char line[96];
  std::snprintf(line, sizeof(line), "%4d  %7s  %.6g\n", 0, "-",
                trace.prefix_objectives.front());
  out << line;
  for (std::size_t i = 0; i < trace.added.size(); ++i) {
    std::snprintf(line, sizeof(line), "%4zu  %7d  %.6g%s\n", i + 1,
                  trace.added[i], trace.prefix_objectives[i + 1],
                  i + 1 == trace.best.size() ? "  <- best" : "");
    out << line;
  }
  return out.str();
}

}  // namespace regmax
