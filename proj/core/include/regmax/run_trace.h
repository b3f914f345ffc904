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

#ifndef REGMAX_RUN_TRACE_H_
#define REGMAX_RUN_TRACE_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "regmax/element_set.h"

namespace regmax {

// Everything an algorithm run leaves behind. prefix_objectives[i] is
// h(S_i) = f(S_i) - c(S_i) for the prefix of the first i added elements, so
// prefix_objectives[0] = h(∅) = 0 and the vector has added.size() + 1
// entries. best is the shortest prefix attaining the maximum.
struct RunTrace {
  std::string algorithm;
  std::map<std::string, double> params;
  std::vector<Element> added;
  std::vector<double> prefix_objectives{0.0};
  std::int64_t oracle_calls = 0;
  std::vector<Element> best;
  double best_value = 0.0;
  std::uint64_t seed = 0;

  // Replay data, one entry per added element: the threshold it had to clear
  // (UP: popped key tau_i; threshold-ROI: current tau; gamma-ROI: gamma;
  // UDG: c(e) / distortion, compared against the raw gain) and the fresh
  // density f(e | S) / c(e) it was accepted with.
  std::vector<double> accept_keys;
  std::vector<double> accept_densities;

  // Appends an accepted element. `objective` is h(S_i) after adding it.
  void RecordAdd(Element e, double objective, double key, double density);
  // Sets best/best_value from prefix_objectives (earliest maximum).
  void SelectBestPrefix();
};

// JSON object with keys algorithm, params, added, prefix_objectives,
// oracle_calls, best, best_value, seed, accept_keys, accept_densities.
std::string TraceToJson(const RunTrace& trace, int indent = 2);
// Throws std::invalid_argument on malformed input.
RunTrace TraceFromJson(std::string_view json);

// Human-readable multi-line summary used by `regmax inspect`.
std::string FormatTrace(const RunTrace& trace);

}  // namespace regmax

#endif  // REGMAX_RUN_TRACE_H_
