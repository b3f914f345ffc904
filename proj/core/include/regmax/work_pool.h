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

#ifndef REGMAX_WORK_POOL_H_
#define REGMAX_WORK_POOL_H_

#include <cstddef>
#include <functional>

namespace regmax {

// Calls fn(i) for every i in [0, count) on up to `threads` worker threads
// (0 picks the hardware concurrency). Tasks are claimed in index order; the
// exception of the lowest failing index, if any, is rethrown after all
// workers finish. Results should be written to per-index slots so the
// merged output does not depend on completion order.
void ParallelFor(std::size_t count, std::size_t threads,
                 const std::function<void(std::size_t)>& fn);

}  // namespace regmax

#endif  // REGMAX_WORK_POOL_H_
