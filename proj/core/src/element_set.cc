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

#include "regmax/element_set.h"

#include <algorithm>
#include <string>

#include "regmax/errors.h"

namespace regmax {

ElementSet::ElementSet(std::size_t universe, std::span<const Element> members)
    : in_(universe, 0) {
  members_.reserve(members.size());
  for (Element e : members) Insert(e);
}

void ElementSet::Insert(Element e) {
  if (e < 0 || static_cast<std::size_t>(e) >= in_.size()) {
    throw PreconditionError("element " + std::to_string(e) +
                            " outside ground set of size " +
                            std::to_string(in_.size()));
  }
  if (in_[e]) {
    throw PreconditionError("element " + std::to_string(e) +
                            " already in set");
  }
  in_[e] = 1;
  members_.push_back(e);
}

std::vector<Element> ElementSet::Sorted() const {
  std::vector<Element> out = members_;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> MaskMembers(std::uint64_t mask, std::size_t n) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask >> i & 1ULL) out.push_back(static_cast<Element>(i));
  }
  return out;
}

}  // namespace regmax
