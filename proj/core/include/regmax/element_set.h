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

#ifndef REGMAX_ELEMENT_SET_H_
#define REGMAX_ELEMENT_SET_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace regmax {

// Ground-set elements are the dense ids 0..n-1.
using Element = std::int32_t;

// Subset of a ground set of size universe(). Remembers insertion order so
// that solution prefixes S_0 ⊂ S_1 ⊂ ... can be replayed.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : in_(universe, 0) {}
  ElementSet(std::size_t universe, std::span<const Element> members);
  ElementSet(std::size_t universe, std::initializer_list<Element> members)
      : ElementSet(universe, std::span<const Element>(members.begin(),
                                                      members.size())) {}

  std::size_t universe() const { return in_.size(); }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  bool Contains(Element e) const {
    return e >= 0 && static_cast<std::size_t>(e) < in_.size() && in_[e];
  }

  // Throws PreconditionError on an out-of-range id or a duplicate.
  void Insert(Element e);

  // Members in insertion order.
  const std::vector<Element>& members() const { return members_; }
  std::vector<Element> Sorted() const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.in_ == b.in_;
  }

 private:
  std::vector<Element> members_;
  std::vector<char> in_;
};

// Members of the bitmask `mask` over ground set {0..n-1}, ascending.
std::vector<Element> MaskMembers(std::uint64_t mask, std::size_t n);

}  // namespace regmax

#endif  // REGMAX_ELEMENT_SET_H_
