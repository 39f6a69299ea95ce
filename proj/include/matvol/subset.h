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

#ifndef MATVOL_SUBSET_H_
#define MATVOL_SUBSET_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace matvol {

// Ground sets are {0, ..., n-1} with n <= kMaxGroundSize.
inline constexpr int kMaxGroundSize = 30;

// A subset of the ground set, stored as a bitmask.
class Subset {
 public:
  using Mask = std::uint32_t;

  constexpr Subset() = default;
  constexpr explicit Subset(Mask bits) : bits_(bits) {}

  static constexpr Subset full(int n) {
    return Subset(n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1);
  }
  static constexpr Subset singleton(int element) {
    return Subset(Mask{1} << element);
  }
  static Subset from_elements(std::span<const int> elements);

  constexpr Mask bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int element) const {
    return (bits_ >> element) & 1U;
  }
  constexpr bool is_subset_of(Subset other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool is_proper_subset_of(Subset other) const {
    return is_subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool comparable(Subset other) const {
    return is_subset_of(other) || other.is_subset_of(*this);
  }
  constexpr Subset with(int element) const {
    return Subset(bits_ | (Mask{1} << element));
  }
  constexpr Subset without(int element) const {
    return Subset(bits_ & ~(Mask{1} << element));
  }

  std::vector<int> elements() const;
  // "{0,2,3}"
  std::string to_string() const;

  friend constexpr Subset operator|(Subset a, Subset b) {
    return Subset(a.bits_ | b.bits_);
  }
  friend constexpr Subset operator&(Subset a, Subset b) {
    return Subset(a.bits_ & b.bits_);
  }
  // Set difference.
  friend constexpr Subset operator-(Subset a, Subset b) {
    return Subset(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset, Subset) = default;

 private:
  Mask bits_ = 0;
};

// Canonical order used for output: by size, then lexicographically by the
// sorted element list.
bool canonical_less(Subset a, Subset b);

// Calls f(s) for every subset s of `universe` of cardinality k.
void for_each_subset_of_size(Subset universe, int k,
                             const std::function<void(Subset)>& f);

}  // namespace matvol

template <>
struct std::hash<matvol::Subset> {
  std::size_t operator()(matvol::Subset s) const noexcept {
    return std::hash<matvol::Subset::Mask>{}(s.bits());
  }
};

#endif  // MATVOL_SUBSET_H_
