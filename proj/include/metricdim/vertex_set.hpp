/*
Copyright 2026 The metricdim Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace metricdim {

/// Set of vertex ids in [0, 64) packed into one machine word.
class VertexSet {
 public:
  static constexpr int capacity = 64;

  constexpr VertexSet() noexcept = default;
  constexpr explicit VertexSet(std::uint64_t bits) noexcept : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<int> ids) noexcept {
    for (int v : ids) insert(v);
  }

  /// {0, 1, ..., n-1}
  static constexpr VertexSet range(int n) noexcept {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) noexcept { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool contains(int v) const noexcept { return (bits_ >> v) & 1U; }
  constexpr void insert(int v) noexcept { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) noexcept { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  /// Smallest member; undefined on the empty set.
  constexpr int front() const noexcept { return std::countr_zero(bits_); }
  constexpr bool intersects(VertexSet o) const noexcept { return (bits_ & o.bits_) != 0; }
  constexpr bool subset_of(VertexSet o) const noexcept { return (bits_ & ~o.bits_) == 0; }

  constexpr VertexSet operator&(VertexSet o) const noexcept { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator|(VertexSet o) const noexcept { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator^(VertexSet o) const noexcept { return VertexSet(bits_ ^ o.bits_); }
  /// Set difference.
  constexpr VertexSet operator-(VertexSet o) const noexcept { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator&=(VertexSet o) noexcept { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator|=(VertexSet o) noexcept { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) noexcept { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const VertexSet&) const noexcept = default;
  /// Orders by the packed word, not lexicographically by members.
  constexpr auto operator<=>(const VertexSet&) const noexcept = default;

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::forward_iterator_tag;

    constexpr iterator() noexcept = default;
    constexpr explicit iterator(std::uint64_t rest) noexcept : rest_(rest) {}
    constexpr int operator*() const noexcept { return std::countr_zero(rest_); }
    constexpr iterator& operator++() noexcept {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) noexcept {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const noexcept = default;

   private:
    std::uint64_t rest_ = 0;
  };

  /// Ascending order.
  constexpr iterator begin() const noexcept { return iterator(bits_); }
  constexpr iterator end() const noexcept { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace metricdim
