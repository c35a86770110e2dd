#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

#include "mcx/error.hpp"

namespace mcx {

/// Set of small non-negative integers (< 64) packed into one machine word.
///
/// Used both for matchings (indices into a graph's edge list) and for faces of
/// a complex (positions into its label list), so that union, intersection and
/// containment are single word operations.
class IndexSet {
 public:
  static constexpr int kCapacity = 64;

  constexpr IndexSet() noexcept = default;
  constexpr explicit IndexSet(std::uint64_t bits) noexcept : bits_(bits) {}
  IndexSet(std::initializer_list<int> items) {
    for (int i : items) insert(i);
  }

  static IndexSet from(std::span<const int> items) {
    IndexSet s;
    for (int i : items) s.insert(i);
    return s;
  }

  static constexpr IndexSet range(int n) noexcept {
    return IndexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(int i) const noexcept { return (bits_ >> i) & 1U; }
  constexpr bool subset_of(IndexSet o) const noexcept { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(IndexSet o) const noexcept { return (bits_ & o.bits_) != 0; }
  constexpr int min() const noexcept { return std::countr_zero(bits_); }
  constexpr int max() const noexcept { return 63 - std::countl_zero(bits_); }

  void insert(int i) {
    if (i < 0 || i >= kCapacity) throw Error(Errc::TooLarge, "index " + std::to_string(i) + " exceeds set capacity 64");
    bits_ |= std::uint64_t{1} << i;
  }
  constexpr void erase(int i) noexcept { bits_ &= ~(std::uint64_t{1} << i); }
  constexpr IndexSet with(int i) const noexcept { return IndexSet(bits_ | (std::uint64_t{1} << i)); }
  constexpr IndexSet without(int i) const noexcept { return IndexSet(bits_ & ~(std::uint64_t{1} << i)); }

  constexpr IndexSet operator|(IndexSet o) const noexcept { return IndexSet(bits_ | o.bits_); }
  constexpr IndexSet operator&(IndexSet o) const noexcept { return IndexSet(bits_ & o.bits_); }
  constexpr IndexSet operator-(IndexSet o) const noexcept { return IndexSet(bits_ & ~o.bits_); }

  constexpr bool operator==(const IndexSet&) const noexcept = default;
  // Numeric order on the packed word; use lex_less for element-wise ordering.
  constexpr auto operator<=>(const IndexSet&) const noexcept = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = int;

    constexpr iterator() noexcept = default;
    constexpr explicit iterator(std::uint64_t rest) noexcept : rest_(rest) {}
    constexpr int operator*() const noexcept { return std::countr_zero(rest_); }
    constexpr iterator& operator++() noexcept {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) noexcept {
      iterator t = *this;
      ++*this;
      return t;
    }
    constexpr bool operator==(const iterator&) const noexcept = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const noexcept { return iterator(bits_); }
  constexpr iterator end() const noexcept { return iterator(0); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int i : *this) out.push_back(i);
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order of the increasing element sequences ({0,2} < {0,2,5} < {1}).
constexpr bool lex_less(IndexSet a, IndexSet b) noexcept {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const int t = std::countr_zero(diff);
  if (a.contains(t)) return (b.bits() >> t) != 0;
  return (a.bits() >> t) == 0;
}

/// Size first, then lexicographic.
constexpr bool size_lex_less(IndexSet a, IndexSet b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

/// Calls fn(subset) for every subset of s, including the empty set and s itself.
template <typename Fn>
void for_each_subset(IndexSet s, Fn&& fn) {
  const std::uint64_t full = s.bits();
  std::uint64_t sub = full;
  while (true) {
    fn(IndexSet(sub));
    if (sub == 0) break;
    sub = (sub - 1) & full;
  }
}

}  // namespace mcx
