#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace celltransfer {

using ElementId = int;

/// A subset of the elements {0, ..., 63} of a poset, stored as a bitmask.
class ElementSet {
 public:
  static constexpr int kCapacity = 64;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = ElementId;
    using difference_type = std::ptrdiff_t;
    using pointer = const ElementId*;
    using reference = ElementId;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    ElementId operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  ElementSet(std::initializer_list<ElementId> ids) {
    for (ElementId id : ids) insert(id);
  }

  static constexpr ElementSet first(int n) {
    return ElementSet(n >= kCapacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr ElementSet single(ElementId id) { return ElementSet(std::uint64_t{1} << id); }
  static ElementSet from(const std::vector<ElementId>& ids) {
    ElementSet s;
    for (ElementId id : ids) s.insert(id);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(ElementId id) const { return (bits_ >> id) & 1U; }
  constexpr void insert(ElementId id) { bits_ |= std::uint64_t{1} << id; }
  constexpr void erase(ElementId id) { bits_ &= ~(std::uint64_t{1} << id); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(ElementSet other) const { return (bits_ & other.bits_) != 0; }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<ElementId> to_vector() const { return {begin(), end()}; }

  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  constexpr ElementSet operator-(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }
  constexpr ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator-=(ElementSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  constexpr bool operator==(const ElementSet&) const = default;
  constexpr auto operator<=>(const ElementSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace celltransfer

template <>
struct std::hash<celltransfer::ElementSet> {
  std::size_t operator()(celltransfer::ElementSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};
