#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace subauc {

/// Items are numbered 1..m.
using Item = int;

/// A subset of the ground set {1..m}, stored as a bitmask (item j is bit j-1).
class ItemSet {
 public:
  static constexpr int kMaxItems = 63;

  constexpr ItemSet() = default;
  ItemSet(std::initializer_list<Item> items);
  explicit ItemSet(const std::vector<Item>& items);

  static constexpr ItemSet from_mask(std::uint64_t mask) {
    ItemSet s;
    s.mask_ = mask;
    return s;
  }
  /// {1..m}
  static ItemSet full(int m);

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }

  bool contains(Item j) const;
  void insert(Item j);
  void erase(Item j);

  /// Every member lies in {1..m}.
  constexpr bool within(int m) const {
    return m >= kMaxItems + 1 || (mask_ >> m) == 0;
  }
  constexpr bool subset_of(ItemSet other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  constexpr bool disjoint(ItemSet other) const {
    return (mask_ & other.mask_) == 0;
  }

  /// Members in ascending order.
  std::vector<Item> items() const;

  friend constexpr ItemSet operator|(ItemSet a, ItemSet b) {
    return from_mask(a.mask_ | b.mask_);
  }
  friend constexpr ItemSet operator&(ItemSet a, ItemSet b) {
    return from_mask(a.mask_ & b.mask_);
  }
  friend constexpr ItemSet operator-(ItemSet a, ItemSet b) {
    return from_mask(a.mask_ & ~b.mask_);
  }
  friend constexpr bool operator==(ItemSet a, ItemSet b) = default;

 private:
  std::uint64_t mask_ = 0;
};

/// Canonical order on item sets: smaller cardinality first, then the
/// lexicographically smaller sorted item list.
constexpr bool canonical_less(ItemSet a, ItemSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const std::uint64_t diff = a.mask() ^ b.mask();
  if (diff == 0) return false;
  // The smallest item where the lists diverge belongs to the smaller list.
  return (a.mask() & (diff & (~diff + 1))) != 0;
}

/// "{1,2,3}"
std::string to_string(ItemSet s);

}  // namespace subauc
