#include "subauc/item_set.hpp"

#include <string>

#include "subauc/errors.hpp"

namespace subauc {
namespace {

std::uint64_t bit(Item j) {
  if (j < 1 || j > ItemSet::kMaxItems) {
    throw InvalidArgument("item " + std::to_string(j) + " outside 1.." +
                          std::to_string(ItemSet::kMaxItems));
  }
  return std::uint64_t{1} << (j - 1);
}

}  // namespace

ItemSet::ItemSet(std::initializer_list<Item> items) {
  for (Item j : items) mask_ |= bit(j);
}

ItemSet::ItemSet(const std::vector<Item>& items) {
  for (Item j : items) mask_ |= bit(j);
}

ItemSet ItemSet::full(int m) {
  if (m < 0 || m > kMaxItems) throw InvalidArgument("ground set size " + std::to_string(m));
  return from_mask(m == 0 ? 0 : (~std::uint64_t{0} >> (64 - m)));
}

bool ItemSet::contains(Item j) const {
  return j >= 1 && j <= kMaxItems && (mask_ & (std::uint64_t{1} << (j - 1))) != 0;
}

void ItemSet::insert(Item j) { mask_ |= bit(j); }

void ItemSet::erase(Item j) { mask_ &= ~bit(j); }

std::vector<Item> ItemSet::items() const {
  std::vector<Item> out;
  out.reserve(size());
  for (std::uint64_t rest = mask_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest) + 1);
  }
  return out;
}

std::string to_string(ItemSet s) {
  std::string out = "{";
  bool first = true;
  for (Item j : s.items()) {
    if (!first) out += ',';
    out += std::to_string(j);
    first = false;
  }
  return out + "}";
}

}  // namespace subauc
