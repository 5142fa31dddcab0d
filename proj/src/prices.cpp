#include "subauc/prices.hpp"

#include <string>

#include "subauc/errors.hpp"

namespace subauc {

PriceVector::PriceVector(int m) {
  if (m < 0 || m > ItemSet::kMaxItems) throw InvalidArgument("price vector of size " + std::to_string(m));
  prices_.resize(static_cast<std::size_t>(m));
}

PriceVector::PriceVector(std::vector<Rational> prices) : prices_(std::move(prices)) {
  if (prices_.size() > static_cast<std::size_t>(ItemSet::kMaxItems)) {
    throw InvalidArgument("price vector of size " + std::to_string(prices_.size()));
  }
  for (std::size_t j = 0; j < prices_.size(); ++j) {
    if (prices_[j] < 0) throw InvalidArgument("negative price for item " + std::to_string(j + 1));
  }
}

PriceVector PriceVector::uniform(int m, const Rational& price) {
  PriceVector p(m);
  for (Item j = 1; j <= m; ++j) p.set(j, price);
  return p;
}

const Rational& PriceVector::at(Item j) const {
  if (j < 1 || j > size()) throw InvalidArgument("no price for item " + std::to_string(j));
  return prices_[static_cast<std::size_t>(j - 1)];
}

void PriceVector::set(Item j, Rational price) {
  if (j < 1 || j > size()) throw InvalidArgument("no price for item " + std::to_string(j));
  if (price < 0) throw InvalidArgument("negative price for item " + std::to_string(j));
  prices_[static_cast<std::size_t>(j - 1)] = std::move(price);
}

void PriceVector::raise(ItemSet s, const Rational& delta) {
  if (delta <= 0) throw InvalidArgument("price increment must be positive");
  if (!s.within(size())) throw InvalidArgument("raise of " + to_string(s) + " leaves the ground set");
  for (Item j : s.items()) prices_[static_cast<std::size_t>(j - 1)] += delta;
}

Rational PriceVector::of(ItemSet s) const {
  if (!s.within(size())) throw InvalidArgument("set " + to_string(s) + " leaves the ground set");
  Rational total;
  for (std::uint64_t rest = s.mask(); rest != 0; rest &= rest - 1) {
    total += prices_[static_cast<std::size_t>(std::countr_zero(rest))];
  }
  return total;
}

bool PriceVector::dominated_by(const PriceVector& q) const {
  if (q.size() != size()) throw InvalidArgument("price vectors of different sizes");
  for (std::size_t j = 0; j < prices_.size(); ++j) {
    if (prices_[j] > q.prices_[j]) return false;
  }
  return true;
}

}  // namespace subauc
