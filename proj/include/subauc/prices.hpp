#pragma once

#include <span>
#include <vector>

#include "subauc/item_set.hpp"
#include "subauc/rational.hpp"

namespace subauc {

/// Nonnegative per-item prices, extended additively to sets.
class PriceVector {
 public:
  /// All-zero prices on m items.
  explicit PriceVector(int m);
  /// Throws InvalidArgument on a negative entry.
  explicit PriceVector(std::vector<Rational> prices);

  static PriceVector uniform(int m, const Rational& price);

  int size() const { return static_cast<int>(prices_.size()); }

  /// Price of item j (1-based).
  const Rational& at(Item j) const;
  void set(Item j, Rational price);
  /// Adds `delta` > 0 to every item of S.
  void raise(ItemSet s, const Rational& delta);

  /// p(S) = sum of p(j) over S.
  Rational of(ItemSet s) const;

  std::span<const Rational> values() const { return prices_; }

  /// Componentwise p <= q.
  bool dominated_by(const PriceVector& q) const;

  friend bool operator==(const PriceVector&, const PriceVector&) = default;

 private:
  std::vector<Rational> prices_;
};

}  // namespace subauc
