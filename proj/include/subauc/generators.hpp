#pragma once

#include <cstdint>
#include <random>

#include "subauc/instance.hpp"
#include "subauc/prices.hpp"

namespace subauc {

/// Seeded source with portable bounded draws (the standard distributions
/// are implementation-defined, which would break cross-platform fixtures).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform integer in [lo, hi].
  long long uniform(long long lo, long long hi);
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Closed integer range.
struct ValueRange {
  long long lo = 0;
  long long hi = 0;
};

inline constexpr int kPeakPlacementRetries = 10'000;

struct MultiPeakParams {
  int m = 0;
  int s = 0;
  int k = 0;
  Rational epsilon;
  int n = 1;
  /// All bidders share one set system; otherwise each draws its own.
  bool shared = true;
};

/// Random set systems via rejection sampling. Throws InvalidArgument for
/// eps outside (0,1), s outside [1, m], or when the peaks cannot be placed
/// within kPeakPlacementRetries draws.
Instance gen_multipeak(const MultiPeakParams& params, std::uint64_t seed);
Instance gen_budget_additive(int n, int m, ValueRange values, ValueRange budgets, std::uint64_t seed);
Instance gen_unit_demand(int n, int m, ValueRange values, std::uint64_t seed);
Instance gen_additive(int n, int m, ValueRange values, std::uint64_t seed);

/// Uniform prices k/denominator with 0 <= k <= max_numerator.
PriceVector gen_prices(int m, long long max_numerator, long long denominator, Rng& rng);

/// Fixed eight-item, two-peak instance: s = 4, eps = 1/2, peaks {1,2,3,4}
/// and {5,6,7,8}, with `n` identical bidders.
Instance multipeak_fixture(int n);

}  // namespace subauc
