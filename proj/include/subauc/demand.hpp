#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "subauc/prices.hpp"
#include "subauc/valuation.hpp"

namespace subauc {

/// Maximum utility at given prices plus the canonical maximizer
/// (smallest cardinality, then lexicographically smallest).
struct DemandResult {
  Rational max_utility;
  ItemSet witness;
  /// Number of maximizers; only the exhaustive oracle fills this in.
  std::optional<std::uint64_t> argmax_count;

  friend bool operator==(const DemandResult&, const DemandResult&) = default;
};

/// v(S) - p(S).
Rational utility(const Valuation& v, const PriceVector& p, ItemSet s);

/// Reference oracle: scans all 2^m subsets. m <= 20.
DemandResult brute_force_demand(const Valuation& v, const PriceVector& p);

inline constexpr int kMaxDemandSetItems = 16;

/// Every utility maximizer in canonical order. Throws CapExceeded when
/// there are more than `cap`. m <= 16.
std::vector<ItemSet> demand_sets(const Valuation& v, const PriceVector& p, std::size_t cap);

/// Items ordered by ascending price, ties by ascending index.
std::vector<Item> sort_by_price(const PriceVector& p, ItemSet among);

/// The far-regime candidate: the l cheapest items for the largest l with
/// p(j_l) <= 1/s - (2l - 1)/(4s^2).
ItemSet algorithm_zero(const PriceVector& p, int s);

/// Every set S_{l,kappa} marked by the peak algorithm for `peak`: for each
/// eps*s < l <= s, the l cheapest peak items plus the kappa cheapest
/// outside items, kappa maximal with kappa + eps*s < l and
/// p(j_l) + p(j'_kappa) <= 3/(2s) - (2(kappa + l) - eps*s)/(4s^2).
/// The outside term is 0 when kappa = 0. Ordered by l.
std::vector<ItemSet> peak_marked_sets(const PriceVector& p, ItemSet peak, int s, const Rational& eps);

/// Best marked set for `peak` under the true valuation `v` (which must be
/// multi-peak), or nothing if no set was marked. Throws InvalidArgument if
/// |peak| != s.
std::optional<ItemSet> algorithm_peak(const Valuation& v, const PriceVector& p, ItemSet peak);

/// Polynomial demand oracle for multi-peak valuations: best of the empty
/// set, algorithm_zero, and algorithm_peak for every peak.
DemandResult multipeak_demand(const Valuation& v, const PriceVector& p);

DemandResult additive_demand(const Valuation& v, const PriceVector& p);
DemandResult unit_demand_demand(const Valuation& v, const PriceVector& p);
/// NP-hard in general; exhaustive.
DemandResult budget_additive_demand(const Valuation& v, const PriceVector& p);

/// Whether fast_demand supports the valuation's class.
bool has_fast_oracle(const Valuation& v);

/// Class-specific polynomial oracle. Throws NoFastOracle for budget-additive
/// and explicit valuations.
DemandResult fast_demand(const Valuation& v, const PriceVector& p);

/// fast_demand where available, brute_force_demand otherwise.
DemandResult demand(const Valuation& v, const PriceVector& p);

}  // namespace subauc
