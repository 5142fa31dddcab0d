#pragma once

#include <optional>
#include <utility>

#include "subauc/valuation.hpp"

namespace subauc {

struct MonotoneReport {
  bool holds = true;
  /// (S, x) with x not in S and v(S + x) < v(S).
  std::optional<std::pair<ItemSet, Item>> counterexample;
};

struct SubmodularReport {
  bool holds = true;
  /// (S, T) with v(S u T) + v(S n T) > v(S) + v(T).
  std::optional<std::pair<ItemSet, ItemSet>> counterexample;
  /// Whether the pairwise definition scan also ran and agreed.
  bool cross_checked = false;
};

/// Largest ground set for which check_submodular also runs the 4^m
/// pairwise definition scan as a cross-check.
inline constexpr int kDefinitionCrossCheckItems = 12;

/// Exhaustive v(S + x) >= v(S) scan, subsets in ascending mask order.
/// Throws GroundSetTooLarge for m > 20.
MonotoneReport check_monotone(const Valuation& v);

/// Definition form: v(S u T) + v(S n T) <= v(S) + v(T) over all pairs.
/// O(4^m); throws GroundSetTooLarge for m > 20.
SubmodularReport submodular_by_definition(const Valuation& v);

/// Decreasing-marginals form: v(S + x) - v(S) >= v(T + x) - v(T) for
/// S subset of T, x not in T. Chains telescope, so checking T = S + y
/// suffices; O(2^m m^2).
SubmodularReport submodular_by_marginals(const Valuation& v);

/// Marginal form, cross-validated against the definition form when
/// m <= kDefinitionCrossCheckItems. Disagreement throws std::logic_error.
SubmodularReport check_submodular(const Valuation& v);

}  // namespace subauc
