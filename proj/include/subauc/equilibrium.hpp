#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "subauc/demand.hpp"
#include "subauc/instance.hpp"

namespace subauc {

/// One (possibly empty) item set per bidder.
struct Allocation {
  std::vector<ItemSet> assigned;

  bool pairwise_disjoint() const;
  /// Union of all assigned sets.
  ItemSet allocated() const;

  friend bool operator==(const Allocation&, const Allocation&) = default;
};

enum class WitnessKind { kOverdemandedSet, kExhaustionProof };

/// Certificate that prices admit no envy-free allocation.
///
/// kOverdemandedSet: every listed demander (0-based bidder index) needs at
/// least one item of `items` in each of its demand sets, and there are more
/// demanders than items. kExhaustionProof: the backtracking search ran dry;
/// `items` is the union of the demand sets of the bidders that cannot take
/// the empty set, which are listed as demanders.
struct Witness {
  WitnessKind kind = WitnessKind::kExhaustionProof;
  ItemSet items;
  std::vector<int> demanders;
};

struct EnvyFreeReport {
  bool envy_free = false;
  std::optional<Allocation> allocation;
  std::optional<Witness> witness;
  std::uint64_t nodes_explored = 0;
};

/// Backtracking search for pairwise-disjoint demand sets, one per bidder.
/// Bidders are tried by descending minimum demand-set size, sets in
/// canonical order. Throws CapExceeded when a bidder has more than `cap`
/// demand sets. m <= 16.
EnvyFreeReport envy_free_allocation(const Instance& instance, const PriceVector& p, std::size_t cap);

/// Per-bidder recheck: disjoint, one set per bidder, each set attains the
/// bidder's exhaustive maximum utility.
bool allocation_is_envy_free(const Instance& instance, const PriceVector& p, const Allocation& alloc);

/// Envy-freeness for unit-demand bidders as bipartite matching. Bidders
/// whose maximum utility is 0 may go unmatched. On failure returns an
/// inclusion-minimal overdemanded item set. Throws InvalidArgument for a
/// non-unit-demand bidder.
std::variant<Allocation, Witness> unit_demand_envy_free(const Instance& instance, const PriceVector& p);

/// Checks the overdemand inequality: more than |items| bidders among the
/// listed demanders have a nonempty demand whose every set meets `items`,
/// and the empty set is not in their demand. Exhaustive; m <= 16.
bool witness_is_overdemanded(const Instance& instance, const PriceVector& p, const Witness& w);

inline constexpr std::uint64_t kDefaultGridLimit = 10'000'000;

struct MinimalEnvyFreeResult {
  /// Grid-minimal envy-free price vectors in canonical (lexicographic) order.
  std::vector<PriceVector> minimal;
  std::uint64_t grid_points = 0;
  std::uint64_t envy_free_points = 0;
  Rational bound;
  Rational step;
};

/// Enumerates the lattice {0, step, 2 step, ...} ∩ [0, bound] in every
/// coordinate and returns the envy-free points that strictly dominate no
/// other envy-free grid point. Minimality is relative to the grid only.
/// Throws CapExceeded if the grid has more than `grid_limit` points.
MinimalEnvyFreeResult minimal_envy_free(const Instance& instance, const Rational& bound,
                                        const Rational& step,
                                        std::uint64_t grid_limit = kDefaultGridLimit);

/// Every unallocated item has price 0. Throws InvalidArgument if `alloc`
/// is not envy-free at `p`.
bool is_walrasian(const Instance& instance, const PriceVector& p, const Allocation& alloc);

}  // namespace subauc
