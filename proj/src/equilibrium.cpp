#include "subauc/equilibrium.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include "subauc/errors.hpp"

namespace subauc {
namespace {

void require_prices(const Instance& instance, const PriceVector& p) {
  validate_instance(instance);
  if (p.size() != instance.m) {
    throw InvalidArgument("price vector has " + std::to_string(p.size()) + " entries for " +
                          std::to_string(instance.m) + " items");
  }
}

// Bipartite bidder-item graph restricted to demanded singletons.
// match_of_item[j-1] is the bidder holding item j, or -1.
struct Matching {
  std::vector<int> match_of_item;
  std::vector<int> unmatched;
};

bool augment(int bidder, const std::vector<ItemSet>& neighbors, std::vector<int>& match_of_item,
             std::vector<char>& seen) {
  for (Item j : neighbors[static_cast<std::size_t>(bidder)].items()) {
    auto idx = static_cast<std::size_t>(j - 1);
    if (seen[idx]) continue;
    seen[idx] = 1;
    if (match_of_item[idx] < 0 || augment(match_of_item[idx], neighbors, match_of_item, seen)) {
      match_of_item[idx] = bidder;
      return true;
    }
  }
  return false;
}

Matching max_matching(const std::vector<int>& bidders, const std::vector<ItemSet>& neighbors, int m) {
  Matching result{std::vector<int>(static_cast<std::size_t>(m), -1), {}};
  for (int b : bidders) {
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    if (!augment(b, neighbors, result.match_of_item, seen)) result.unmatched.push_back(b);
  }
  return result;
}

// Items reachable from `root` by alternating paths. Since the matching is
// maximum, every reached item is matched and the reached bidders outnumber
// the reached items by one.
ItemSet alternating_reach(int root, const std::vector<ItemSet>& neighbors, const Matching& matching) {
  ItemSet items;
  std::vector<int> frontier{root};
  while (!frontier.empty()) {
    const int b = frontier.back();
    frontier.pop_back();
    for (Item j : (neighbors[static_cast<std::size_t>(b)] - items).items()) {
      items.insert(j);
      const int holder = matching.match_of_item[static_cast<std::size_t>(j - 1)];
      if (holder >= 0) frontier.push_back(holder);
    }
  }
  return items;
}

// An overdemanded set inside `within`, if any: by Hall's theorem one exists
// iff the bidders whose demanded items all lie in `within` cannot be matched.
std::optional<ItemSet> overdemanded_inside(ItemSet within, const std::vector<int>& demanders,
                                           const std::vector<ItemSet>& neighbors, int m) {
  std::vector<int> trapped;
  for (int b : demanders) {
    if (neighbors[static_cast<std::size_t>(b)].subset_of(within)) trapped.push_back(b);
  }
  const Matching matching = max_matching(trapped, neighbors, m);
  if (matching.unmatched.empty()) return std::nullopt;
  return alternating_reach(matching.unmatched.front(), neighbors, matching);
}

}  // namespace

bool Allocation::pairwise_disjoint() const {
  ItemSet seen;
  for (ItemSet s : assigned) {
    if (!s.disjoint(seen)) return false;
    seen = seen | s;
  }
  return true;
}

ItemSet Allocation::allocated() const {
  ItemSet all;
  for (ItemSet s : assigned) all = all | s;
  return all;
}

EnvyFreeReport envy_free_allocation(const Instance& instance, const PriceVector& p, std::size_t cap) {
  require_prices(instance, p);
  const int n = instance.num_bidders();
  std::vector<std::vector<ItemSet>> sets;
  sets.reserve(static_cast<std::size_t>(n));
  for (const auto& v : instance.bidders) sets.push_back(demand_sets(v, p, cap));

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return sets[static_cast<std::size_t>(a)].front().size() > sets[static_cast<std::size_t>(b)].front().size();
  });

  EnvyFreeReport report;
  std::vector<ItemSet> chosen(static_cast<std::size_t>(n));

  // Forward check: every bidder after `depth` still has a set avoiding `used`.
  auto feasible_after = [&](std::size_t depth, ItemSet used) {
    for (std::size_t k = depth; k < order.size(); ++k) {
      const auto& options = sets[static_cast<std::size_t>(order[k])];
      if (std::none_of(options.begin(), options.end(), [&](ItemSet s) { return s.disjoint(used); })) {
        return false;
      }
    }
    return true;
  };

  std::function<bool(std::size_t, ItemSet)> search = [&](std::size_t depth, ItemSet used) {
    if (depth == order.size()) return true;
    const int bidder = order[depth];
    for (ItemSet s : sets[static_cast<std::size_t>(bidder)]) {
      if (!s.disjoint(used)) continue;
      ++report.nodes_explored;
      const ItemSet next = used | s;
      if (!feasible_after(depth + 1, next)) continue;
      chosen[static_cast<std::size_t>(bidder)] = s;
      if (search(depth + 1, next)) return true;
    }
    return false;
  };

  if (search(0, ItemSet{})) {
    report.envy_free = true;
    report.allocation = Allocation{chosen};
    return report;
  }
  Witness w;
  w.kind = WitnessKind::kExhaustionProof;
  for (int i = 0; i < n; ++i) {
    const auto& options = sets[static_cast<std::size_t>(i)];
    if (options.front().empty()) continue;
    w.demanders.push_back(i);
    for (ItemSet s : options) w.items = w.items | s;
  }
  report.witness = std::move(w);
  return report;
}

bool allocation_is_envy_free(const Instance& instance, const PriceVector& p, const Allocation& alloc) {
  require_prices(instance, p);
  if (static_cast<int>(alloc.assigned.size()) != instance.num_bidders()) return false;
  if (!alloc.pairwise_disjoint()) return false;
  for (std::size_t i = 0; i < alloc.assigned.size(); ++i) {
    const ItemSet s = alloc.assigned[i];
    if (!s.within(instance.m)) return false;
    const Valuation& v = instance.bidders[i];
    if (utility(v, p, s) != brute_force_demand(v, p).max_utility) return false;
  }
  return true;
}

std::variant<Allocation, Witness> unit_demand_envy_free(const Instance& instance, const PriceVector& p) {
  require_prices(instance, p);
  const int n = instance.num_bidders();
  std::vector<ItemSet> neighbors(static_cast<std::size_t>(n));
  std::vector<int> demanders;
  for (int i = 0; i < n; ++i) {
    const auto* u = instance.bidders[static_cast<std::size_t>(i)].get_if<UnitDemand>();
    if (u == nullptr) {
      throw InvalidArgument("bidder " + std::to_string(i) + " is not unit-demand");
    }
    Rational best;
    for (Item j = 1; j <= instance.m; ++j) best = std::max(best, u->values[static_cast<std::size_t>(j - 1)] - p.at(j));
    if (best == 0) continue;  // the empty set is in demand
    for (Item j = 1; j <= instance.m; ++j) {
      if (u->values[static_cast<std::size_t>(j - 1)] - p.at(j) == best) neighbors[static_cast<std::size_t>(i)].insert(j);
    }
    demanders.push_back(i);
  }

  const Matching matching = max_matching(demanders, neighbors, instance.m);
  if (matching.unmatched.empty()) {
    Allocation alloc{std::vector<ItemSet>(static_cast<std::size_t>(n))};
    for (Item j = 1; j <= instance.m; ++j) {
      const int holder = matching.match_of_item[static_cast<std::size_t>(j - 1)];
      if (holder >= 0) alloc.assigned[static_cast<std::size_t>(holder)] = ItemSet{j};
    }
    return alloc;
  }

  // Shrink the Hall violator until no proper subset is overdemanded. Any
  // proper subset lies inside T - {t} for some t, so checking each of those
  // by matching certifies inclusion-minimality.
  ItemSet t = alternating_reach(matching.unmatched.front(), neighbors, matching);
  for (bool shrunk = true; shrunk;) {
    shrunk = false;
    for (Item j : t.items()) {
      ItemSet without = t;
      without.erase(j);
      if (auto smaller = overdemanded_inside(without, demanders, neighbors, instance.m)) {
        t = *smaller;
        shrunk = true;
        break;
      }
    }
  }

  Witness w{WitnessKind::kOverdemandedSet, t, {}};
  for (int b : demanders) {
    if (neighbors[static_cast<std::size_t>(b)].subset_of(t)) w.demanders.push_back(b);
  }
  return w;
}

bool witness_is_overdemanded(const Instance& instance, const PriceVector& p, const Witness& w) {
  require_prices(instance, p);
  std::vector<int> listed = w.demanders;
  std::sort(listed.begin(), listed.end());
  listed.erase(std::unique(listed.begin(), listed.end()), listed.end());
  int needing = 0;
  for (int i : listed) {
    if (i < 0 || i >= instance.num_bidders()) return false;
    const auto sets = demand_sets(instance.bidders[static_cast<std::size_t>(i)], p,
                                  std::numeric_limits<std::size_t>::max());
    const bool needs_items = std::all_of(sets.begin(), sets.end(), [&](ItemSet s) {
      return !s.empty() && !s.disjoint(w.items);
    });
    if (needs_items) ++needing;
  }
  return needing > w.items.size();
}

MinimalEnvyFreeResult minimal_envy_free(const Instance& instance, const Rational& bound,
                                        const Rational& step, std::uint64_t grid_limit) {
  validate_instance(instance);
  if (step <= 0) throw InvalidArgument("grid step must be positive");
  if (bound < 0) throw InvalidArgument("grid bound must be nonnegative");
  const int m = instance.m;
  const Integer per_axis_big = floor(bound / step) + 1;
  if (per_axis_big > Integer(grid_limit)) throw CapExceeded("grid exceeds point limit");
  const auto per_axis = static_cast<std::uint64_t>(per_axis_big);

  std::uint64_t total = 1;
  for (int j = 0; j < m; ++j) {
    if (total > grid_limit / per_axis) {
      throw CapExceeded("grid of " + per_axis_big.str() + "^" + std::to_string(m) +
                        " points exceeds limit of " + std::to_string(grid_limit));
    }
    total *= per_axis;
  }

  MinimalEnvyFreeResult result;
  result.bound = bound;
  result.step = step;
  result.grid_points = total;

  // Item 1 is the most significant coordinate, so index order is
  // lexicographic order on price vectors.
  std::vector<std::uint64_t> stride(static_cast<std::size_t>(m), 1);
  for (int j = m - 2; j >= 0; --j) stride[static_cast<std::size_t>(j)] = stride[static_cast<std::size_t>(j + 1)] * per_axis;

  const std::size_t cap = std::size_t{1} << std::min(m, kMaxDemandSetItems);
  // at_or_below[i]: some envy-free grid point is dominated by point i.
  std::vector<char> at_or_below(total, 0);
  std::vector<std::uint64_t> coord(static_cast<std::size_t>(m), 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<Rational> prices(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
      coord[static_cast<std::size_t>(j)] = (idx / stride[static_cast<std::size_t>(j)]) % per_axis;
      prices[static_cast<std::size_t>(j)] = step * Rational(Integer(coord[static_cast<std::size_t>(j)]));
    }
    const PriceVector p(std::move(prices));
    const bool ef = envy_free_allocation(instance, p, cap).envy_free;
    bool strictly_below = false;
    for (int j = 0; j < m; ++j) {
      if (coord[static_cast<std::size_t>(j)] > 0 && at_or_below[idx - stride[static_cast<std::size_t>(j)]]) {
        strictly_below = true;
        break;
      }
    }
    at_or_below[idx] = ef || strictly_below;
    if (ef) {
      ++result.envy_free_points;
      if (!strictly_below) result.minimal.push_back(p);
    }
  }
  return result;
}

bool is_walrasian(const Instance& instance, const PriceVector& p, const Allocation& alloc) {
  if (!allocation_is_envy_free(instance, p, alloc)) {
    throw InvalidArgument("allocation is not envy-free at the given prices");
  }
  const ItemSet unallocated = ItemSet::full(instance.m) - alloc.allocated();
  for (Item j : unallocated.items()) {
    if (p.at(j) != 0) return false;
  }
  return true;
}

}  // namespace subauc
