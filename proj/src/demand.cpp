#include "subauc/demand.hpp"

#include <algorithm>
#include <string>

#include "subauc/errors.hpp"

namespace subauc {
namespace {

void require_prices(const Valuation& v, const PriceVector& p) {
  if (p.size() != v.ground_size()) {
    throw InvalidArgument("price vector has " + std::to_string(p.size()) + " entries for " +
                          std::to_string(v.ground_size()) + " items");
  }
}

// Keeps the highest-utility candidate, ties resolved canonically.
struct BestCandidate {
  Rational utility;
  ItemSet set;
  bool any = false;

  void offer(const Rational& u, ItemSet s) {
    if (!any || u > utility || (u == utility && canonical_less(s, set))) {
      utility = u;
      set = s;
      any = true;
    }
  }
};

template <class T>
const T& require_kind(const Valuation& v, std::string_view oracle) {
  const T* data = v.get_if<T>();
  if (data == nullptr) {
    throw InvalidArgument(std::string(oracle) + " called on a " + std::string(kind_name(v.kind())) +
                          " valuation");
  }
  return *data;
}

}  // namespace

Rational utility(const Valuation& v, const PriceVector& p, ItemSet s) {
  require_prices(v, p);
  return eval_valuation(v, s) - p.of(s);
}

DemandResult brute_force_demand(const Valuation& v, const PriceVector& p) {
  require_prices(v, p);
  const int m = v.ground_size();
  if (m > kMaxExhaustiveItems) {
    throw GroundSetTooLarge("brute-force demand on " + std::to_string(m) + " items exceeds cap of " +
                            std::to_string(kMaxExhaustiveItems));
  }
  const auto prices = p.values();
  DemandResult result{Rational(0), ItemSet{}, std::uint64_t{0}};
  bool first = true;
  // Gray-code walk: consecutive subsets differ in one item, so p(S) is
  // maintained with a single addition or subtraction per step.
  Rational price;
  const std::uint64_t count = std::uint64_t{1} << m;
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t gray = i ^ (i >> 1);
    if (i != 0) {
      const int flipped = std::countr_zero(i);
      if (gray & (std::uint64_t{1} << flipped)) {
        price += prices[flipped];
      } else {
        price -= prices[flipped];
      }
    }
    const ItemSet s = ItemSet::from_mask(gray);
    const Rational u = eval_valuation(v, s) - price;
    if (first || u > result.max_utility) {
      result.max_utility = u;
      result.witness = s;
      result.argmax_count = 1;
      first = false;
    } else if (u == result.max_utility) {
      ++*result.argmax_count;
      if (canonical_less(s, result.witness)) result.witness = s;
    }
  }
  return result;
}

std::vector<ItemSet> demand_sets(const Valuation& v, const PriceVector& p, std::size_t cap) {
  require_prices(v, p);
  const int m = v.ground_size();
  if (m > kMaxDemandSetItems) {
    throw GroundSetTooLarge("demand-set enumeration on " + std::to_string(m) + " items exceeds cap of " +
                            std::to_string(kMaxDemandSetItems));
  }
  std::vector<ItemSet> best;
  Rational best_utility;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const ItemSet s = ItemSet::from_mask(mask);
    const Rational u = utility(v, p, s);
    if (best.empty() || u > best_utility) {
      best_utility = u;
      best.assign(1, s);
    } else if (u == best_utility) {
      best.push_back(s);
    }
  }
  if (best.size() > cap) {
    throw CapExceeded(std::to_string(best.size()) + " demand sets exceed cap of " + std::to_string(cap));
  }
  std::sort(best.begin(), best.end(), canonical_less);
  return best;
}

std::vector<Item> sort_by_price(const PriceVector& p, ItemSet among) {
  std::vector<Item> items = among.items();
  std::stable_sort(items.begin(), items.end(), [&](Item a, Item b) { return p.at(a) < p.at(b); });
  return items;
}

ItemSet algorithm_zero(const PriceVector& p, int s) {
  if (s <= 0) throw InvalidArgument("peak size must be positive");
  const auto order = sort_by_price(p, ItemSet::full(p.size()));
  ItemSet chosen;
  // Thresholds fall with l while sorted prices rise, so the admissible l
  // form a prefix and the first failure ends the scan.
  for (std::size_t l = 1; l <= order.size(); ++l) {
    const Rational threshold = Rational(1, s) - Rational(2 * static_cast<int>(l) - 1, 4 * s * s);
    if (p.at(order[l - 1]) > threshold) break;
    chosen.insert(order[l - 1]);
  }
  return chosen;
}

std::vector<ItemSet> peak_marked_sets(const PriceVector& p, ItemSet peak, int s, const Rational& eps) {
  if (s <= 0) throw InvalidArgument("peak size must be positive");
  if (peak.size() != s) {
    throw InvalidArgument("peak " + to_string(peak) + " has " + std::to_string(peak.size()) +
                          " items, expected " + std::to_string(s));
  }
  if (!peak.within(p.size())) throw InvalidArgument("peak " + to_string(peak) + " leaves the ground set");

  const auto inside = sort_by_price(p, peak);
  const auto outside = sort_by_price(p, ItemSet::full(p.size()) - peak);
  const Rational eps_s = eps * Rational(s);
  const Rational base = Rational(3, 2 * s);
  const Rational scale(4 * s * s);

  std::vector<ItemSet> marked;
  for (int l = 1; l <= s; ++l) {
    if (Rational(l) <= eps_s) continue;
    // Largest integer kappa with kappa < l - eps*s.
    const Rational gap = Rational(l) - eps_s;
    Integer limit = floor(gap);
    if (Rational(limit) == gap) --limit;
    int kappa = static_cast<int>(std::min<Integer>(limit, Integer(outside.size())));
    const Rational& inner_price = p.at(inside[static_cast<std::size_t>(l - 1)]);
    for (; kappa >= 0; --kappa) {
      const Rational outer_price = kappa == 0 ? Rational(0) : p.at(outside[static_cast<std::size_t>(kappa - 1)]);
      const Rational rhs = base - (Rational(2 * (kappa + l)) - eps_s) / scale;
      if (inner_price + outer_price <= rhs) break;
    }
    if (kappa < 0) continue;
    ItemSet set;
    for (int r = 0; r < l; ++r) set.insert(inside[static_cast<std::size_t>(r)]);
    for (int r = 0; r < kappa; ++r) set.insert(outside[static_cast<std::size_t>(r)]);
    marked.push_back(set);
  }
  return marked;
}

std::optional<ItemSet> algorithm_peak(const Valuation& v, const PriceVector& p, ItemSet peak) {
  require_prices(v, p);
  const SetSystem& sys = require_kind<MultiPeak>(v, "algorithm_peak").system;
  BestCandidate best;
  for (ItemSet s : peak_marked_sets(p, peak, sys.s, sys.epsilon)) best.offer(utility(v, p, s), s);
  if (!best.any) return std::nullopt;
  return best.set;
}

DemandResult multipeak_demand(const Valuation& v, const PriceVector& p) {
  require_prices(v, p);
  const SetSystem& sys = require_kind<MultiPeak>(v, "multipeak_demand").system;
  BestCandidate best;
  best.offer(Rational(0), ItemSet{});
  const ItemSet far = algorithm_zero(p, sys.s);
  best.offer(utility(v, p, far), far);
  for (ItemSet peak : sys.peaks) {
    if (auto s = algorithm_peak(v, p, peak)) best.offer(utility(v, p, *s), *s);
  }
  return {best.utility, best.set, std::nullopt};
}

DemandResult additive_demand(const Valuation& v, const PriceVector& p) {
  require_prices(v, p);
  const auto& values = require_kind<Additive>(v, "additive_demand").values;
  DemandResult result;
  for (Item j = 1; j <= v.ground_size(); ++j) {
    const Rational gain = values[static_cast<std::size_t>(j - 1)] - p.at(j);
    if (gain > 0) {
      result.max_utility += gain;
      result.witness.insert(j);
    }
  }
  return result;
}

DemandResult unit_demand_demand(const Valuation& v, const PriceVector& p) {
  require_prices(v, p);
  const auto& values = require_kind<UnitDemand>(v, "unit_demand_demand").values;
  DemandResult result;
  for (Item j = 1; j <= v.ground_size(); ++j) {
    const Rational gain = values[static_cast<std::size_t>(j - 1)] - p.at(j);
    if (gain > result.max_utility) {
      result.max_utility = gain;
      result.witness = ItemSet{j};
    }
  }
  return result;
}

DemandResult budget_additive_demand(const Valuation& v, const PriceVector& p) {
  require_kind<BudgetAdditive>(v, "budget_additive_demand");
  return brute_force_demand(v, p);
}

bool has_fast_oracle(const Valuation& v) {
  switch (v.kind()) {
    case ValuationKind::kAdditive:
    case ValuationKind::kUnitDemand:
    case ValuationKind::kMultiPeak: return true;
    default: return false;
  }
}

DemandResult fast_demand(const Valuation& v, const PriceVector& p) {
  switch (v.kind()) {
    case ValuationKind::kAdditive: return additive_demand(v, p);
    case ValuationKind::kUnitDemand: return unit_demand_demand(v, p);
    case ValuationKind::kMultiPeak: return multipeak_demand(v, p);
    default:
      throw NoFastOracle("no fast demand oracle for " + std::string(kind_name(v.kind())) + " valuations");
  }
}

DemandResult demand(const Valuation& v, const PriceVector& p) {
  return has_fast_oracle(v) ? fast_demand(v, p) : brute_force_demand(v, p);
}

}  // namespace subauc
