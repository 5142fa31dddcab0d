#include "subauc/generators.hpp"

#include <limits>
#include <numeric>
#include <string>

#include "subauc/errors.hpp"

namespace subauc {
namespace {

void require_range(ValueRange r, std::string_view what) {
  if (r.lo < 0 || r.lo > r.hi) {
    throw InvalidArgument(std::string(what) + " range [" + std::to_string(r.lo) + ", " + std::to_string(r.hi) +
                          "] must be nonempty and nonnegative");
  }
}

void require_shape(int n, int m) {
  if (n < 0) throw InvalidArgument("negative bidder count");
  if (m < 0 || m > ItemSet::kMaxItems) throw InvalidArgument("item count " + std::to_string(m));
}

std::vector<Rational> draw_values(Rng& rng, int m, ValueRange r) {
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) values.emplace_back(Integer(rng.uniform(r.lo, r.hi)));
  return values;
}

std::string range_text(ValueRange r) { return std::to_string(r.lo) + ".." + std::to_string(r.hi); }

ItemSet random_subset(Rng& rng, int m, int size) {
  std::vector<Item> pool(static_cast<std::size_t>(m));
  std::iota(pool.begin(), pool.end(), 1);
  ItemSet s;
  for (int r = 0; r < size; ++r) {
    const auto pick = static_cast<std::size_t>(rng.uniform(r, m - 1));
    std::swap(pool[static_cast<std::size_t>(r)], pool[pick]);
    s.insert(pool[static_cast<std::size_t>(r)]);
  }
  return s;
}

SetSystem draw_system(Rng& rng, const MultiPeakParams& params) {
  SetSystem sys{{}, params.s, params.epsilon};
  const Rational limit = params.epsilon * Rational(params.s);
  for (int attempt = 0; attempt < kPeakPlacementRetries; ++attempt) {
    const ItemSet candidate = random_subset(rng, params.m, params.s);
    bool fits = true;
    for (ItemSet peak : sys.peaks) {
      if (Rational((peak & candidate).size()) > limit) {
        fits = false;
        break;
      }
    }
    if (fits) sys.peaks.push_back(candidate);
    if (static_cast<int>(sys.peaks.size()) == params.k) return sys;
  }
  throw InvalidArgument("could not place " + std::to_string(params.k) + " peaks of size " +
                        std::to_string(params.s) + " in " + std::to_string(params.m) + " items with eps = " +
                        to_string(params.epsilon) + " after " + std::to_string(kPeakPlacementRetries) +
                        " draws");
}

}  // namespace

long long Rng::uniform(long long lo, long long hi) {
  if (lo > hi) throw InvalidArgument("empty draw range");
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<long long>(engine_());
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<long long>(static_cast<std::uint64_t>(lo) + x % range);
}

Instance gen_multipeak(const MultiPeakParams& params, std::uint64_t seed) {
  require_shape(params.n, params.m);
  if (params.epsilon <= 0 || params.epsilon >= 1) {
    throw InvalidArgument("epsilon " + to_string(params.epsilon) + " outside (0,1)");
  }
  if (params.s < 1 || params.s > params.m) {
    throw InvalidArgument("peak size " + std::to_string(params.s) + " outside 1.." + std::to_string(params.m));
  }
  if (params.k < 1) throw InvalidArgument("need at least one peak");

  Rng rng(seed);
  Instance instance;
  instance.m = params.m;
  instance.metadata.name = "multipeak";
  instance.metadata.seed = seed;
  instance.metadata.generator = {
      {"family", "multipeak"},
      {"m", std::to_string(params.m)},
      {"s", std::to_string(params.s)},
      {"k", std::to_string(params.k)},
      {"epsilon", to_string(params.epsilon)},
      {"n", std::to_string(params.n)},
      {"shared", params.shared ? "true" : "false"},
  };
  if (params.n == 0) {
    draw_system(rng, params);  // still reports infeasible parameters
    return instance;
  }
  SetSystem shared = draw_system(rng, params);
  for (int i = 0; i < params.n; ++i) {
    SetSystem sys = (params.shared || i == 0) ? shared : draw_system(rng, params);
    instance.bidders.emplace_back(params.m, MultiPeak{std::move(sys)});
  }
  return instance;
}

Instance gen_budget_additive(int n, int m, ValueRange values, ValueRange budgets, std::uint64_t seed) {
  require_shape(n, m);
  require_range(values, "value");
  require_range(budgets, "budget");
  Rng rng(seed);
  Instance instance;
  instance.m = m;
  instance.metadata = {"budget_additive",
                       seed,
                       {{"family", "budget_additive"},
                        {"n", std::to_string(n)},
                        {"m", std::to_string(m)},
                        {"values", range_text(values)},
                        {"budgets", range_text(budgets)}}};
  for (int i = 0; i < n; ++i) {
    auto item_values = draw_values(rng, m, values);
    Rational budget(Integer(rng.uniform(budgets.lo, budgets.hi)));
    instance.bidders.emplace_back(m, BudgetAdditive{std::move(item_values), std::move(budget)});
  }
  return instance;
}

Instance gen_unit_demand(int n, int m, ValueRange values, std::uint64_t seed) {
  require_shape(n, m);
  require_range(values, "value");
  Rng rng(seed);
  Instance instance;
  instance.m = m;
  instance.metadata = {"unit_demand",
                       seed,
                       {{"family", "unit_demand"},
                        {"n", std::to_string(n)},
                        {"m", std::to_string(m)},
                        {"values", range_text(values)}}};
  for (int i = 0; i < n; ++i) instance.bidders.emplace_back(m, UnitDemand{draw_values(rng, m, values)});
  return instance;
}

Instance gen_additive(int n, int m, ValueRange values, std::uint64_t seed) {
  require_shape(n, m);
  require_range(values, "value");
  Rng rng(seed);
  Instance instance;
  instance.m = m;
  instance.metadata = {"additive",
                       seed,
                       {{"family", "additive"},
                        {"n", std::to_string(n)},
                        {"m", std::to_string(m)},
                        {"values", range_text(values)}}};
  for (int i = 0; i < n; ++i) instance.bidders.emplace_back(m, Additive{draw_values(rng, m, values)});
  return instance;
}

PriceVector gen_prices(int m, long long max_numerator, long long denominator, Rng& rng) {
  if (max_numerator < 0 || denominator <= 0) throw InvalidArgument("bad price lattice");
  std::vector<Rational> prices;
  prices.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    prices.emplace_back(Integer(rng.uniform(0, max_numerator)), Integer(denominator));
  }
  return PriceVector(std::move(prices));
}

Instance multipeak_fixture(int n) {
  if (n < 0) throw InvalidArgument("negative bidder count");
  SetSystem sys{{ItemSet{1, 2, 3, 4}, ItemSet{5, 6, 7, 8}}, 4, make_rational(1, 2)};
  Instance instance;
  instance.m = 8;
  instance.metadata = {"mp1", std::nullopt,
                       {{"family", "fixture"}, {"fixture", "mp1"}, {"n", std::to_string(n)}}};
  for (int i = 0; i < n; ++i) instance.bidders.emplace_back(8, MultiPeak{sys});
  return instance;
}

}  // namespace subauc
