#include "subauc/validators.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "subauc/errors.hpp"

namespace subauc {
namespace {

std::vector<Rational> value_table(const Valuation& v) {
  const int m = v.ground_size();
  if (m > kMaxExhaustiveItems) {
    throw GroundSetTooLarge("exhaustive check on " + std::to_string(m) + " items exceeds cap of " +
                            std::to_string(kMaxExhaustiveItems));
  }
  if (const auto* e = v.get_if<Explicit>()) return e->table;
  std::vector<Rational> table(std::size_t{1} << m);
  for (std::size_t mask = 0; mask < table.size(); ++mask) {
    table[mask] = eval_valuation(v, ItemSet::from_mask(mask));
  }
  return table;
}

}  // namespace

MonotoneReport check_monotone(const Valuation& v) {
  const auto table = value_table(v);
  const int m = v.ground_size();
  for (std::size_t mask = 0; mask < table.size(); ++mask) {
    for (int j = 0; j < m; ++j) {
      const std::size_t bit = std::size_t{1} << j;
      if ((mask & bit) == 0 && table[mask | bit] < table[mask]) {
        return {false, std::pair{ItemSet::from_mask(mask), Item{j + 1}}};
      }
    }
  }
  return {};
}

SubmodularReport submodular_by_definition(const Valuation& v) {
  const auto table = value_table(v);
  for (std::size_t s = 0; s < table.size(); ++s) {
    for (std::size_t t = s + 1; t < table.size(); ++t) {
      if (table[s | t] + table[s & t] > table[s] + table[t]) {
        return {false, std::pair{ItemSet::from_mask(s), ItemSet::from_mask(t)}, false};
      }
    }
  }
  return {};
}

SubmodularReport submodular_by_marginals(const Valuation& v) {
  const auto table = value_table(v);
  const int m = v.ground_size();
  for (std::size_t s = 0; s < table.size(); ++s) {
    for (int x = 0; x < m; ++x) {
      const std::size_t bx = std::size_t{1} << x;
      if (s & bx) continue;
      for (int y = x + 1; y < m; ++y) {
        const std::size_t by = std::size_t{1} << y;
        if (s & by) continue;
        // Marginal of x at S must not be smaller than at S + y.
        if (table[s | bx] - table[s] < table[s | bx | by] - table[s | by]) {
          return {false, std::pair{ItemSet::from_mask(s | bx), ItemSet::from_mask(s | by)}, false};
        }
      }
    }
  }
  return {};
}

SubmodularReport check_submodular(const Valuation& v) {
  SubmodularReport report = submodular_by_marginals(v);
  if (v.ground_size() <= kDefinitionCrossCheckItems) {
    const SubmodularReport definition = submodular_by_definition(v);
    if (definition.holds != report.holds) {
      throw std::logic_error("submodularity checkers disagree");
    }
    report.cross_checked = true;
  }
  return report;
}

}  // namespace subauc
