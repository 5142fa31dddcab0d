#include "subauc/valuation.hpp"

#include <algorithm>
#include <string>

#include "subauc/errors.hpp"

namespace subauc {
namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

void require_item_values(const std::vector<Rational>& values, int m, std::string_view what) {
  if (static_cast<int>(values.size()) != m) {
    throw InvalidArgument(std::string(what) + ": expected " + std::to_string(m) + " item values, got " +
                          std::to_string(values.size()));
  }
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (values[j] < 0) {
      throw InvalidArgument(std::string(what) + ": negative value for item " + std::to_string(j + 1));
    }
  }
}

void require_explicit_table(const Explicit& e, int m) {
  if (m > kMaxExhaustiveItems) {
    throw InvalidArgument("explicit: ground set of " + std::to_string(m) + " items exceeds " +
                          std::to_string(kMaxExhaustiveItems));
  }
  const std::size_t subsets = std::size_t{1} << m;
  if (e.table.size() != subsets) {
    throw InvalidArgument("explicit: table needs " + std::to_string(subsets) + " entries, got " +
                          std::to_string(e.table.size()));
  }
  if (e.table[0] != 0) throw InvalidArgument("explicit: value of the empty set must be 0");
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    if (e.table[mask] < 0) {
      throw InvalidArgument("explicit: negative value for " +
                            to_string(ItemSet::from_mask(mask)));
    }
    for (int j = 0; j < m; ++j) {
      const std::size_t bigger = mask | (std::size_t{1} << j);
      if (bigger != mask && e.table[bigger] < e.table[mask]) {
        throw InvalidArgument("explicit: not monotone, v(" + to_string(ItemSet::from_mask(bigger)) +
                              ") < v(" + to_string(ItemSet::from_mask(mask)) + ")");
      }
    }
  }
}

Rational sum_over(const std::vector<Rational>& values, ItemSet s) {
  Rational total;
  for (std::uint64_t rest = s.mask(); rest != 0; rest &= rest - 1) {
    total += values[std::countr_zero(rest)];
  }
  return total;
}

}  // namespace

std::string_view kind_name(ValuationKind kind) {
  switch (kind) {
    case ValuationKind::kAdditive: return "additive";
    case ValuationKind::kUnitDemand: return "unit_demand";
    case ValuationKind::kBudgetAdditive: return "budget_additive";
    case ValuationKind::kMultiPeak: return "multi_peak";
    case ValuationKind::kExplicit: return "explicit";
  }
  return "unknown";
}

Valuation::Valuation(int ground_size, Variant data) : ground_size_(ground_size), data_(std::move(data)) {
  if (ground_size < 0 || ground_size > ItemSet::kMaxItems) {
    throw InvalidArgument("ground set size " + std::to_string(ground_size) + " outside 0.." +
                          std::to_string(ItemSet::kMaxItems));
  }
  std::visit(Overloaded{
                 [&](const Additive& a) { require_item_values(a.values, ground_size, "additive"); },
                 [&](const UnitDemand& u) { require_item_values(u.values, ground_size, "unit_demand"); },
                 [&](const BudgetAdditive& b) {
                   require_item_values(b.values, ground_size, "budget_additive");
                   if (b.budget < 0) throw InvalidArgument("budget_additive: negative budget");
                 },
                 [&](const MultiPeak& mp) {
                   auto report = validate_set_system(mp.system);
                   for (std::size_t i = 0; i < mp.system.peaks.size(); ++i) {
                     if (!mp.system.peaks[i].within(ground_size)) {
                       report.valid = false;
                       report.violations.push_back("peak " + std::to_string(i + 1) +
                                                   " leaves the ground set");
                     }
                   }
                   if (!report.valid) {
                     std::string msg = "multi_peak:";
                     for (const auto& v : report.violations) msg += " " + v + ";";
                     throw MalformedSystem(msg);
                   }
                 },
                 [&](const Explicit& e) { require_explicit_table(e, ground_size); },
             },
             data_);
}

Rational Valuation::operator()(ItemSet s) const { return eval_valuation(*this, s); }

Rational multipeak_close_value(int in, int out, int s, const Rational& eps) {
  const Rational two(2);
  return (Rational(in) * (two - eps) + Rational(out) * (two + eps)) / Rational(2 * s) +
         Rational(in * out, s * s) + eps * eps / Rational(4);
}

Rational multipeak_far_value(int size, int s) {
  return Rational(size, s) - Rational(size * size, 4 * s * s);
}

Rational eval_valuation(const Valuation& v, ItemSet s) {
  if (!s.within(v.ground_size())) {
    throw InvalidArgument("set " + to_string(s) + " leaves the ground set 1.." +
                          std::to_string(v.ground_size()));
  }
  return std::visit(Overloaded{
                        [&](const Additive& a) { return sum_over(a.values, s); },
                        [&](const UnitDemand& u) {
                          Rational best;
                          for (std::uint64_t rest = s.mask(); rest != 0; rest &= rest - 1) {
                            best = std::max(best, u.values[std::countr_zero(rest)]);
                          }
                          return best;
                        },
                        [&](const BudgetAdditive& b) { return std::min(b.budget, sum_over(b.values, s)); },
                        [&](const MultiPeak& mp) {
                          const SetSystem& sys = mp.system;
                          if (auto peak = find_close_peak(sys, s)) {
                            const ItemSet a = sys.peaks[*peak];
                            return multipeak_close_value((s & a).size(), (s - a).size(), sys.s, sys.epsilon);
                          }
                          return multipeak_far_value(s.size(), sys.s);
                        },
                        [&](const Explicit& e) { return e.table[s.mask()]; },
                    },
                    v.data());
}

bool eps_close(ItemSet s, ItemSet t, const Rational& eps) {
  return Rational((s & t).size() - (s - t).size()) > eps * Rational(t.size());
}

std::optional<std::size_t> find_close_peak(const SetSystem& sys, ItemSet s) {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < sys.peaks.size(); ++i) {
    if (!eps_close(s, sys.peaks[i], sys.epsilon)) continue;
    if (found) {
      throw MalformedSystem("set " + to_string(s) + " is close to peaks " + std::to_string(*found + 1) +
                            " and " + std::to_string(i + 1));
    }
    found = i;
  }
  return found;
}

SetSystemReport validate_set_system(const SetSystem& sys) {
  SetSystemReport report;
  auto fail = [&](std::string msg) {
    report.valid = false;
    report.violations.push_back(std::move(msg));
  };
  if (sys.s <= 0) fail("s must be positive, got " + std::to_string(sys.s));
  if (sys.epsilon <= 0 || sys.epsilon >= 1) fail("epsilon " + to_string(sys.epsilon) + " outside (0,1)");
  if (sys.peaks.empty()) fail("no peaks");
  for (std::size_t i = 0; i < sys.peaks.size(); ++i) {
    if (sys.peaks[i].size() != sys.s) {
      fail("peak " + std::to_string(i + 1) + " has " + std::to_string(sys.peaks[i].size()) +
           " items, expected " + std::to_string(sys.s));
    }
  }
  const Rational limit = sys.epsilon * Rational(sys.s);
  for (std::size_t i = 0; i < sys.peaks.size(); ++i) {
    for (std::size_t j = i + 1; j < sys.peaks.size(); ++j) {
      const int common = (sys.peaks[i] & sys.peaks[j]).size();
      if (Rational(common) > limit) {
        fail("peaks " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " share " +
             std::to_string(common) + " items, more than eps*s = " + to_string(limit));
      }
    }
  }
  return report;
}

}  // namespace subauc
