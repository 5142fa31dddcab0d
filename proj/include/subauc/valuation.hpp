#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "subauc/item_set.hpp"
#include "subauc/rational.hpp"

namespace subauc {

/// Exhaustive validators and explicit tables are limited to 2^20 subsets.
inline constexpr int kMaxExhaustiveItems = 20;

/// Peaks A_1..A_k, all of size s, pairwise intersecting in at most eps*s items.
struct SetSystem {
  std::vector<ItemSet> peaks;
  int s = 0;
  Rational epsilon;
};

struct Additive {
  std::vector<Rational> values;
};

struct UnitDemand {
  std::vector<Rational> values;
};

struct BudgetAdditive {
  std::vector<Rational> values;
  Rational budget;
};

struct MultiPeak {
  SetSystem system;
};

/// Value of every subset, indexed by ItemSet::mask().
struct Explicit {
  std::vector<Rational> table;
};

enum class ValuationKind { kAdditive, kUnitDemand, kBudgetAdditive, kMultiPeak, kExplicit };

std::string_view kind_name(ValuationKind kind);

/// A bidder valuation over the ground set {1..m}.
///
/// Construction validates the structural invariants: nonnegative values
/// of the right length, a valid set system for multi-peak, and a complete
/// monotone table with v(empty) = 0 for explicit valuations. Violations
/// throw InvalidArgument (or MalformedSystem for set systems).
class Valuation {
 public:
  using Variant = std::variant<Additive, UnitDemand, BudgetAdditive, MultiPeak, Explicit>;

  Valuation(int ground_size, Variant data);

  int ground_size() const { return ground_size_; }
  ValuationKind kind() const { return static_cast<ValuationKind>(data_.index()); }
  const Variant& data() const { return data_; }

  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&data_);
  }

  /// Same as eval_valuation(*this, s).
  Rational operator()(ItemSet s) const;

 private:
  int ground_size_;
  Variant data_;
};

/// v(S). Throws InvalidArgument if S leaves the ground set, MalformedSystem
/// if a multi-peak S is close to more than one peak.
Rational eval_valuation(const Valuation& v, ItemSet s);

/// |S n T| - |S \ T| > eps * |T|. Asymmetric in S and T.
bool eps_close(ItemSet s, ItemSet t, const Rational& eps);

/// Index of the unique peak that S is eps-close to, if any.
std::optional<std::size_t> find_close_peak(const SetSystem& sys, ItemSet s);

/// Raw multi-peak formulas, exposed so the branch logic can be tested on
/// its own. `in` = |S n A|, `out` = |S \ A|.
Rational multipeak_close_value(int in, int out, int s, const Rational& eps);
Rational multipeak_far_value(int size, int s);

struct SetSystemReport {
  bool valid = true;
  std::vector<std::string> violations;
};

/// Checks peak sizes, eps in (0,1), s > 0, and pairwise intersections.
/// Every violation is listed; peaks are numbered from 1 in messages.
SetSystemReport validate_set_system(const SetSystem& sys);

}  // namespace subauc
