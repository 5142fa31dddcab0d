#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "subauc/equilibrium.hpp"

namespace subauc {

struct Certify {
  Allocation allocation;
};

struct Raise {
  ItemSet items;
  Rational increment;
};

struct Stall {
  std::string reason;
};

using RuleAction = std::variant<Certify, Raise, Stall>;

/// What a rule sees at one step: the instance, current prices and each
/// bidder's demand report.
struct RoundView {
  const Instance& instance;
  const PriceVector& prices;
  std::span<const DemandResult> demand;
};

/// Ascending price-update rule. Rules are untrusted: the engine verifies
/// every certificate and every raise.
class PriceUpdateRule {
 public:
  virtual ~PriceUpdateRule() = default;
  virtual std::string name() const = 0;
  virtual RuleAction decide(const RoundView& round) = 0;
};

/// Demange-Gale-Sotomayor: raise a minimal overdemanded set of unit-demand
/// bidders, certify once a matching exists. Stalls on an instance with a
/// non-unit-demand bidder.
std::unique_ptr<PriceUpdateRule> dgs_rule(Rational increment);

/// Per-item English auction for additive bidders: raise every item with at
/// least two strict demanders. Stalls on a non-additive bidder.
std::unique_ptr<PriceUpdateRule> english_additive_rule(Rational increment);

/// Naive rule for arbitrary bidders: certify if the demand sets admit an
/// envy-free allocation, else raise the items that appear in at least two
/// canonical demand sets. Stalls when no such item exists.
std::unique_ptr<PriceUpdateRule> greedy_submodular_rule(Rational increment,
                                                        std::size_t demand_cap = 4096);

enum class Outcome { kEnvyFree, kStalled, kStepLimit };

std::string_view outcome_name(Outcome outcome);

struct AuctionStep {
  PriceVector prices;
  std::vector<DemandResult> demand;
  RuleAction action;
};

struct AuctionTrace {
  std::string rule;
  std::vector<AuctionStep> steps;
  Outcome outcome = Outcome::kStepLimit;
  PriceVector final_prices{0};
  std::optional<Allocation> allocation;
  std::string stall_reason;
};

/// Which oracle produces the per-bidder demand reports handed to rules.
enum class ReportOracle {
  kExhaustive,  ///< brute_force_demand; needs m <= 20
  kFast,        ///< demand(): class-specific oracle where one exists
};

/// Runs `rule` from zero prices for at most `max_steps` decisions. Throws
/// RuleViolation if the rule certifies a non-envy-free allocation or
/// proposes an empty or out-of-range raise or a non-positive increment.
AuctionTrace run_ascending(const Instance& instance, PriceUpdateRule& rule, int max_steps,
                           ReportOracle oracle = ReportOracle::kExhaustive);

}  // namespace subauc
