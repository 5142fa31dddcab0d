#include "subauc/auction.hpp"

#include <string>

#include "subauc/errors.hpp"

namespace subauc {
namespace {

template <class T>
std::optional<std::string> first_bidder_not(const Instance& instance, std::string_view kind) {
  for (int i = 0; i < instance.num_bidders(); ++i) {
    if (instance.bidders[static_cast<std::size_t>(i)].get_if<T>() == nullptr) {
      return "bidder " + std::to_string(i) + " is not " + std::string(kind);
    }
  }
  return std::nullopt;
}

class DgsRule final : public PriceUpdateRule {
 public:
  explicit DgsRule(Rational increment) : increment_(std::move(increment)) {}

  std::string name() const override { return "dgs"; }

  RuleAction decide(const RoundView& round) override {
    if (auto bad = first_bidder_not<UnitDemand>(round.instance, "unit-demand")) {
      return Stall{"dgs rule inapplicable: " + *bad};
    }
    auto outcome = unit_demand_envy_free(round.instance, round.prices);
    if (auto* alloc = std::get_if<Allocation>(&outcome)) return Certify{std::move(*alloc)};
    return Raise{std::get<Witness>(outcome).items, increment_};
  }

 private:
  Rational increment_;
};

class EnglishAdditiveRule final : public PriceUpdateRule {
 public:
  explicit EnglishAdditiveRule(Rational increment) : increment_(std::move(increment)) {}

  std::string name() const override { return "english"; }

  RuleAction decide(const RoundView& round) override {
    const Instance& instance = round.instance;
    if (auto bad = first_bidder_not<Additive>(instance, "additive")) {
      return Stall{"english rule inapplicable: " + *bad};
    }
    ItemSet contested;
    Allocation alloc{std::vector<ItemSet>(static_cast<std::size_t>(instance.num_bidders()))};
    for (Item j = 1; j <= instance.m; ++j) {
      int strict = 0;
      int holder = -1;
      for (int i = 0; i < instance.num_bidders(); ++i) {
        const auto& values = instance.bidders[static_cast<std::size_t>(i)].get_if<Additive>()->values;
        if (values[static_cast<std::size_t>(j - 1)] > round.prices.at(j)) {
          ++strict;
          holder = i;
        }
      }
      if (strict >= 2) contested.insert(j);
      if (strict == 1) alloc.assigned[static_cast<std::size_t>(holder)].insert(j);
    }
    if (!contested.empty()) return Raise{contested, increment_};
    return Certify{std::move(alloc)};
  }

 private:
  Rational increment_;
};

class GreedySubmodularRule final : public PriceUpdateRule {
 public:
  GreedySubmodularRule(Rational increment, std::size_t cap) : increment_(std::move(increment)), cap_(cap) {}

  std::string name() const override { return "greedy"; }

  RuleAction decide(const RoundView& round) override {
    EnvyFreeReport report;
    try {
      report = envy_free_allocation(round.instance, round.prices, cap_);
    } catch (const CapExceeded& e) {
      return Stall{std::string("greedy rule cannot enumerate demand: ") + e.what()};
    }
    if (report.envy_free) return Certify{*report.allocation};

    ItemSet seen;
    ItemSet contested;
    for (const DemandResult& d : round.demand) {
      contested = contested | (seen & d.witness);
      seen = seen | d.witness;
    }
    if (contested.empty()) return Stall{"no item appears in two canonical demand sets"};
    return Raise{contested, increment_};
  }

 private:
  Rational increment_;
  std::size_t cap_;
};

void require_positive(const Rational& increment) {
  if (increment <= 0) throw InvalidArgument("increment must be positive");
}

}  // namespace

std::unique_ptr<PriceUpdateRule> dgs_rule(Rational increment) {
  require_positive(increment);
  return std::make_unique<DgsRule>(std::move(increment));
}

std::unique_ptr<PriceUpdateRule> english_additive_rule(Rational increment) {
  require_positive(increment);
  return std::make_unique<EnglishAdditiveRule>(std::move(increment));
}

std::unique_ptr<PriceUpdateRule> greedy_submodular_rule(Rational increment, std::size_t demand_cap) {
  require_positive(increment);
  return std::make_unique<GreedySubmodularRule>(std::move(increment), demand_cap);
}

std::string_view outcome_name(Outcome outcome) {
  switch (outcome) {
    case Outcome::kEnvyFree: return "EnvyFree";
    case Outcome::kStalled: return "Stalled";
    case Outcome::kStepLimit: return "StepLimit";
  }
  return "unknown";
}

AuctionTrace run_ascending(const Instance& instance, PriceUpdateRule& rule, int max_steps, ReportOracle oracle) {
  if (max_steps < 1) throw InvalidArgument("max_steps must be at least 1");
  validate_instance(instance);

  AuctionTrace trace;
  trace.rule = rule.name();
  PriceVector prices(instance.m);
  for (int step = 0; step < max_steps; ++step) {
    std::vector<DemandResult> reports;
    reports.reserve(instance.bidders.size());
    for (const auto& v : instance.bidders) {
      reports.push_back(oracle == ReportOracle::kExhaustive ? brute_force_demand(v, prices) : demand(v, prices));
    }

    RuleAction action = rule.decide(RoundView{instance, prices, reports});
    trace.steps.push_back(AuctionStep{prices, reports, action});

    if (auto* certify = std::get_if<Certify>(&action)) {
      if (!allocation_is_envy_free(instance, prices, certify->allocation)) {
        throw RuleViolation(rule.name() + " certified an allocation that is not envy-free at step " +
                            std::to_string(step));
      }
      trace.outcome = Outcome::kEnvyFree;
      trace.allocation = certify->allocation;
      trace.final_prices = prices;
      return trace;
    }
    if (auto* stall = std::get_if<Stall>(&action)) {
      trace.outcome = Outcome::kStalled;
      trace.stall_reason = stall->reason;
      trace.final_prices = prices;
      return trace;
    }
    const auto& raise = std::get<Raise>(action);
    if (raise.items.empty()) throw RuleViolation(rule.name() + " raised an empty set at step " + std::to_string(step));
    if (!raise.items.within(instance.m)) {
      throw RuleViolation(rule.name() + " raised items outside the ground set at step " + std::to_string(step));
    }
    if (raise.increment <= 0) {
      throw RuleViolation(rule.name() + " proposed a non-positive increment at step " + std::to_string(step));
    }
    prices.raise(raise.items, raise.increment);
  }
  trace.outcome = Outcome::kStepLimit;
  trace.final_prices = prices;
  return trace;
}

}  // namespace subauc
