#include "subauc/report.hpp"

namespace subauc {

using nlohmann::json;

json to_json(const Rational& r) { return to_string(r); }

json to_json(ItemSet s) { return s.items(); }

json to_json(const PriceVector& p) {
  json out = json::array();
  for (const auto& r : p.values()) out.push_back(to_json(r));
  return out;
}

json to_json(const DemandResult& d) {
  return {{"maxUtility", to_json(d.max_utility)},
          {"set", to_json(d.witness)},
          {"count", d.argmax_count ? json(*d.argmax_count) : json(nullptr)}};
}

json to_json(const Allocation& a) {
  json out = json::array();
  for (ItemSet s : a.assigned) out.push_back(to_json(s));
  return out;
}

json to_json(const Witness& w) {
  return {{"kind", w.kind == WitnessKind::kOverdemandedSet ? "overdemanded-set" : "exhaustion-proof"},
          {"items", to_json(w.items)},
          {"demanders", w.demanders}};
}

json to_json(const EnvyFreeReport& r) {
  return {{"envyFree", r.envy_free},
          {"allocation", r.allocation ? to_json(*r.allocation) : json(nullptr)},
          {"witness", r.witness ? to_json(*r.witness) : json(nullptr)},
          {"nodesExplored", r.nodes_explored}};
}

json to_json(const MinimalEnvyFreeResult& r) {
  json minimal = json::array();
  for (const auto& p : r.minimal) minimal.push_back(to_json(p));
  return {{"minimal", std::move(minimal)},
          {"gridPoints", r.grid_points},
          {"envyFreePoints", r.envy_free_points},
          {"bound", to_json(r.bound)},
          {"step", to_json(r.step)},
          {"certifiedRelativeTo", "grid"}};
}

json to_json(const RuleAction& action) {
  if (const auto* c = std::get_if<Certify>(&action)) {
    return {{"type", "certify"}, {"allocation", to_json(c->allocation)}};
  }
  if (const auto* r = std::get_if<Raise>(&action)) {
    return {{"type", "raise"}, {"items", to_json(r->items)}, {"increment", to_json(r->increment)}};
  }
  return {{"type", "stall"}, {"reason", std::get<Stall>(action).reason}};
}

json to_json(const AuctionTrace& trace) {
  json steps = json::array();
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    json demand = json::array();
    for (const auto& d : step.demand) demand.push_back(to_json(d));
    steps.push_back({{"step", i}, {"prices", to_json(step.prices)}, {"demand", std::move(demand)}, {"action", to_json(step.action)}});
  }
  return {{"rule", trace.rule},
          {"steps", std::move(steps)},
          {"outcome", std::string(outcome_name(trace.outcome))},
          {"finalPrices", to_json(trace.final_prices)},
          {"allocation", trace.allocation ? to_json(*trace.allocation) : json(nullptr)},
          {"stallReason", trace.stall_reason.empty() ? json(nullptr) : json(trace.stall_reason)}};
}

json to_json(const MonotoneReport& r) {
  json out = {{"holds", r.holds}, {"counterexample", nullptr}};
  if (r.counterexample) {
    out["counterexample"] = {{"set", to_json(r.counterexample->first)}, {"item", r.counterexample->second}};
  }
  return out;
}

json to_json(const SubmodularReport& r) {
  json out = {{"holds", r.holds}, {"counterexample", nullptr}, {"crossChecked", r.cross_checked}};
  if (r.counterexample) {
    out["counterexample"] = {{"S", to_json(r.counterexample->first)}, {"T", to_json(r.counterexample->second)}};
  }
  return out;
}

json to_json(const InstanceMetadata& meta) {
  json gen = json::object();
  for (const auto& [k, v] : meta.generator) gen[k] = v;
  return {{"name", meta.name}, {"seed", meta.seed ? json(*meta.seed) : json(nullptr)}, {"generator", std::move(gen)}};
}

}  // namespace subauc
