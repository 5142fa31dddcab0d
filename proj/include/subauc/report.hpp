#pragma once

#include <json.hpp>

#include "subauc/auction.hpp"
#include "subauc/equilibrium.hpp"
#include "subauc/instance.hpp"
#include "subauc/validators.hpp"

namespace subauc {

// Machine-readable forms of every result type. Rationals are "num/den"
// strings, item sets are sorted 1-based item arrays, bidders are 0-based.

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(ItemSet s);
nlohmann::json to_json(const PriceVector& p);
nlohmann::json to_json(const DemandResult& d);
nlohmann::json to_json(const Allocation& a);
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const EnvyFreeReport& r);
nlohmann::json to_json(const MinimalEnvyFreeResult& r);
nlohmann::json to_json(const RuleAction& action);
nlohmann::json to_json(const AuctionTrace& trace);
nlohmann::json to_json(const MonotoneReport& r);
nlohmann::json to_json(const SubmodularReport& r);
nlohmann::json to_json(const InstanceMetadata& meta);

}  // namespace subauc
