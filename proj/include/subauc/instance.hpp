#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "subauc/valuation.hpp"

namespace subauc {

/// Provenance carried by every instance so fixtures can be regenerated.
struct InstanceMetadata {
  std::string name;
  std::optional<std::uint64_t> seed;
  std::map<std::string, std::string> generator;

  friend bool operator==(const InstanceMetadata&, const InstanceMetadata&) = default;
};

/// m items and one valuation per bidder. Every valuation must share the
/// same ground set.
struct Instance {
  int m = 0;
  std::vector<Valuation> bidders;
  InstanceMetadata metadata;

  int num_bidders() const { return static_cast<int>(bidders.size()); }
};

/// Throws InvalidArgument if any bidder's ground set differs from m.
void validate_instance(const Instance& instance);

}  // namespace subauc
