#pragma once

#include <string>
#include <string_view>

#include "subauc/instance.hpp"
#include "subauc/prices.hpp"

namespace subauc {

/// Canonical JSON document (sorted keys, two-space indent, trailing newline).
std::string encode_instance(const Instance& instance);

/// Parses and fully validates an instance document. Throws SchemaError with
/// a path-qualified message. Rationals must be canonical: "2/4" is rejected.
Instance decode_instance(std::string_view text);

std::string encode_prices(const PriceVector& p);
/// {"prices": [...]} of length m.
PriceVector decode_prices(std::string_view text, int m);

}  // namespace subauc
