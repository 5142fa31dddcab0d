#include "subauc/codec.hpp"

#include <set>
#include <string>

#include <json.hpp>

#include "subauc/errors.hpp"

namespace subauc {
namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw SchemaError(path + ": " + what);
}

json encode_rational(const Rational& r) { return to_string(r); }

json encode_items(ItemSet s) { return s.items(); }

json encode_values(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(encode_rational(v));
  return out;
}

json encode_bidder(const Valuation& v) {
  json out;
  out["type"] = std::string(kind_name(v.kind()));
  if (const auto* a = v.get_if<Additive>()) out["values"] = encode_values(a->values);
  if (const auto* u = v.get_if<UnitDemand>()) out["values"] = encode_values(u->values);
  if (const auto* b = v.get_if<BudgetAdditive>()) {
    out["values"] = encode_values(b->values);
    out["budget"] = encode_rational(b->budget);
  }
  if (const auto* mp = v.get_if<MultiPeak>()) {
    out["s"] = mp->system.s;
    out["k"] = mp->system.peaks.size();
    out["epsilon"] = encode_rational(mp->system.epsilon);
    json peaks = json::array();
    for (ItemSet peak : mp->system.peaks) peaks.push_back(encode_items(peak));
    out["peaks"] = std::move(peaks);
  }
  if (const auto* e = v.get_if<Explicit>()) {
    json table = json::array();
    for (std::size_t mask = 0; mask < e->table.size(); ++mask) {
      table.push_back({{"items", encode_items(ItemSet::from_mask(mask))}, {"value", encode_rational(e->table[mask])}});
    }
    out["table"] = std::move(table);
  }
  return out;
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(path, "missing field \"" + key + "\"");
  return *it;
}

void only_fields(const json& obj, std::initializer_list<const char*> allowed, const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* a : allowed) known = known || it.key() == a;
    if (!known) schema_error(path, "unexpected field \"" + it.key() + "\"");
  }
}

long long decode_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_error(path, "expected an integer");
  return j.get<long long>();
}

Rational decode_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(Integer(j.get<long long>()));
  if (!j.is_string()) schema_error(path, "expected a rational string \"num/den\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InvalidArgument& e) {
    schema_error(path, e.what());
  } catch (const std::overflow_error&) {
    schema_error(path, "rational out of range");
  }
}

Rational decode_nonnegative(const json& j, const std::string& path) {
  Rational r = decode_rational(j, path);
  if (r < 0) schema_error(path, "negative value " + to_string(r));
  return r;
}

std::vector<Rational> decode_values(const json& j, int m, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array");
  if (static_cast<int>(j.size()) != m) {
    schema_error(path, "expected " + std::to_string(m) + " entries, got " + std::to_string(j.size()));
  }
  std::vector<Rational> values;
  for (std::size_t i = 0; i < j.size(); ++i) values.push_back(decode_nonnegative(j[i], path + "[" + std::to_string(i) + "]"));
  return values;
}

ItemSet decode_items(const json& j, int m, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an item array");
  ItemSet s;
  long long previous = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const long long item = decode_int(j[i], path + "[" + std::to_string(i) + "]");
    if (item < 1 || item > m) schema_error(path, "item " + std::to_string(item) + " outside 1.." + std::to_string(m));
    if (item <= previous) schema_error(path, "items must be strictly increasing");
    s.insert(static_cast<Item>(item));
    previous = item;
  }
  return s;
}

Valuation::Variant decode_variant(const json& b, int m, const std::string& path) {
  if (!b.is_object()) schema_error(path, "expected an object");
  const json& type = field(b, "type", path);
  if (!type.is_string()) schema_error(path + ".type", "expected a string");
  const std::string kind = type.get<std::string>();

  if (kind == "additive" || kind == "unit_demand") {
    only_fields(b, {"type", "values"}, path);
    auto values = decode_values(field(b, "values", path), m, path + ".values");
    if (kind == "additive") return Additive{std::move(values)};
    return UnitDemand{std::move(values)};
  }
  if (kind == "budget_additive") {
    only_fields(b, {"type", "values", "budget"}, path);
    return BudgetAdditive{decode_values(field(b, "values", path), m, path + ".values"),
                          decode_nonnegative(field(b, "budget", path), path + ".budget")};
  }
  if (kind == "multi_peak") {
    only_fields(b, {"type", "s", "k", "epsilon", "peaks"}, path);
    SetSystem sys;
    sys.s = static_cast<int>(decode_int(field(b, "s", path), path + ".s"));
    sys.epsilon = decode_rational(field(b, "epsilon", path), path + ".epsilon");
    const json& peaks = field(b, "peaks", path);
    if (!peaks.is_array()) schema_error(path + ".peaks", "expected an array of item arrays");
    for (std::size_t i = 0; i < peaks.size(); ++i) {
      sys.peaks.push_back(decode_items(peaks[i], m, path + ".peaks[" + std::to_string(i) + "]"));
    }
    const long long k = decode_int(field(b, "k", path), path + ".k");
    if (k != static_cast<long long>(sys.peaks.size())) {
      schema_error(path + ".k", "k = " + std::to_string(k) + " but " + std::to_string(sys.peaks.size()) + " peaks given");
    }
    const auto report = validate_set_system(sys);
    if (!report.valid) schema_error(path + ".peaks", report.violations.front());
    return MultiPeak{std::move(sys)};
  }
  if (kind == "explicit") {
    only_fields(b, {"type", "table"}, path);
    if (m > kMaxExhaustiveItems) schema_error(path, "explicit tables need m <= " + std::to_string(kMaxExhaustiveItems));
    const json& table = field(b, "table", path);
    if (!table.is_array()) schema_error(path + ".table", "expected an array");
    const std::size_t subsets = std::size_t{1} << m;
    std::vector<Rational> values(subsets);
    std::vector<char> present(subsets, 0);
    for (std::size_t i = 0; i < table.size(); ++i) {
      const std::string entry_path = path + ".table[" + std::to_string(i) + "]";
      const json& entry = table[i];
      if (!entry.is_object()) schema_error(entry_path, "expected {\"items\": [...], \"value\": ...}");
      only_fields(entry, {"items", "value"}, entry_path);
      const ItemSet s = decode_items(field(entry, "items", entry_path), m, entry_path + ".items");
      if (present[s.mask()]) schema_error(entry_path, "duplicate entry for " + to_string(s));
      present[s.mask()] = 1;
      values[s.mask()] = decode_nonnegative(field(entry, "value", entry_path), entry_path + ".value");
    }
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      if (!present[mask]) schema_error(path + ".table", "missing entry for " + to_string(ItemSet::from_mask(mask)));
    }
    return Explicit{std::move(values)};
  }
  schema_error(path + ".type", "unknown valuation type \"" + kind + "\"");
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("$: ") + e.what());
  }
}

}  // namespace

std::string encode_instance(const Instance& instance) {
  validate_instance(instance);
  json doc;
  doc["m"] = instance.m;
  json bidders = json::array();
  for (const auto& v : instance.bidders) bidders.push_back(encode_bidder(v));
  doc["bidders"] = std::move(bidders);
  json meta;
  meta["name"] = instance.metadata.name;
  meta["seed"] = instance.metadata.seed ? json(*instance.metadata.seed) : json(nullptr);
  meta["generator"] = json::object();
  for (const auto& [key, value] : instance.metadata.generator) meta["generator"][key] = value;
  doc["metadata"] = std::move(meta);
  return doc.dump(2) + "\n";
}

Instance decode_instance(std::string_view text) {
  const json doc = parse_document(text);
  if (!doc.is_object()) schema_error("$", "expected an object");
  only_fields(doc, {"m", "bidders", "metadata"}, "$");
  Instance instance;
  const long long m = decode_int(field(doc, "m", "$"), "m");
  if (m < 0 || m > ItemSet::kMaxItems) schema_error("m", "item count " + std::to_string(m) + " outside 0.." + std::to_string(ItemSet::kMaxItems));
  instance.m = static_cast<int>(m);

  const json& bidders = field(doc, "bidders", "$");
  if (!bidders.is_array()) schema_error("bidders", "expected an array");
  for (std::size_t i = 0; i < bidders.size(); ++i) {
    const std::string path = "bidders[" + std::to_string(i) + "]";
    auto variant = decode_variant(bidders[i], instance.m, path);
    try {
      instance.bidders.emplace_back(instance.m, std::move(variant));
    } catch (const InvalidArgument& e) {
      schema_error(path, e.what());
    } catch (const MalformedSystem& e) {
      schema_error(path, e.what());
    }
  }

  if (auto it = doc.find("metadata"); it != doc.end()) {
    const json& meta = *it;
    if (!meta.is_object()) schema_error("metadata", "expected an object");
    only_fields(meta, {"name", "seed", "generator"}, "metadata");
    if (auto name = meta.find("name"); name != meta.end()) {
      if (!name->is_string()) schema_error("metadata.name", "expected a string");
      instance.metadata.name = name->get<std::string>();
    }
    if (auto seed = meta.find("seed"); seed != meta.end() && !seed->is_null()) {
      if (!seed->is_number_unsigned()) schema_error("metadata.seed", "expected a nonnegative integer");
      instance.metadata.seed = seed->get<std::uint64_t>();
    }
    if (auto gen = meta.find("generator"); gen != meta.end()) {
      if (!gen->is_object()) schema_error("metadata.generator", "expected an object");
      for (auto g = gen->begin(); g != gen->end(); ++g) {
        if (!g->is_string()) schema_error("metadata.generator." + g.key(), "expected a string");
        instance.metadata.generator[g.key()] = g->get<std::string>();
      }
    }
  }
  return instance;
}

std::string encode_prices(const PriceVector& p) {
  json doc;
  json prices = json::array();
  for (const auto& r : p.values()) prices.push_back(encode_rational(r));
  doc["prices"] = std::move(prices);
  return doc.dump(2) + "\n";
}

PriceVector decode_prices(std::string_view text, int m) {
  const json doc = parse_document(text);
  if (!doc.is_object()) schema_error("$", "expected an object");
  only_fields(doc, {"prices"}, "$");
  return PriceVector(decode_values(field(doc, "prices", "$"), m, "prices"));
}

}  // namespace subauc
