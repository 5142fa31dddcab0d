#include "subauc/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "subauc/codec.hpp"
#include "subauc/errors.hpp"
#include "subauc/generators.hpp"
#include "subauc/report.hpp"

namespace subauc {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

// Raised for conditions that should exit with kExitUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string out_path;
  std::string format = "json";
  std::uint64_t seed = 0;
  bool no_timing = false;
};

struct CommandResult {
  json result;
  std::string text;  // human rendering for --format text
  int exit_code = kExitOk;
  std::optional<InstanceMetadata> provenance;
  std::string instance_path;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Instance load_instance(const std::string& path) { return decode_instance(read_file(path)); }

PriceVector load_prices(const std::string& path, int m) {
  if (path.empty()) return PriceVector(m);
  return decode_prices(read_file(path), m);
}

Rational rational_option(const std::string& text, const std::string& name) {
  try {
    return parse_rational(text);
  } catch (const std::exception& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

ValueRange range_option(const std::string& text, const std::string& name) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const long long v = std::stoll(text);
      return {v, v};
    }
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("--" + name + ": expected LO..HI, got \"" + text + "\"");
  }
}

void emit(std::ostream& out, const CommonOptions& common, const std::string& payload) {
  if (common.out_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(common.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + common.out_path);
  file << payload;
}

std::string render_demand_text(const DemandResult& d) {
  std::string text = "max utility " + to_string(d.max_utility) + ", set " + to_string(d.witness);
  if (d.argmax_count) text += ", " + std::to_string(*d.argmax_count) + " maximizers";
  return text;
}

// --- gen -------------------------------------------------------------------

struct GenOptions {
  std::string family;
  int n = 2;
  int m = 8;
  int s = 4;
  int k = 2;
  std::string eps = "1/2";
  bool independent = false;
  std::string values = "0..5";
  std::string budgets = "0..10";
};

Instance generate(const GenOptions& g, std::uint64_t seed) {
  if (g.family == "multipeak") {
    return gen_multipeak({g.m, g.s, g.k, rational_option(g.eps, "eps"), g.n, !g.independent}, seed);
  }
  if (g.family == "budget-additive") {
    return gen_budget_additive(g.n, g.m, range_option(g.values, "values"), range_option(g.budgets, "budgets"), seed);
  }
  if (g.family == "unit-demand") return gen_unit_demand(g.n, g.m, range_option(g.values, "values"), seed);
  if (g.family == "additive") return gen_additive(g.n, g.m, range_option(g.values, "values"), seed);
  if (g.family == "mp1") return multipeak_fixture(g.n);
  throw UsageError("unknown family \"" + g.family + "\"");
}

// --- validate --------------------------------------------------------------

CommandResult cmd_validate(const std::string& path) {
  const Instance instance = load_instance(path);
  CommandResult o;
  o.result = json::array();
  std::ostringstream text;
  for (int i = 0; i < instance.num_bidders(); ++i) {
    const Valuation& v = instance.bidders[static_cast<std::size_t>(i)];
    const MonotoneReport mono = check_monotone(v);
    const SubmodularReport sub = check_submodular(v);
    o.result.push_back({{"bidder", i},
                        {"type", std::string(kind_name(v.kind()))},
                        {"monotone", to_json(mono)},
                        {"submodular", to_json(sub)}});
    text << "bidder " << i << " (" << kind_name(v.kind()) << "): monotone "
         << (mono.holds ? "pass" : "FAIL");
    if (mono.counterexample) {
      text << " [v(" << to_string(mono.counterexample->first) << " + " << mono.counterexample->second
           << ") < v(" << to_string(mono.counterexample->first) << ")]";
    }
    text << ", submodular " << (sub.holds ? "pass" : "FAIL");
    if (sub.counterexample) {
      text << " [S=" << to_string(sub.counterexample->first) << ", T=" << to_string(sub.counterexample->second) << "]";
    }
    text << "\n";
    if (!mono.holds || !sub.holds) o.exit_code = kExitDomainFailure;
  }
  o.text = text.str();
  o.provenance = instance.metadata;
  return o;
}

// --- demand ----------------------------------------------------------------

CommandResult cmd_demand(const std::string& path, const std::string& prices_path, int bidder, const std::string& method,
                   bool compare) {
  const Instance instance = load_instance(path);
  if (bidder < 0 || bidder >= instance.num_bidders()) {
    throw UsageError("bidder " + std::to_string(bidder) + " out of range 0.." + std::to_string(instance.num_bidders() - 1));
  }
  const Valuation& v = instance.bidders[static_cast<std::size_t>(bidder)];
  const PriceVector p = load_prices(prices_path, instance.m);
  CommandResult o;
  o.provenance = instance.metadata;
  if (compare) {
    const DemandResult brute = brute_force_demand(v, p);
    const DemandResult fast = fast_demand(v, p);
    const bool match = brute.max_utility == fast.max_utility;
    o.result = {{"bidder", bidder}, {"brute", to_json(brute)}, {"fast", to_json(fast)}, {"match", match}};
    o.text = "brute: " + render_demand_text(brute) + "\nfast:  " + render_demand_text(fast) + "\n" +
             (match ? "match" : "MISMATCH") + "\n";
    if (!match) o.exit_code = kExitDomainFailure;
    return o;
  }
  DemandResult d;
  if (method == "brute") {
    d = brute_force_demand(v, p);
  } else if (method == "fast") {
    d = fast_demand(v, p);
  } else {
    throw UsageError("unknown method \"" + method + "\"");
  }
  o.result = {{"bidder", bidder}, {"method", method}, {"demand", to_json(d)}};
  o.text = render_demand_text(d) + "\n";
  return o;
}

// --- envyfree / minimal-ef ---------------------------------------------------

CommandResult cmd_envyfree(const std::string& path, const std::string& prices_path, std::size_t cap, bool assert_ef) {
  const Instance instance = load_instance(path);
  const PriceVector p = load_prices(prices_path, instance.m);
  const EnvyFreeReport r = envy_free_allocation(instance, p, cap);
  CommandResult o;
  o.provenance = instance.metadata;
  o.result = to_json(r);
  o.result["prices"] = to_json(p);
  std::ostringstream text;
  if (r.envy_free) {
    text << "envy-free; allocation:";
    for (std::size_t i = 0; i < r.allocation->assigned.size(); ++i) {
      text << " " << i << "<-" << to_string(r.allocation->assigned[i]);
    }
    text << "\n";
  } else {
    text << "not envy-free; exhaustion proof after " << r.nodes_explored << " nodes, contested items "
         << to_string(r.witness->items) << "\n";
  }
  o.text = text.str();
  if (assert_ef && !r.envy_free) o.exit_code = kExitDomainFailure;
  return o;
}

CommandResult cmd_minimal_ef(const std::string& path, const std::string& bound, const std::string& step,
                       std::uint64_t limit) {
  const Instance instance = load_instance(path);
  const MinimalEnvyFreeResult r =
      minimal_envy_free(instance, rational_option(bound, "bound"), rational_option(step, "step"), limit);
  CommandResult o;
  o.provenance = instance.metadata;
  o.result = to_json(r);
  std::ostringstream text;
  text << r.minimal.size() << " grid-minimal envy-free price vector(s) on " << r.grid_points << " grid points:\n";
  for (const auto& p : r.minimal) {
    text << " ";
    for (const auto& x : p.values()) text << " " << to_string(x);
    text << "\n";
  }
  o.text = text.str();
  return o;
}

// --- auction ---------------------------------------------------------------

CommandResult cmd_auction(const std::string& path, const std::string& rule_name, const std::string& increment,
                    int max_steps, const std::string& oracle, bool assert_ef) {
  const Instance instance = load_instance(path);
  const Rational inc = rational_option(increment, "increment");
  if (inc <= 0) throw UsageError("--increment must be positive");
  std::unique_ptr<PriceUpdateRule> rule;
  if (rule_name == "dgs") {
    rule = dgs_rule(inc);
  } else if (rule_name == "english") {
    rule = english_additive_rule(inc);
  } else if (rule_name == "greedy") {
    rule = greedy_submodular_rule(inc);
  } else {
    throw UsageError("unknown rule \"" + rule_name + "\"");
  }
  const AuctionTrace trace =
      run_ascending(instance, *rule, max_steps, oracle == "fast" ? ReportOracle::kFast : ReportOracle::kExhaustive);
  CommandResult o;
  o.provenance = instance.metadata;
  o.result = to_json(trace);
  std::ostringstream text;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    text << "step " << i << ": p =";
    for (const auto& x : trace.steps[i].prices.values()) text << " " << to_string(x);
    if (const auto* r = std::get_if<Raise>(&trace.steps[i].action)) {
      text << "  raise " << to_string(r->items) << " by " << to_string(r->increment);
    } else if (std::holds_alternative<Certify>(trace.steps[i].action)) {
      text << "  certify";
    } else {
      text << "  stall";
    }
    text << "\n";
  }
  text << "outcome: " << outcome_name(trace.outcome);
  if (!trace.stall_reason.empty()) text << " (" << trace.stall_reason << ")";
  text << "\n";
  o.text = text.str();
  if (assert_ef && trace.outcome != Outcome::kEnvyFree) o.exit_code = kExitDomainFailure;
  return o;
}

// --- bench -----------------------------------------------------------------

CommandResult cmd_bench(const GenOptions& g, int count, std::uint64_t seed, std::string& csv) {
  CommandResult o;
  json rows = json::array();
  std::ostringstream table;
  table << "index,seed,m,fast_us,brute_us,fast_utility,brute_utility,match\n";
  int mismatches = 0;
  double fast_total = 0;
  double brute_total = 0;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t instance_seed = seed + static_cast<std::uint64_t>(i);
    GenOptions one = g;
    one.n = 1;
    const Instance instance = generate(one, instance_seed);
    if (instance.bidders.empty()) continue;
    const Valuation& v = instance.bidders.front();
    if (!has_fast_oracle(v)) throw UsageError("family " + g.family + " has no fast oracle to benchmark");
    Rng rng(instance_seed ^ 0x9e3779b97f4a7c15ULL);
    const long long den = 4LL * g.s * g.s;
    const PriceVector p = gen_prices(instance.m, den / 2, den, rng);

    const auto t0 = Clock::now();
    const DemandResult fast = fast_demand(v, p);
    const auto t1 = Clock::now();
    const DemandResult brute = brute_force_demand(v, p);
    const auto t2 = Clock::now();
    const double fast_us = std::chrono::duration<double, std::micro>(t1 - t0).count();
    const double brute_us = std::chrono::duration<double, std::micro>(t2 - t1).count();
    const bool match = fast.max_utility == brute.max_utility;
    mismatches += match ? 0 : 1;
    fast_total += fast_us;
    brute_total += brute_us;
    rows.push_back({{"index", i},
                    {"seed", instance_seed},
                    {"m", instance.m},
                    {"fastMicros", fast_us},
                    {"bruteMicros", brute_us},
                    {"fastUtility", to_string(fast.max_utility)},
                    {"bruteUtility", to_string(brute.max_utility)},
                    {"match", match}});
    table << i << "," << instance_seed << "," << instance.m << "," << fast_us << "," << brute_us << ","
          << to_string(fast.max_utility) << "," << to_string(brute.max_utility) << "," << (match ? "yes" : "no")
          << "\n";
  }
  o.result = {{"family", g.family},
              {"rows", rows},
              {"summary", {{"count", count}, {"mismatches", mismatches}, {"fastMicrosTotal", fast_total}, {"bruteMicrosTotal", brute_total}}}};
  csv = table.str();
  std::ostringstream text;
  text << count << " instances, " << mismatches << " mismatches, fast " << fast_total << " us total, brute "
       << brute_total << " us total\n";
  o.text = text.str();
  return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact-arithmetic toolkit for combinatorial auctions with submodular bidders", "subauc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  CommonOptions common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", common.out_path, "Write the report to a file instead of stdout");
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "text", "csv"}));
    sub->add_option("--seed", common.seed, "Random seed");
    sub->add_flag("--no-timing", common.no_timing, "Omit wall-clock timing from the report");
  };

  std::string instance_path;
  std::string prices_path;

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded instance document");
  gen_cmd->add_option("family", gen.family, "multipeak | budget-additive | unit-demand | additive | mp1")->required();
  gen_cmd->add_option("--n", gen.n, "Number of bidders");
  gen_cmd->add_option("--m", gen.m, "Number of items");
  gen_cmd->add_option("--s", gen.s, "Peak size (multipeak)");
  gen_cmd->add_option("--k", gen.k, "Number of peaks (multipeak)");
  gen_cmd->add_option("--eps", gen.eps, "Closeness parameter in (0,1) (multipeak)");
  gen_cmd->add_flag("--independent", gen.independent, "Each bidder draws its own set system (multipeak)");
  gen_cmd->add_option("--values", gen.values, "Item value range LO..HI");
  gen_cmd->add_option("--budgets", gen.budgets, "Budget range LO..HI (budget-additive)");
  add_common(gen_cmd);

  auto* validate_cmd = app.add_subcommand("validate", "Exhaustive monotonicity and submodularity checks");
  validate_cmd->add_option("--instance", instance_path)->required();
  add_common(validate_cmd);

  int bidder = 0;
  std::string method = "brute";
  bool compare = false;
  auto* demand_cmd = app.add_subcommand("demand", "Demand query for one bidder");
  demand_cmd->add_option("--instance", instance_path)->required();
  demand_cmd->add_option("--prices", prices_path, "Prices document (default: all zero)");
  demand_cmd->add_option("--bidder", bidder, "0-based bidder index");
  demand_cmd->add_option("--method", method, "brute | fast")->check(CLI::IsMember({"brute", "fast"}));
  demand_cmd->add_flag("--compare", compare, "Run both oracles and compare utilities");
  add_common(demand_cmd);

  std::size_t cap = 4096;
  bool assert_ef = false;
  auto* ef_cmd = app.add_subcommand("envyfree", "Search for an envy-free allocation at given prices");
  ef_cmd->add_option("--instance", instance_path)->required();
  ef_cmd->add_option("--prices", prices_path, "Prices document (default: all zero)");
  ef_cmd->add_option("--cap", cap, "Maximum demand sets per bidder");
  ef_cmd->add_flag("--assert", assert_ef, "Exit 1 if the prices are not envy-free");
  add_common(ef_cmd);

  std::string bound;
  std::string step = "1";
  std::uint64_t limit = kDefaultGridLimit;
  auto* min_cmd = app.add_subcommand("minimal-ef", "Grid search for minimal envy-free prices");
  min_cmd->add_option("--instance", instance_path)->required();
  min_cmd->add_option("--bound", bound, "Largest grid price")->required();
  min_cmd->add_option("--step", step, "Grid step");
  min_cmd->add_option("--limit", limit, "Maximum number of grid points");
  add_common(min_cmd);

  std::string rule = "dgs";
  std::string increment = "1";
  int max_steps = 200;
  auto* auction_cmd = app.add_subcommand("auction", "Run an ascending auction and print its trace");
  auction_cmd->add_option("--instance", instance_path)->required();
  auction_cmd->add_option("--rule", rule, "dgs | english | greedy")->check(CLI::IsMember({"dgs", "english", "greedy"}));
  auction_cmd->add_option("--increment", increment, "Price increment per raise");
  auction_cmd->add_option("--max-steps", max_steps, "Step limit");
  std::string oracle = "exhaustive";
  auction_cmd->add_option("--oracle", oracle, "Demand reports from: exhaustive | fast")
      ->check(CLI::IsMember({"exhaustive", "fast"}));
  auction_cmd->add_flag("--assert", assert_ef, "Exit 1 unless the auction certifies envy-freeness");
  add_common(auction_cmd);

  int count = 20;
  auto* bench_cmd = app.add_subcommand("bench", "Time fast against brute-force demand oracles");
  bench_cmd->add_option("--family", gen.family, "multipeak | unit-demand | additive")->required();
  bench_cmd->add_option("--count", count, "Number of instances");
  bench_cmd->add_option("--m", gen.m, "Number of items");
  bench_cmd->add_option("--s", gen.s, "Peak size (multipeak)");
  bench_cmd->add_option("--k", gen.k, "Number of peaks (multipeak)");
  bench_cmd->add_option("--eps", gen.eps, "Closeness parameter (multipeak)");
  bench_cmd->add_option("--values", gen.values, "Item value range LO..HI");
  add_common(bench_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  try {
    if (chosen == gen_cmd) {
      emit(out, common, encode_instance(generate(gen, common.seed)));
      return kExitOk;
    }

    const auto start = Clock::now();
    CommandResult o;
    std::string csv;
    if (chosen == validate_cmd) {
      o = cmd_validate(instance_path);
    } else if (chosen == demand_cmd) {
      o = cmd_demand(instance_path, prices_path, bidder, method, compare);
    } else if (chosen == ef_cmd) {
      o = cmd_envyfree(instance_path, prices_path, cap, assert_ef);
    } else if (chosen == min_cmd) {
      o = cmd_minimal_ef(instance_path, bound, step, limit);
    } else if (chosen == auction_cmd) {
      o = cmd_auction(instance_path, rule, increment, max_steps, oracle, assert_ef);
    } else {
      o = cmd_bench(gen, count, common.seed, csv);
    }
    const double elapsed = std::chrono::duration<double, std::milli>(Clock::now() - start).count();

    if (common.format == "text") {
      emit(out, common, o.text);
    } else if (common.format == "csv") {
      if (chosen != bench_cmd) throw UsageError("--format csv is only available for bench");
      emit(out, common, csv);
    } else {
      json report;
      report["command"] = args;
      report["version"] = kToolVersion;
      report["provenance"] = o.provenance ? to_json(*o.provenance) : json(nullptr);
      if (!instance_path.empty() && chosen != bench_cmd) report["instance"] = instance_path;
      report["result"] = o.result;
      report["exitCode"] = o.exit_code;
      if (!common.no_timing) report["timingMs"] = elapsed;
      emit(out, common, report.dump(2) + "\n");
    }
    return o.exit_code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainFailure;
  }
}

}  // namespace subauc
