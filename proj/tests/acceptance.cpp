// Acceptance suite: one pass/fail line per criterion.
//
//   subauc_acceptance [--fixtures DIR] [--artifacts DIR] [--freeze]
//
// --freeze regenerates the frozen corpus status and the golden auction
// trace instead of checking against them.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oracles.hpp"
#include "subauc/auction.hpp"
#include "subauc/codec.hpp"
#include "subauc/demand.hpp"
#include "subauc/equilibrium.hpp"
#include "subauc/errors.hpp"
#include "subauc/generators.hpp"
#include "subauc/report.hpp"
#include "subauc/validators.hpp"

namespace fs = std::filesystem;
using namespace subauc;
using nlohmann::json;

namespace {

struct Config {
  fs::path fixtures;
  fs::path artifacts;
  bool freeze = false;
};

struct Line {
  std::string id;
  std::string title;
  bool pass = false;
  std::string detail;
};

Rational q(long long n, long long d = 1) { return make_rational(n, d); }

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  std::ofstream(path, std::ios::binary) << text;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string f; in >> f;) out.push_back(f);
  return out;
}

std::string prices_text(const PriceVector& p) {
  std::vector<std::string> parts;
  for (const auto& x : p.values()) parts.push_back(to_string(x));
  return "(" + join(parts, ",") + ")";
}

std::vector<oracle::Items> maximizers(const Valuation& v, const PriceVector& p) {
  const std::vector<Rational> prices(p.values().begin(), p.values().end());
  return oracle::brute_demand([&](const oracle::Items& s) { return v(ItemSet(s)); }, prices).maximizers;
}

// ---------------------------------------------------------------- 1

std::vector<Line> criterion_formulas(const Config& cfg) {
  const Valuation v = multipeak_fixture(1).bidders.front();
  const auto independent = oracle::multipeak({{1, 2, 3, 4}, {5, 6, 7, 8}}, 4, q(1, 2));
  std::istringstream in(read_file(cfg.fixtures / "mp1_values.txt"));
  std::string line;
  int checked = 0;
  std::vector<std::string> wrong;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream cols(line);
    std::string items_text, value_text;
    cols >> items_text >> value_text;
    oracle::Items items;
    std::stringstream split(items_text);
    for (std::string tok; std::getline(split, tok, ',');) {
      if (tok != "-") items.push_back(std::stoi(tok));
    }
    const Rational want = parse_rational(value_text);
    const Rational got = v(ItemSet(items));
    ++checked;
    if (got != want || independent(items) != want) {
      wrong.push_back("v({" + items_text + "}) = " + to_string(got) + ", fixture " + value_text);
    }
  }
  Line out{"1", "multi-peak formula pinning", checked >= 5 && wrong.empty(), ""};
  out.detail = std::to_string(checked) + " frozen values reproduced exactly";
  if (!wrong.empty()) out.detail = join(wrong, "; ");
  return {out};
}

// ---------------------------------------------------------------- 2

struct CorpusParams {
  int m, s, k;
  long long eps_num, eps_den;
};

// Both regimes on purpose: m <= 2s with eps = 3/4 tends to validate, the
// rest tends not to.
constexpr CorpusParams kCorpus[] = {
    {8, 4, 2, 3, 4}, {8, 4, 3, 3, 4}, {6, 3, 2, 3, 4},  {7, 4, 2, 3, 4},  {10, 5, 2, 3, 4},
    {12, 6, 2, 3, 4}, {14, 7, 2, 3, 4}, {8, 4, 2, 1, 2}, {9, 3, 3, 1, 3}, {12, 4, 3, 1, 2},
    {14, 7, 1, 1, 2}, {10, 5, 3, 3, 5}, {11, 6, 2, 2, 3},
};
constexpr int kCorpusSeeds = 10;
constexpr int kPricesPerInstance = 10;

std::vector<Line> criterion_oracle_equivalence(const Config& cfg) {
  std::vector<std::string> status;
  std::ostringstream counterexamples;
  int pairs = 0, valid_pairs = 0, valid_instances = 0, instances = 0, mismatches = 0;
  std::vector<std::string> valid_failures;

  for (const auto& params : kCorpus) {
    for (int seed = 0; seed < kCorpusSeeds; ++seed) {
      const Rational eps = q(params.eps_num, params.eps_den);
      const Instance inst = gen_multipeak({params.m, params.s, params.k, eps, 1, true}, static_cast<std::uint64_t>(seed));
      const Valuation& v = inst.bidders.front();
      const bool valid = check_monotone(v).holds && check_submodular(v).holds;
      ++instances;
      valid_instances += valid ? 1 : 0;
      Rng rng(static_cast<std::uint64_t>(instances) * 7919);
      for (int t = 0; t < kPricesPerInstance; ++t) {
        const PriceVector p = gen_prices(params.m, 8 * params.s, 4 * params.s * params.s, rng);
        const DemandResult brute = brute_force_demand(v, p);
        const DemandResult fast = multipeak_demand(v, p);
        const bool match = brute.max_utility == fast.max_utility;
        ++pairs;
        valid_pairs += valid ? 1 : 0;
        std::ostringstream row;
        row << params.m << ' ' << params.s << ' ' << params.k << ' ' << to_string(eps) << ' ' << seed << ' ' << t << ' '
            << (valid ? "valid" : "invalid") << ' ' << to_string(brute.max_utility) << ' ' << to_string(fast.max_utility)
            << ' ' << (match ? "match" : "mismatch");
        status.push_back(row.str());
        if (match) continue;
        ++mismatches;
        if (valid) valid_failures.push_back(row.str());
        json cx = {{"instance", json::parse(encode_instance(inst))},
                   {"prices", json::parse(encode_prices(p))},
                   {"valid", valid},
                   {"brute", to_json(brute)},
                   {"fast", to_json(fast)}};
        counterexamples << cx.dump() << '\n';
      }
    }
  }

  std::string body = "# m s k eps seed price-index validity brute fast status\n" + join(status, "\n") + "\n";
  const fs::path frozen = cfg.fixtures / "multipeak_corpus_status.txt";
  write_file(cfg.artifacts / "multipeak_counterexamples.jsonl", counterexamples.str());
  if (cfg.freeze) write_file(frozen, body);

  // Regression check against the frozen corpus: same pairs, and nothing
  // that matched before may mismatch now.
  std::vector<std::string> regressions;
  std::istringstream old(read_file(frozen));
  std::string line;
  std::size_t row = 0;
  while (std::getline(old, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (row >= status.size()) {
      regressions.push_back("frozen corpus has extra rows");
      break;
    }
    const auto before = fields(line);
    const auto now = fields(status[row++]);
    // The brute-force optimum pins the instance and prices.
    if (before.size() != 10 || !std::equal(before.begin(), before.begin() + 8, now.begin())) {
      regressions.push_back("corpus drift at row " + std::to_string(row));
    } else if (before[9] == "match" && now[9] != "match") {
      regressions.push_back("regressed: " + status[row - 1]);
    }
  }
  if (row != status.size()) regressions.push_back("frozen corpus is missing rows");

  Line eq{"2", "multi-peak oracle equivalence on validating instances", pairs >= 1000 && valid_pairs > 0 && valid_failures.empty(), ""};
  eq.detail = std::to_string(pairs) + " pairs over " + std::to_string(instances) + " instances; " + std::to_string(valid_instances) +
              " instances (" + std::to_string(valid_pairs) + " pairs) pass monotone+submodular and all match exactly";
  if (!valid_failures.empty()) eq.detail = "mismatch on validating instance: " + valid_failures.front();
  Line cx{"2", "non-validating mismatches captured, frozen statuses do not regress", regressions.empty(), ""};
  cx.detail = std::to_string(mismatches) + " mismatches, all on non-validating instances, written to " +
              (cfg.artifacts / "multipeak_counterexamples.jsonl").string();
  if (!regressions.empty()) cx.detail = join(regressions, "; ");
  return {eq, cx};
}

// ---------------------------------------------------------------- 3

std::vector<Line> criterion_class_oracles(const Config&) {
  constexpr int kCases = 1000;
  int bad_add = 0, bad_unit = 0, bad_budget = 0;
  Rng rng(2718);
  for (int c = 0; c < kCases; ++c) {
    const int m = static_cast<int>(rng.uniform(0, 12));
    std::vector<Rational> values, prices;
    const long long den = rng.uniform(1, 4);
    for (int j = 0; j < m; ++j) {
      values.push_back(Rational(Integer(rng.uniform(0, 20)), Integer(den)));
      prices.push_back(Rational(Integer(rng.uniform(0, 20)), Integer(den)));
    }
    const Rational budget(Integer(rng.uniform(0, 60)), Integer(den));
    const PriceVector p(prices);
    const Valuation add(m, Additive{values});
    const Valuation unit(m, UnitDemand{values});
    const Valuation budgeted(m, BudgetAdditive{values, budget});
    auto same = [&](const DemandResult& a, const DemandResult& b) {
      return a.max_utility == b.max_utility && a.witness == b.witness;
    };
    bad_add += same(additive_demand(add, p), brute_force_demand(add, p)) ? 0 : 1;
    bad_unit += same(unit_demand_demand(unit, p), brute_force_demand(unit, p)) ? 0 : 1;
    bad_budget += same(budget_additive_demand(budgeted, p), brute_force_demand(budgeted, p)) ? 0 : 1;
  }
  Line out{"3", "class oracles match brute force", bad_add + bad_unit + bad_budget == 0, ""};
  out.detail = std::to_string(kCases) + " cases per class (m <= 12); mismatches additive " + std::to_string(bad_add) +
               ", unit-demand " + std::to_string(bad_unit) + ", budget-additive " + std::to_string(bad_budget);
  return {out};
}

// ---------------------------------------------------------------- 4

// Random monotone table: either a weighted coverage function (always
// submodular) or cumulative random increments (usually not).
Valuation random_explicit(Rng& rng, int m) {
  std::vector<Rational> table(std::size_t{1} << m);
  if (rng.uniform(0, 1) == 0) {
    const int universe = static_cast<int>(rng.uniform(1, 6));
    std::vector<long long> weight(static_cast<std::size_t>(universe));
    for (auto& w : weight) w = rng.uniform(0, 5);
    std::vector<std::uint64_t> covers(static_cast<std::size_t>(m));
    for (auto& c : covers) c = static_cast<std::uint64_t>(rng.uniform(0, (1LL << universe) - 1));
    for (std::size_t mask = 0; mask < table.size(); ++mask) {
      std::uint64_t covered = 0;
      for (int j = 0; j < m; ++j) {
        if (mask >> j & 1U) covered |= covers[static_cast<std::size_t>(j)];
      }
      long long total = 0;
      for (int e = 0; e < universe; ++e) {
        if (covered >> e & 1U) total += weight[static_cast<std::size_t>(e)];
      }
      table[mask] = q(total);
    }
  } else {
    for (std::size_t mask = 1; mask < table.size(); ++mask) {
      Rational base;
      for (int j = 0; j < m; ++j) {
        if (mask >> j & 1U) base = std::max(base, table[mask & ~(std::size_t{1} << j)]);
      }
      table[mask] = base + q(rng.uniform(0, 3), 2);
    }
  }
  return Valuation(m, Explicit{table});
}

bool violates(const Valuation& v, ItemSet s, ItemSet t) { return v(s | t) + v(s & t) > v(s) + v(t); }

std::vector<Line> criterion_validators(const Config&) {
  constexpr int kTables = 500;
  Rng rng(161803);
  int disagreements = 0, bogus = 0, submodular = 0;
  for (int c = 0; c < kTables; ++c) {
    const Valuation v = random_explicit(rng, static_cast<int>(rng.uniform(1, 8)));
    const SubmodularReport def = submodular_by_definition(v);
    const SubmodularReport marg = submodular_by_marginals(v);
    disagreements += def.holds == marg.holds ? 0 : 1;
    submodular += def.holds ? 1 : 0;
    for (const auto* rep : {&def, &marg}) {
      if (!rep->holds && (!rep->counterexample || !violates(v, rep->counterexample->first, rep->counterexample->second))) ++bogus;
    }
  }
  Line forms{"4", "submodularity forms agree on random explicit tables", disagreements == 0 && bogus == 0 && submodular > 0 &&
                                                                          submodular < kTables,
             ""};
  forms.detail = std::to_string(kTables) + " tables (m <= 8), " + std::to_string(submodular) + " submodular; disagreements " +
                 std::to_string(disagreements) + ", invalid counterexamples " + std::to_string(bogus);

  const Valuation supermodular(2, Explicit{{q(0), q(0), q(0), q(1)}});
  const SubmodularReport sm = check_submodular(supermodular);
  Line reject{"4", "constructed supermodular table rejected",
              !sm.holds && sm.counterexample && violates(supermodular, sm.counterexample->first, sm.counterexample->second), ""};
  reject.detail = sm.counterexample ? "counterexample S=" + to_string(sm.counterexample->first) +
                                          " T=" + to_string(sm.counterexample->second)
                                    : "no counterexample";

  const Valuation mp1 = multipeak_fixture(1).bidders.front();
  const MonotoneReport mono = check_monotone(mp1);
  bool concrete = false;
  std::string where = "none";
  if (!mono.holds && mono.counterexample) {
    const auto [s, x] = *mono.counterexample;
    concrete = mp1(s | ItemSet{x}) < mp1(s);
    where = "v(" + to_string(s | ItemSet{x}) + ") = " + to_string(mp1(s | ItemSet{x})) + " < v(" + to_string(s) +
            ") = " + to_string(mp1(s));
  }
  Line flag{"4", "check_monotone flags the two-peak fixture", concrete, where};
  return {forms, reject, flag};
}

// ---------------------------------------------------------------- 5

std::vector<Line> criterion_envy_free(const Config&) {
  constexpr int kInstancesPerShape = 12;
  long long checks = 0, disagreements = 0, bad_witnesses = 0, witnesses = 0, bad_allocations = 0;
  for (int n = 0; n <= 4; ++n) {
    for (int m = 1; m <= 4; ++m) {
      for (int k = 0; k < kInstancesPerShape; ++k) {
        const Instance inst = gen_unit_demand(n, m, {0, 5}, static_cast<std::uint64_t>(100 * n + 10 * m + k));
        std::vector<Rational> prices(static_cast<std::size_t>(m));
        long long total = 1;
        for (int j = 0; j < m; ++j) total *= 6;
        for (long long code = 0; code < total; ++code) {
          long long rest = code;
          for (int j = 0; j < m; ++j) {
            prices[static_cast<std::size_t>(j)] = q(rest % 6);
            rest /= 6;
          }
          const PriceVector p(prices);
          const EnvyFreeReport general = envy_free_allocation(inst, p, 1 << 12);
          const auto matching = unit_demand_envy_free(inst, p);
          ++checks;
          if (general.envy_free != std::holds_alternative<Allocation>(matching)) ++disagreements;
          if (const auto* a = std::get_if<Allocation>(&matching)) {
            if (!allocation_is_envy_free(inst, p, *a)) ++bad_allocations;
            continue;
          }
          const Witness& w = std::get<Witness>(matching);
          ++witnesses;
          int demanders = 0;
          for (const auto& v : inst.bidders) {
            bool all_meet = true;
            for (const auto& s : maximizers(v, p)) all_meet = all_meet && !(ItemSet(s) & w.items).empty();
            demanders += all_meet ? 1 : 0;
          }
          if (!witness_is_overdemanded(inst, p, w) || demanders <= static_cast<int>(w.items.size())) ++bad_witnesses;
        }
      }
    }
  }
  Line out{"5", "envy-free search agrees with unit-demand matching",
           disagreements == 0 && bad_witnesses == 0 && bad_allocations == 0, ""};
  out.detail = std::to_string(checks) + " (instance, price) checks over n <= 4, m <= 4, prices 0..5; disagreements " +
               std::to_string(disagreements) + "; " + std::to_string(witnesses) + " Hall witnesses, " +
               std::to_string(bad_witnesses) + " failing the overdemand inequality";
  return {out};
}

// ---------------------------------------------------------------- 6

std::vector<Line> criterion_dgs(const Config&) {
  constexpr int kInstances = 200;
  int not_terminated = 0, not_envy_free = 0, not_minimal = 0;
  for (int c = 0; c < kInstances; ++c) {
    Rng rng(static_cast<std::uint64_t>(c));
    const int n = static_cast<int>(rng.uniform(1, 5));
    const int m = static_cast<int>(rng.uniform(1, 5));
    const Instance inst = gen_unit_demand(n, m, {0, 5}, static_cast<std::uint64_t>(c));
    auto rule = dgs_rule(q(1));
    const AuctionTrace trace = run_ascending(inst, *rule, 500);
    if (trace.outcome != Outcome::kEnvyFree) {
      ++not_terminated;
      continue;
    }
    if (!envy_free_allocation(inst, trace.final_prices, 1 << 12).envy_free) ++not_envy_free;
    const auto minimal = minimal_envy_free(inst, q(5), q(1)).minimal;
    if (std::find(minimal.begin(), minimal.end(), trace.final_prices) == minimal.end()) ++not_minimal;
  }
  Line dgs{"6", "DGS ends at a grid-minimal envy-free price", not_terminated + not_envy_free + not_minimal == 0, ""};
  dgs.detail = std::to_string(kInstances) + " unit-demand instances (n, m <= 5, values <= 5); not certified " +
               std::to_string(not_terminated) + ", not envy-free " + std::to_string(not_envy_free) + ", not grid-minimal " +
               std::to_string(not_minimal);

  int wrong = 0;
  for (int c = 0; c < kInstances; ++c) {
    Rng rng(static_cast<std::uint64_t>(10'000 + c));
    const int n = static_cast<int>(rng.uniform(1, 5));
    const int m = static_cast<int>(rng.uniform(1, 5));
    const Instance inst = gen_additive(n, m, {0, 9}, static_cast<std::uint64_t>(10'000 + c));
    auto rule = english_additive_rule(q(1));
    const AuctionTrace trace = run_ascending(inst, *rule, 500);
    bool ok = trace.outcome == Outcome::kEnvyFree;
    for (Item j = 1; ok && j <= m; ++j) {
      std::vector<Rational> column;
      for (const auto& v : inst.bidders) column.push_back(v(ItemSet{j}));
      std::sort(column.rbegin(), column.rend());
      ok = trace.final_prices.at(j) == (column.size() > 1 ? column[1] : Rational(0));
    }
    wrong += ok ? 0 : 1;
  }
  Line english{"6", "English auction ends at per-item second-highest values", wrong == 0, ""};
  english.detail = std::to_string(kInstances) + " additive instances; " + std::to_string(wrong) + " differ";
  return {dgs, english};
}

// ---------------------------------------------------------------- 7

constexpr int kThesisSteps = 200;

std::string greedy_trace_text(const Instance& inst) {
  auto rule = greedy_submodular_rule(q(1, 64));
  return to_json(run_ascending(inst, *rule, kThesisSteps)).dump(2) + "\n";
}

std::vector<Line> criterion_thesis(const Config& cfg) {
  const Instance inst = multipeak_fixture(2);
  std::vector<Line> out;

  const EnvyFreeReport zero = envy_free_allocation(inst, PriceVector(inst.m), 1 << 12);
  std::vector<std::vector<oracle::Items>> options;
  for (const auto& v : inst.bidders) options.push_back(maximizers(v, PriceVector(inst.m)));
  const bool reference = oracle::some_disjoint_choice(options);
  out.push_back({"7", "zero price is not envy-free (exhaustive search)", !zero.envy_free && !reference,
                 std::to_string(options[0].size()) + "x" + std::to_string(options[1].size()) +
                     " demand-set pairs all intersect; search explored " + std::to_string(zero.nodes_explored) + " nodes"});

  auto dgs = dgs_rule(q(1, 64));
  const AuctionTrace dgs_trace = run_ascending(inst, *dgs, kThesisSteps);
  out.push_back({"7", "DGS rule ends Stalled or StepLimit",
                 dgs_trace.outcome == Outcome::kStalled || dgs_trace.outcome == Outcome::kStepLimit,
                 std::string(outcome_name(dgs_trace.outcome)) + ": " + dgs_trace.stall_reason});

  auto greedy = greedy_submodular_rule(q(1, 64));
  const AuctionTrace trace = run_ascending(inst, *greedy, kThesisSteps);
  Line ends{"7", "greedy rule ends Stalled or StepLimit",
            trace.outcome == Outcome::kStalled || trace.outcome == Outcome::kStepLimit, ""};
  ends.detail = std::string(outcome_name(trace.outcome)) + " after " + std::to_string(trace.steps.size()) + " steps";
  if (trace.outcome == Outcome::kEnvyFree) {
    int still_envy_free = 0;
    for (Item j = 1; j <= inst.m; ++j) {
      PriceVector lower = trace.final_prices;
      if (lower.at(j) < q(1, 64)) continue;
      lower.set(j, lower.at(j) - q(1, 64));
      still_envy_free += envy_free_allocation(inst, lower, 1 << 12).envy_free ? 1 : 0;
    }
    ends.detail += " at p=" + prices_text(trace.final_prices) + "; lowering a single coordinate by 1/64 stays envy-free for " +
                   std::to_string(still_envy_free) + " of " + std::to_string(inst.m) + " items, so the certified price is not minimal";
  }
  out.push_back(ends);

  const bool sound = trace.outcome != Outcome::kEnvyFree ||
                     (trace.allocation && allocation_is_envy_free(inst, trace.final_prices, *trace.allocation));
  out.push_back({"7", "no false certificate", sound, "every certified allocation passes the exhaustive recheck"});

  const fs::path golden = cfg.fixtures / "mp1x2_greedy_trace.json";
  const std::string first = greedy_trace_text(inst);
  const std::string second = greedy_trace_text(inst);
  write_file(cfg.artifacts / "mp1x2_greedy_trace.json", first);
  if (cfg.freeze) write_file(golden, first);
  const bool identical = first == second && first == read_file(golden);
  out.push_back({"7", "trace reproduced byte-identically", identical,
                 identical ? std::to_string(first.size()) + " bytes, equal to the golden trace" : "trace differs from the golden file"});
  return out;
}

// ---------------------------------------------------------------- 8

std::vector<Line> criterion_serialization(const Config&) {
  constexpr int kInstances = 500;
  int failures = 0;
  for (int c = 0; c < kInstances; ++c) {
    const auto seed = static_cast<std::uint64_t>(c);
    Rng rng(seed);
    const int n = static_cast<int>(rng.uniform(0, 4));
    const int m = static_cast<int>(rng.uniform(1, 12));
    Instance inst;
    switch (c % 4) {
      case 0: inst = gen_additive(n, m, {0, 50}, seed); break;
      case 1: inst = gen_unit_demand(n, m, {0, 50}, seed); break;
      case 2: inst = gen_budget_additive(n, m, {0, 50}, {0, 200}, seed); break;
      default: {
        const int s = static_cast<int>(rng.uniform(std::max(1, m / 3), m));
        inst = gen_multipeak({m, s, 1, q(rng.uniform(1, 7), 8), n, false}, seed);
      }
    }
    const std::string once = encode_instance(inst);
    const std::string twice = encode_instance(decode_instance(once));
    failures += once == twice ? 0 : 1;
  }
  return {{"8", "encode/decode/encode round trip", failures == 0,
           std::to_string(kInstances) + " seeded instances; " + std::to_string(failures) + " differ"}};
}

struct Criterion {
  std::string id;
  double limit_seconds;
  std::function<std::vector<Line>(const Config&)> run;
};

std::set<std::string> expected_failures(const Config& cfg) {
  std::set<std::string> out;
  const fs::path path = cfg.fixtures / "expected_failures.txt";
  if (!fs::exists(path)) return out;
  std::istringstream in(read_file(path));
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#') out.insert(line);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  std::string fixtures = SUBAUC_FIXTURE_DIR;
  std::string artifacts = SUBAUC_ARTIFACT_DIR;
  CLI::App app{"Acceptance criteria"};
  app.add_option("--fixtures", fixtures, "Directory of frozen fixtures");
  app.add_option("--artifacts", artifacts, "Directory for emitted counterexamples and traces");
  app.add_flag("--freeze", cfg.freeze, "Regenerate frozen fixtures instead of checking them");
  CLI11_PARSE(app, argc, argv);
  cfg.fixtures = fixtures;
  cfg.artifacts = artifacts;

  const Criterion criteria[] = {
      {"1", 1, criterion_formulas},        {"2", 300, criterion_oracle_equivalence},
      {"3", 120, criterion_class_oracles}, {"4", 60, criterion_validators},
      {"5", 120, criterion_envy_free},     {"6", 300, criterion_dgs},
      {"7", 60, criterion_thesis},         {"8", 30, criterion_serialization},
  };
  const std::set<std::string> allowed = expected_failures(cfg);

  int unexpected = 0;
  int known = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<Line> lines;
    try {
      lines = c.run(cfg);
    } catch (const std::exception& e) {
      lines = {{c.id, "criterion raised an exception", false, e.what()}};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      Line& line = lines[i];
      const std::string label = c.id + (lines.size() > 1 ? std::string(1, static_cast<char>('a' + i)) : "");
      const bool pass = line.pass && in_time;
      const bool tolerated = !pass && allowed.count(label) > 0;
      std::cout << (pass ? "PASS" : tolerated ? "FAIL (expected)" : "FAIL") << "  [" << label << "] " << line.title << "  ("
                << std::fixed << std::setprecision(2) << seconds << " s, limit " << std::setprecision(0) << c.limit_seconds
                << " s)\n        " << line.detail << (in_time ? "" : "; over the time limit") << "\n";
      if (pass && allowed.count(label) > 0) {
        std::cout << "        listed as an expected failure but now passes\n";
        ++unexpected;
      }
      if (tolerated) ++known;
      if (!pass && !tolerated) ++unexpected;
    }
  }
  std::cout << (unexpected == 0 ? "acceptance: all criteria pass" : "acceptance: unexpected results")
            << (known ? " except " + std::to_string(known) + " expected failure(s)" : "") << "\n";
  return unexpected == 0 ? 0 : 1;
}
