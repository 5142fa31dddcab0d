#pragma once

#include <vector>

#include <doctest.h>

#include "oracles.hpp"
#include "subauc/generators.hpp"
#include "subauc/valuation.hpp"

namespace testing_helpers {

using subauc::Rational;

inline Rational r(long long n, long long d = 1) { return subauc::make_rational(n, d); }

inline std::vector<Rational> rs(std::initializer_list<long long> values) {
  std::vector<Rational> out;
  for (long long v : values) out.push_back(r(v));
  return out;
}

inline subauc::Valuation mp1() { return subauc::multipeak_fixture(1).bidders.front(); }

inline oracle::SetFunction mp1_oracle() { return oracle::multipeak({{1, 2, 3, 4}, {5, 6, 7, 8}}, 4, r(1, 2)); }

inline subauc::ItemSet as_set(const oracle::Items& items) { return subauc::ItemSet(items); }

}  // namespace testing_helpers

namespace doctest {

template <>
struct StringMaker<subauc::Rational> {
  static String convert(const subauc::Rational& v) { return subauc::to_string(v).c_str(); }
};

template <>
struct StringMaker<subauc::ItemSet> {
  static String convert(const subauc::ItemSet& s) { return subauc::to_string(s).c_str(); }
};

}  // namespace doctest
