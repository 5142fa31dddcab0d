#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace subauc {

/// Exact rational number. Always normalized (lowest terms, positive
/// denominator); arithmetic that would overflow 128 bits throws
/// std::overflow_error rather than rounding.
using Integer = boost::multiprecision::checked_int128_t;
using Rational = boost::rational<Integer>;

/// Parses "num/den" or a bare integer. The fraction must already be in
/// lowest terms with a positive denominator; "2/4" is rejected.
Rational parse_rational(std::string_view text);

/// Canonical text form: "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& r);

inline Rational make_rational(long long num, long long den = 1) {
  return Rational(Integer(num), Integer(den));
}

/// Largest integer not exceeding r.
Integer floor(const Rational& r);

}  // namespace subauc

// boost::rational's mixed-type operators recurse without end when the
// underlying integer is a multiprecision number. These exact-match overloads
// take priority and promote the builtin operand first.
namespace boost {

#define SUBAUC_MIXED_OPS(B)                                                                                   \
  inline bool operator==(const subauc::Rational& a, B b) { return a == subauc::Rational(subauc::Integer(b)); } \
  inline bool operator!=(const subauc::Rational& a, B b) { return a != subauc::Rational(subauc::Integer(b)); } \
  inline bool operator<(const subauc::Rational& a, B b) { return a < subauc::Rational(subauc::Integer(b)); }   \
  inline bool operator>(const subauc::Rational& a, B b) { return a > subauc::Rational(subauc::Integer(b)); }   \
  inline bool operator<=(const subauc::Rational& a, B b) { return a <= subauc::Rational(subauc::Integer(b)); } \
  inline bool operator>=(const subauc::Rational& a, B b) { return a >= subauc::Rational(subauc::Integer(b)); } \
  inline bool operator==(B a, const subauc::Rational& b) { return b == a; }                                    \
  inline bool operator!=(B a, const subauc::Rational& b) { return b != a; }                                    \
  inline bool operator<(B a, const subauc::Rational& b) { return b > a; }                                      \
  inline bool operator>(B a, const subauc::Rational& b) { return b < a; }                                      \
  inline bool operator<=(B a, const subauc::Rational& b) { return b >= a; }                                    \
  inline bool operator>=(B a, const subauc::Rational& b) { return b <= a; }                                    \
  inline subauc::Rational operator+(subauc::Rational a, B b) { return a += subauc::Rational(subauc::Integer(b)); } \
  inline subauc::Rational operator-(subauc::Rational a, B b) { return a -= subauc::Rational(subauc::Integer(b)); } \
  inline subauc::Rational operator*(subauc::Rational a, B b) { return a *= subauc::Rational(subauc::Integer(b)); } \
  inline subauc::Rational operator/(subauc::Rational a, B b) { return a /= subauc::Rational(subauc::Integer(b)); } \
  inline subauc::Rational operator+(B a, const subauc::Rational& b) { return subauc::Rational(subauc::Integer(a)) + b; } \
  inline subauc::Rational operator-(B a, const subauc::Rational& b) { return subauc::Rational(subauc::Integer(a)) - b; } \
  inline subauc::Rational operator*(B a, const subauc::Rational& b) { return subauc::Rational(subauc::Integer(a)) * b; } \
  inline subauc::Rational operator/(B a, const subauc::Rational& b) { return subauc::Rational(subauc::Integer(a)) / b; } \
  inline subauc::Rational& operator+=(subauc::Rational& a, B b) { return a += subauc::Rational(subauc::Integer(b)); } \
  inline subauc::Rational& operator-=(subauc::Rational& a, B b) { return a -= subauc::Rational(subauc::Integer(b)); } \
  inline subauc::Rational& operator*=(subauc::Rational& a, B b) { return a *= subauc::Rational(subauc::Integer(b)); } \
  inline subauc::Rational& operator/=(subauc::Rational& a, B b) { return a /= subauc::Rational(subauc::Integer(b)); }

SUBAUC_MIXED_OPS(int)
SUBAUC_MIXED_OPS(long long)

#undef SUBAUC_MIXED_OPS

}  // namespace boost
