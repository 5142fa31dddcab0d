#include "subauc/rational.hpp"

#include <cctype>

#include "subauc/errors.hpp"

namespace subauc {
namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (!text.empty() && text[0] == '-') {
    negative = true;
    i = 1;
  }
  if (i == text.size()) {
    throw InvalidArgument("malformed rational \"" + std::string(whole) + "\"");
  }
  Integer value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw InvalidArgument("malformed rational \"" + std::string(whole) + "\"");
    }
    value = value * 10 + (text[i] - '0');
  }
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));

  const Integer num = parse_integer(text.substr(0, slash), text);
  const Integer den = parse_integer(text.substr(slash + 1), text);
  if (den <= 0) {
    throw InvalidArgument("rational \"" + std::string(text) + "\" needs a positive denominator");
  }
  Rational r(num, den);
  if (r.numerator() != num) {
    throw InvalidArgument("rational \"" + std::string(text) + "\" is not in lowest terms");
  }
  return r;
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return r.numerator().str();
  return r.numerator().str() + "/" + r.denominator().str();
}

Integer floor(const Rational& r) {
  Integer q = r.numerator() / r.denominator();
  if (r.numerator() < 0 && q * r.denominator() != r.numerator()) --q;
  return q;
}

}  // namespace subauc
