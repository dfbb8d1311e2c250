#include "liesym/rational.hpp"

#include <cctype>

#include "liesym/errors.hpp"

namespace liesym {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string num = text;
  std::string den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  bool negative = false;
  if (!num.empty() && (num[0] == '-' || num[0] == '+')) {
    negative = num[0] == '-';
    num = num.substr(1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational \"" + text + "\" (expected \"p\" or \"p/q\")");
  }
  BigInt d{den};
  if (d == 0) throw ParseError("zero denominator in rational \"" + text + "\"");
  BigInt n{num};
  if (negative) n = -n;
  // The two-integer constructor canonicalizes (reduced form, positive denominator).
  return Rational(n, d);
}

std::string format_rational(const Rational& value) {
  return value.str();
}

}  // namespace liesym
