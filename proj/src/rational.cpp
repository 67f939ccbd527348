#include "schedgame/rational.hpp"

#include <cctype>
#include <sstream>

#include "schedgame/errors.hpp"

namespace schedgame {

Integer rational_floor(const Rational& value) {
  Integer num = numerator(value);
  Integer den = denominator(value);  // > 0 by canonical form
  Integer q = num / den;             // truncates toward zero
  if (num < 0 && q * den != num) {
    q -= 1;
  }
  return q;
}

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
  std::string s = text;
  // Trim surrounding whitespace.
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) {
    throw validation_error("empty rational literal");
  }
  std::string digits = s;
  bool negative = false;
  if (digits.front() == '-' || digits.front() == '+') {
    negative = digits.front() == '-';
    digits.erase(digits.begin());
  }
  std::string num_part = digits;
  std::string den_part = "1";
  if (auto slash = digits.find('/'); slash != std::string::npos) {
    num_part = digits.substr(0, slash);
    den_part = digits.substr(slash + 1);
  }
  if (!all_digits(num_part) || !all_digits(den_part)) {
    throw validation_error("invalid rational literal '" + text +
                           "' (expected \"int\" or \"int/int\"; floats are not accepted)");
  }
  Integer num(num_part);
  Integer den(den_part);
  if (den == 0) {
    throw validation_error("invalid rational literal '" + text + "' (zero denominator)");
  }
  if (negative) num = -num;
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace schedgame
