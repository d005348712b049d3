#include "tropigeo/rational.hpp"

#include "tropigeo/error.hpp"

#include <cctype>

namespace tropigeo {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt digits_to_int(std::string_view s) {
  BigInt v = 0;
  for (char c : s) {
    v *= 10;
    v += c - '0';
  }
  return v;
}

BigInt pow10(int k) {
  BigInt v = 1;
  for (int i = 0; i < k; ++i) v *= 10;
  return v;
}

// Truncated division in cpp_int rounds toward zero; we need the floor.
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::string format_rational(const Rat& value) {
  const BigInt num = numerator(value);
  const BigInt den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rat parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty number");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = (s.front() == '-');
    s.remove_prefix(1);
    if (s.empty()) throw ParseError("sign without digits in '" + std::string(text) + "'");
  }

  Rat magnitude;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ParseError("malformed fraction '" + std::string(text) + "'");
    }
    BigInt d = digits_to_int(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    magnitude = Rat(digits_to_int(num), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view intpart = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (intpart.empty() && frac.empty()) throw ParseError("malformed decimal '" + std::string(text) + "'");
    if ((!intpart.empty() && !all_digits(intpart)) || (!frac.empty() && !all_digits(frac))) {
      throw ParseError("malformed decimal '" + std::string(text) + "'");
    }
    BigInt whole = intpart.empty() ? BigInt(0) : digits_to_int(intpart);
    BigInt scale = pow10(static_cast<int>(frac.size()));
    BigInt num = whole * scale + (frac.empty() ? BigInt(0) : digits_to_int(frac));
    magnitude = Rat(num, scale);
  } else {
    if (!all_digits(s)) throw ParseError("malformed number '" + std::string(text) + "'");
    magnitude = Rat(digits_to_int(s));
  }
  return negative ? Rat(-magnitude) : magnitude;
}

std::string decimal_string(const Rat& value, int max_fraction_digits) {
  const BigInt scale = pow10(max_fraction_digits);
  const Rat scaled = value * Rat(scale);
  // Round half away from zero.
  BigInt num = numerator(scaled);
  BigInt den = denominator(scaled);
  BigInt rounded = (num >= 0) ? floor_div(2 * num + den, 2 * den)
                              : -floor_div(2 * (-num) + den, 2 * den);
  bool negative = rounded < 0;
  if (negative) rounded = -rounded;
  BigInt whole = rounded / scale;
  BigInt frac = rounded % scale;

  std::string out = negative && (whole != 0 || frac != 0) ? "-" : "";
  out += whole.str();
  if (frac != 0) {
    std::string digits = frac.str();
    digits.insert(digits.begin(), max_fraction_digits - digits.size(), '0');
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    out += "." + digits;
  }
  return out;
}

}  // namespace tropigeo
