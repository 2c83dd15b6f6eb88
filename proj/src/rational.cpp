#include "ireach/rational.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "ireach/errors.hpp"

namespace ireach {

namespace {

using boost::multiprecision::cpp_int;

cpp_int parse_int(std::string_view digits, std::string_view whole)
{
  if (digits.empty()) {
    throw ValidationError("malformed rational '" + std::string(whole) + "'");
  }
  for (char ch : digits) {
    if (ch < '0' || ch > '9') {
      throw ValidationError("malformed rational '" + std::string(whole) + "'");
    }
  }
  // cpp_int reads a leading zero as an octal prefix
  auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return cpp_int(0);
  return cpp_int(std::string(digits.substr(first)));
}

Rat parse_decimal(std::string_view text)
{
  bool negative = false;
  std::string_view rest = text;
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = rest.find_first_of("eE"); e != std::string_view::npos) {
    std::string exp_text(rest.substr(e + 1));
    try {
      std::size_t used = 0;
      exponent = std::stol(exp_text, &used);
      if (used != exp_text.size()) {
        throw ValidationError("malformed number '" + std::string(text) + "'");
      }
    } catch (const std::logic_error &) {
      throw ValidationError("malformed number '" + std::string(text) + "'");
    }
    rest = rest.substr(0, e);
  }
  std::string digits;
  if (auto dot = rest.find('.'); dot != std::string_view::npos) {
    digits = std::string(rest.substr(0, dot)) + std::string(rest.substr(dot + 1));
    exponent -= static_cast<long>(rest.size() - dot - 1);
  } else {
    digits = std::string(rest);
  }
  Rat value(parse_int(digits, text));
  Rat ten(10);
  for (long i = 0; i < std::labs(exponent); ++i) {
    value = exponent > 0 ? value * ten : value / ten;
  }
  return negative ? Rat(-value) : value;
}

}  // namespace

Rat parse_rat(std::string_view text)
{
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) {
    throw ValidationError("empty rational");
  }
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    bool negative = false;
    if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
      negative = num.front() == '-';
      num.remove_prefix(1);
    }
    cpp_int n = parse_int(num, text);
    cpp_int d = parse_int(den, text);
    if (d == 0) {
      throw ValidationError("zero denominator in '" + std::string(text) + "'");
    }
    Rat r(n, d);
    return negative ? Rat(-r) : r;
  }
  return parse_decimal(text);
}

std::string format_rat(const Rat & r)
{
  return r.str();
}

Rat rat_from_double(double x)
{
  if (!std::isfinite(x)) {
    throw DomainError("cannot convert a non-finite value to a rational");
  }
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), x);
  if (ec != std::errc{}) {
    throw NumericError("double formatting failed");
  }
  return parse_decimal(std::string_view(buffer, static_cast<std::size_t>(end - buffer)));
}

}  // namespace ireach
