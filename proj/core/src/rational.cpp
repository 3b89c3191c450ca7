#include "apsheat/rational.hpp"

#include <cctype>
#include <charconv>

#include "apsheat/errors.hpp"

namespace apsheat {

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

BigInt parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw DomainError("malformed number: '" + std::string(whole) + "'");
  BigInt value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw DomainError("malformed number: '" + std::string(whole) + "'");
    value = value * 10 + (c - '0');
  }
  return value;
}

Rational parse_decimal(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  int exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = text.substr(e + 1);
    auto [ptr, ec] = std::from_chars(exp_text.data() + (exp_text.starts_with('+') ? 1 : 0),
                                     exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc() || ptr != exp_text.data() + exp_text.size())
      throw DomainError("malformed exponent in '" + std::string(whole) + "'");
    text = text.substr(0, e);
  }
  std::string_view int_part = text;
  std::string_view frac_part;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty())
    throw DomainError("malformed number: '" + std::string(whole) + "'");
  BigInt mantissa = int_part.empty() ? BigInt(0) : parse_digits(int_part, whole);
  if (!frac_part.empty()) {
    mantissa = mantissa * boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac_part.size())) +
               parse_digits(frac_part, whole);
    exponent -= static_cast<int>(frac_part.size());
  }
  Rational q(mantissa);
  if (exponent > 0) q *= Rational(boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(exponent)));
  if (exponent < 0) q /= Rational(boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(-exponent)));
  return negative ? Rational(-q) : q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw DomainError("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(text.substr(0, slash), text);
    Rational den = parse_decimal(text.substr(slash + 1), text);
    if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    return num / den;
  }
  return parse_decimal(text, text);
}

}  // namespace apsheat
