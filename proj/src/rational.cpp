#include "eqlab/rational.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>

#include "eqlab/errors.hpp"

namespace eqlab {

namespace {

[[noreturn]] void malformed(std::string_view text) {
  throw InvalidParameter("malformed number '" + std::string(text) + "'");
}

Rational parse_decimal(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';

  BigInt digits = 0;
  long long exponent = 0;
  bool any_digit = false;
  for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
    digits = digits * 10 + (text[i] - '0');
    any_digit = true;
  }
  if (i < text.size() && text[i] == '.') {
    for (++i; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
      digits = digits * 10 + (text[i] - '0');
      --exponent;
      any_digit = true;
    }
  }
  if (!any_digit) malformed(text);
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    long long e = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), e);
    if (ec != std::errc() || ptr == text.data() + i) malformed(text);
    i = static_cast<std::size_t>(ptr - text.data());
    exponent += e;
  }
  if (i != text.size()) malformed(text);
  if (exponent > 4000 || exponent < -4000) malformed(text);

  const BigInt power = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(std::llabs(exponent)));
  Rational value = exponent >= 0 ? Rational(digits * power) : Rational(digits, power);
  return negative ? Rational(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  if (text.empty()) malformed(text);
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Rational num = parse_decimal(trim(text.substr(0, slash)));
    const Rational den = parse_decimal(trim(text.substr(slash + 1)));
    if (den == 0) throw InvalidParameter("zero denominator in '" + std::string(text) + "'");
    return num / den;
  }
  return parse_decimal(text);
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) throw InvalidParameter("cannot represent a non-finite value exactly");
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) throw InvalidParameter("cannot format value");
  return parse_decimal(std::string_view(buf.data(), static_cast<std::size_t>(ptr - buf.data())));
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace eqlab
