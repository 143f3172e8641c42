#include "cogfam/rational.hpp"

#include <stdexcept>

namespace cogfam {

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("not a rational: '" + text + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("not a rational: '" + text + "'");
    }
    return BigInt(s);
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

std::string to_decimal(const Rational& value, int digits) {
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const bool negative = value < 0;
  const Rational scaled = abs(value) * scale + Rational(1, 2);
  const BigInt rounded = boost::multiprecision::numerator(scaled) / boost::multiprecision::denominator(scaled);

  std::string whole = BigInt(rounded / scale).str();
  std::string frac = BigInt(rounded % scale).str();
  if (digits > 0) frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');

  std::string out = (negative && rounded != 0) ? "-" : "";
  out += whole;
  if (digits > 0) out += "." + frac;
  return out;
}

}  // namespace cogfam
