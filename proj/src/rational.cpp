#include "ospxp/rational.hpp"

#include <cctype>

namespace ospxp {

Rational pochhammer(const Rational& x, long k) {
  Rational acc = 1;
  for (long i = 0; i < k; ++i) acc *= x + i;
  return acc;
}

std::optional<Rational> parse_rational(const std::string& s) {
  using Int = boost::multiprecision::cpp_int;
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_int(s)) return std::nullopt;
    return Rational(Int(s));
  }
  const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || Int(den) == 0) return std::nullopt;
  return Rational(Int(num), Int(den));
}

std::string format_rational(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace ospxp
