#include "hampack/rational.hpp"

#include <cctype>
#include <cmath>

#include "hampack/errors.hpp"

namespace hampack {

namespace {

int sign_of(const Rational& x) { return x.sign(); }

BigInt parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw InputError("malformed rational '" + std::string(whole) + "'");
  BigInt v = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw InputError("malformed rational '" + std::string(whole) + "'");
    }
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_digits(s.substr(0, slash), text);
    BigInt den = parse_digits(s.substr(slash + 1), text);
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    value = Rational(num, den);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw InputError("malformed rational '" + std::string(text) + "'");
    }
    BigInt ip = int_part.empty() ? BigInt(0) : parse_digits(int_part, text);
    BigInt fp = frac_part.empty() ? BigInt(0) : parse_digits(frac_part, text);
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    value = Rational(ip * scale + fp, scale);
  } else {
    value = Rational(parse_digits(s, text));
  }
  return negative ? Rational(-value) : value;
}

std::int64_t floor_to_int(const Rational& x) {
  BigInt q = boost::multiprecision::numerator(x) / boost::multiprecision::denominator(x);
  // cpp_int division truncates toward zero
  if (x.sign() < 0 && Rational(q) != x) q -= 1;
  return q.convert_to<std::int64_t>();
}

std::int64_t ceil_to_int(const Rational& x) {
  std::int64_t f = floor_to_int(x);
  return Rational(f) == x ? f : f + 1;
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

std::string to_string(const Rational& x) {
  const BigInt& den = boost::multiprecision::denominator(x);
  if (den == 1) return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" + den.str();
}

int sign_with_root(const Rational& a, const Rational& b, const Rational& q) {
  if (q.sign() < 0) throw DomainError("negative radicand");
  if (q.sign() == 0 || b.sign() == 0) return sign_of(a);
  const int sa = sign_of(a);
  const int sb = sign_of(b);
  if (sa >= 0 && sb > 0) return 1;
  if (sa <= 0 && sb < 0) return -1;
  // opposite signs: the larger magnitude wins
  const int cmp = sign_of(Rational(a * a - b * b * q));
  return sa > 0 ? cmp : -cmp;
}

std::int64_t isqrt(std::int64_t x) {
  if (x < 0) throw DomainError("isqrt of negative value");
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(x)));
  while (s > 0 && s * s > x) --s;
  while ((s + 1) * (s + 1) <= x) ++s;
  return s;
}

}  // namespace hampack
