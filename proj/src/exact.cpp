#include "relipoly/exact.hpp"

#include "relipoly/errors.hpp"

#include <cctype>
#include <cmath>

namespace relipoly {

namespace mp = boost::multiprecision;

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BinomialTable::BinomialTable(int n) : max_n_(n) {
  rows_.resize(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    auto& row = rows_[i];
    row.resize(static_cast<std::size_t>(i) + 1);
    row[0] = 1;
    row[i] = 1;
    for (int j = 1; j < i; ++j) row[j] = rows_[i - 1][j - 1] + rows_[i - 1][j];
  }
}

const BigInt& BinomialTable::operator()(int n, int k) const {
  if (n < 0 || k < 0 || k > n) return zero_;
  if (n > max_n_) throw DomainError("binomial table too small for n=" + std::to_string(n));
  return rows_[n][k];
}

namespace {

BigInt parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw ParseError("expected digits in number '" + std::string(whole) + "'");
  BigInt value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("invalid character in number '" + std::string(whole) + "'");
    value = value * 10 + (c - '0');
  }
  return value;
}

BigInt pow10(long e) {
  BigInt p = 1;
  for (long i = 0; i < e; ++i) p *= 10;
  return p;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty number");

  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_digits(text.substr(0, slash), whole);
    BigInt den = parse_digits(text.substr(slash + 1), whole);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(whole) + "'");
    value = Rational(num, den);
  } else {
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      std::string exp_text(text.substr(e + 1));
      try {
        std::size_t used = 0;
        exponent = std::stol(exp_text, &used);
        if (used != exp_text.size()) throw ParseError("bad exponent in '" + std::string(whole) + "'");
      } catch (const std::logic_error&) {
        throw ParseError("bad exponent in '" + std::string(whole) + "'");
      }
      text = text.substr(0, e);
    }
    std::string_view int_part = text, frac_part;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      int_part = text.substr(0, dot);
      frac_part = text.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) throw ParseError("expected digits in number '" + std::string(whole) + "'");
    BigInt num = int_part.empty() ? BigInt(0) : parse_digits(int_part, whole);
    if (!frac_part.empty()) num = num * pow10(static_cast<long>(frac_part.size())) + parse_digits(frac_part, whole);
    exponent -= static_cast<long>(frac_part.size());
    if (std::labs(exponent) > 4000) throw ParseError("exponent out of range in '" + std::string(whole) + "'");
    value = exponent >= 0 ? Rational(num * pow10(exponent)) : Rational(num, pow10(-exponent));
  }
  return negative ? Rational(-value) : value;
}

Rational to_rational(double x) {
  if (!std::isfinite(x)) throw DomainError("non-finite value has no rational form");
  int exp = 0;
  double mant = std::frexp(x, &exp);
  // 53 significant bits.
  auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  exp -= 53;
  BigInt num = scaled;
  if (exp >= 0) return Rational(num << exp);
  return Rational(num, BigInt(1) << -exp);
}

double to_double(const Rational& q) {
  BigInt num = mp::numerator(q);
  const BigInt den = mp::denominator(q);
  if (num == 0) return 0.0;
  const bool negative = num < 0;
  if (negative) num = -num;
  const long shift = 64 - (static_cast<long>(mp::msb(num)) - static_cast<long>(mp::msb(den)));
  BigInt quotient = shift >= 0 ? BigInt((num << shift) / den) : BigInt(num / (den << -shift));
  const long double mant = to_long_double(quotient);
  const double value = static_cast<double>(std::ldexp(mant, static_cast<int>(-shift)));
  return negative ? -value : value;
}

long double to_long_double(const BigInt& z) {
  if (z == 0) return 0.0L;
  BigInt a = z < 0 ? BigInt(-z) : z;
  const long bits = static_cast<long>(mp::msb(a)) + 1;
  long double value;
  if (bits <= 64) {
    value = static_cast<long double>(a.convert_to<unsigned long long>());
  } else {
    const long drop = bits - 64;
    value = std::ldexp(static_cast<long double>(BigInt(a >> drop).convert_to<unsigned long long>()),
                       static_cast<int>(drop));
  }
  return z < 0 ? -value : value;
}

std::string to_string(const BigInt& z) { return z.str(); }

std::string to_string(const Rational& q) {
  if (mp::denominator(q) == 1) return mp::numerator(q).str();
  return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

}  // namespace relipoly
