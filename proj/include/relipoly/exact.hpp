#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace relipoly {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact C(n, k); zero when k < 0 or k > n.
BigInt binomial(long n, long k);

/// Pascal triangle rows 0..n, for repeated lookups inside coefficient
/// conversions.
class BinomialTable {
 public:
  explicit BinomialTable(int n);

  /// C(n, k) with the convention C(n, k) = 0 outside 0 <= k <= n.
  const BigInt& operator()(int n, int k) const;
  int max_n() const noexcept { return max_n_; }

 private:
  int max_n_;
  std::vector<std::vector<BigInt>> rows_;
  BigInt zero_{0};
};

/// Parses "7/16", "-3", "0.4375" or "1e-3" into an exact rational.
Rational parse_rational(std::string_view text);

/// The exact rational value of a finite double.
Rational to_rational(double x);

double to_double(const Rational& q);
long double to_long_double(const BigInt& z);

std::string to_string(const BigInt& z);
std::string to_string(const Rational& q);

}  // namespace relipoly
