#include "relipoly/roots.hpp"

#include "relipoly/errors.hpp"

namespace relipoly {

namespace mp = boost::multiprecision;

int power_sign(const std::vector<BigInt>& coefficients, const Rational& x) {
  const BigInt p = mp::numerator(x);
  const BigInt q = mp::denominator(x);
  if (coefficients.empty()) return 0;
  BigInt acc = coefficients.back();
  BigInt q_pow = 1;
  for (std::size_t i = coefficients.size() - 1; i-- > 0;) {
    q_pow *= q;
    acc = acc * p + coefficients[i] * q_pow;
  }
  return acc.sign();
}

std::vector<SignChange> find_sign_changes(const ExactSign& sign, double tol, int samples) {
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  if (samples < 1) throw DomainError("samples must be positive");
  std::vector<SignChange> out;
  int last_sign = 0;
  int last_index = -1;
  for (int i = 0; i <= samples; ++i) {
    const Rational x(i, samples);
    const int s = sign(x);
    if (s == 0) continue;
    if (last_sign != 0 && s != last_sign) {
      Rational lo(last_index, samples), hi = x;
      if (i - last_index > 1) {
        // Exact zeros at grid points strictly between: report the midpoint
        // zero as the root.
        const Rational zero((last_index + i) / 2, samples);
        out.push_back({to_double(Rational(last_index + 1, samples)), to_double(Rational(i - 1, samples)),
                       to_double(zero)});
      } else {
        bool exact = false;
        while (to_double(hi - lo) > tol) {
          const Rational mid = (lo + hi) / 2;
          const int sm = sign(mid);
          if (sm == 0) {
            lo = hi = mid;
            exact = true;
            break;
          }
          (sm == last_sign ? lo : hi) = mid;
        }
        out.push_back({to_double(lo), to_double(hi), exact ? to_double(lo) : to_double((lo + hi) / 2)});
      }
    }
    last_sign = s;
    last_index = i;
  }
  return out;
}

}  // namespace relipoly
