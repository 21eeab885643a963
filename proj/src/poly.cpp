#include "relipoly/poly.hpp"

#include "relipoly/errors.hpp"

#include <cmath>

namespace relipoly {

BigInt NklTable::at(int l, int k) const {
  auto it = entries.find({l, k});
  return it == entries.end() ? BigInt(0) : it->second;
}

int NklTable::max_l() const {
  int l = 0;
  for (const auto& [key, count] : entries) l = std::max(l, key.first);
  return l;
}

BigInt NklTable::row_sum(int l) const {
  BigInt sum = 0;
  for (const auto& [key, count] : entries)
    if (key.first == l) sum += count;
  return sum;
}

PkVector rk_to_pk(const RkVector& r) {
  PkVector p(r.edge_count);
  p.complete_through = r.complete_through;
  BinomialTable binom(r.edge_count);
  for (int k = 0; k <= r.edge_count; ++k) p[k] = Rational(r[k], binom(r.edge_count, k));
  return p;
}

RkVector pk_to_rk(const PkVector& p) {
  RkVector r(p.edge_count);
  r.complete_through = p.complete_through;
  BinomialTable binom(p.edge_count);
  for (int k = 0; k <= p.edge_count; ++k) {
    const Rational v = p[k] * binom(p.edge_count, k);
    if (boost::multiprecision::denominator(v) != 1)
      throw DomainError("P_" + std::to_string(k) + " does not correspond to an integer count");
    r[k] = boost::multiprecision::numerator(v);
  }
  return r;
}

NkVector rk_to_nk(const RkVector& r) {
  const int e = r.edge_count;
  NkVector n(e);
  n.complete_through = r.complete_through;
  BinomialTable binom(e);
  for (int l = 0; l <= e; ++l) {
    BigInt acc = 0;
    for (int k = 0; k <= l; ++k) {
      if (r[k] == 0) continue;
      const BigInt term = binom(e - k, l - k) * r[k];
      if ((l - k) % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    n[l] = acc;
  }
  return n;
}

RkVector nk_to_rk(const NkVector& n) {
  const int e = n.edge_count;
  RkVector r(e);
  r.complete_through = n.complete_through;
  BinomialTable binom(e);
  for (int k = 0; k <= e; ++k) {
    BigInt acc = 0;
    for (int kp = 0; kp <= k; ++kp) {
      if (n[kp] == 0) continue;
      acc += n[kp] * binom(e - kp, k - kp);
    }
    r[k] = acc;
  }
  return r;
}

namespace {

void check_point(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("x must lie in [0, 1]");
}

void check_point(const Rational& x) {
  if (x < 0 || x > 1) throw DomainError("x must lie in [0, 1]");
}

template <class V>
void check_complete(const V& v) {
  if (v.truncated())
    throw DomainError("cannot evaluate a truncated coefficient vector (complete only through k=" +
                      std::to_string(*v.complete_through) + ")");
}

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(long double v) {
    const long double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v))
      compensation_ += (sum_ - t) + v;
    else
      compensation_ += (v - t) + sum_;
    sum_ = t;
  }
  long double value() const { return sum_ + compensation_; }

 private:
  long double sum_ = 0.0L;
  long double compensation_ = 0.0L;
};

Rational rational_pow(const Rational& base, int exponent) {
  Rational out = 1;
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1) out *= b;
    b *= b;
    exponent >>= 1;
  }
  return out;
}

}  // namespace

double evaluate(const RkVector& r, double x) {
  check_point(x);
  check_complete(r);
  const long double xl = x, yl = 1.0L - xl;
  CompensatedSum sum;
  for (int k = 0; k <= r.edge_count; ++k) {
    if (r[k] == 0) continue;
    sum.add(to_long_double(r[k]) * std::pow(xl, k) * std::pow(yl, r.edge_count - k));
  }
  return static_cast<double>(sum.value());
}

double evaluate(const NkVector& n, double x) {
  check_point(x);
  check_complete(n);
  const long double xl = x;
  CompensatedSum sum;
  long double power = 1.0L;
  for (int k = 0; k <= n.edge_count; ++k) {
    if (n[k] != 0) sum.add(to_long_double(n[k]) * power);
    power *= xl;
  }
  return static_cast<double>(sum.value());
}

double evaluate(const PkVector& p, double x) {
  check_point(x);
  check_complete(p);
  const int e = p.edge_count;
  if (x == 0.0) return to_double(p[0]);
  if (x == 1.0) return to_double(p[e]);
  CompensatedSum sum;
  if (e <= 60) {
    const long double xl = x, yl = 1.0L - xl;
    long double binom = 1.0L;
    for (int k = 0; k <= e; ++k) {
      if (k > 0) binom = binom * (e - k + 1) / k;
      if (p[k] != 0) sum.add(binom * to_double(p[k]) * std::pow(xl, k) * std::pow(yl, e - k));
    }
  } else {
    const long double lx = std::log(static_cast<long double>(x));
    const long double ly = std::log1p(-static_cast<long double>(x));
    const long double lfe = std::lgamma(static_cast<long double>(e) + 1);
    for (int k = 0; k <= e; ++k) {
      if (p[k] == 0) continue;
      const long double lw = lfe - std::lgamma(static_cast<long double>(k) + 1) -
                             std::lgamma(static_cast<long double>(e - k) + 1) + k * lx + (e - k) * ly;
      sum.add(std::exp(lw) * to_double(p[k]));
    }
  }
  return static_cast<double>(sum.value());
}

Rational evaluate_exact(const RkVector& r, const Rational& x) {
  check_point(x);
  check_complete(r);
  const Rational y = 1 - x;
  Rational sum = 0;
  for (int k = 0; k <= r.edge_count; ++k) {
    if (r[k] == 0) continue;
    sum += r[k] * rational_pow(x, k) * rational_pow(y, r.edge_count - k);
  }
  return sum;
}

Rational evaluate_power(const std::vector<BigInt>& coefficients, const Rational& x) {
  // Horner
  Rational acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational evaluate_exact(const NkVector& n, const Rational& x) {
  check_point(x);
  check_complete(n);
  return evaluate_power(n.values, x);
}

Rational evaluate_exact(const PkVector& p, const Rational& x) {
  check_point(x);
  check_complete(p);
  const int e = p.edge_count;
  const Rational y = 1 - x;
  Rational sum = 0;
  for (int k = 0; k <= e; ++k) {
    if (p[k] == 0) continue;
    sum += p[k] * binomial(e, k) * rational_pow(x, k) * rational_pow(y, e - k);
  }
  return sum;
}

BigInt coefficient_sum(const NkVector& n) {
  BigInt s = 0;
  for (const BigInt& v : n.values) s += v;
  return s;
}

BigInt coefficient_abs_sum(const NkVector& n) {
  BigInt s = 0;
  for (const BigInt& v : n.values) s += v < 0 ? BigInt(-v) : v;
  return s;
}

}  // namespace relipoly
