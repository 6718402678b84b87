#include "sozeta/tails.hpp"

#include <boost/multiprecision/mpfr.hpp>

namespace sozeta {

namespace {

// Magnitude factor of the k-th correction before the power of n:
//   sign +1: B_2k (p)_{2k-1} / (2k)!
//   sign -1: (2^2k - 1) B_2k (p)_{2k-1} / (2k)!
BigRational correction_coeff(int p, int sign, int k) {
  BigInteger rising(1);
  for (int i = 0; i < 2 * k - 1; ++i) rising *= p + i;
  BigRational c = bernoulli(static_cast<unsigned>(2 * k)) * BigRational(rising) /
                  BigRational(factorial(static_cast<unsigned long>(2 * k)));
  if (sign < 0) c *= pow2(2 * k) - 1;
  return c;
}

void check_domain(int p, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("tail sign must be +1 or -1");
  if (p < (sign > 0 ? 2 : 1)) throw std::domain_error("tail exponent too small for convergence");
}

// sum_{n >= N} n^-r <= N^-r + N^(1-r)/(r-1), r >= 2
Real power_tail_bound(long n_min, int r) {
  Real n(n_min);
  return pow(n, -r) + pow(n, 1 - r) / (r - 1);
}

}  // namespace

TailExpansion tail_expansion(int p, int sign, int corrections) {
  check_domain(p, sign);
  if (corrections < 1) throw std::invalid_argument("tail expansion needs at least one correction term");
  TailExpansion e;
  e.p = p;
  e.sign = sign;
  e.corrections = corrections;
  if (sign > 0) {
    e.coeffs.push_back(Real(1) / (p - 1));
    e.exponents.push_back(p - 1);
  }
  e.coeffs.push_back(Real(1) / 2);
  e.exponents.push_back(p);
  Real last;
  for (int k = 1; k <= corrections; ++k) {
    last = to_real(correction_coeff(p, sign, k));
    e.coeffs.push_back(last);
    e.exponents.push_back(p + 2 * k - 1);
  }
  // Euler-Maclaurin: |R| <= |last term|. Boole: |R| <= sup|E_{2k-1}| / |E_{2k-1}(0)| * |last term|,
  // and that ratio is 1 for odd Euler polynomials. Factor 2 as margin.
  e.remainder_coeff = 2 * abs(last);
  e.remainder_exponent = p + 2 * corrections - 1;
  return e;
}

TailExpansion tail_expansion_for(int p, int sign, long n_min, const Real& target, int extra_decay,
                                 int max_corrections) {
  check_domain(p, sign);
  Real best;
  int rising_streak = 0;
  for (int k = 1; k <= max_corrections; ++k) {
    Real c = 2 * abs(to_real(correction_coeff(p, sign, k)));
    int re = p + 2 * k - 1;
    Real bound = extra_decay == 0 ? c * pow(Real(n_min), -re) : c * power_tail_bound(n_min, re + extra_decay);
    if (bound <= target) return tail_expansion(p, sign, k);
    if (k > 1 && bound > best) {
      if (++rising_streak > 3) break;
    } else {
      rising_streak = 0;
      best = bound;
    }
  }
  throw TargetUnreachable("asymptotic tail for exponent " + std::to_string(p) + " cannot reach the target at n = " +
                          std::to_string(n_min));
}

PrecisionReal tail_value(int p, int sign, long n, const Real& target, int max_corrections) {
  TailExpansion e = tail_expansion_for(p, sign, n, target, 0, max_corrections);
  Real inv = Real(1) / Real(n);
  Real sum, abs_sum;
  for (size_t j = 0; j < e.coeffs.size(); ++j) {
    Real t = e.coeffs[j] * pow(inv, e.exponents[j]);
    sum += t;
    abs_sum += abs(t);
  }
  Real err = e.remainder_coeff * pow(inv, e.remainder_exponent);
  err += 4 * (e.coeffs.size() + 4) * ulp_bound(abs_sum);
  if (sign < 0 && n % 2 != 0) sum = -sum;
  return {sum, err};
}

}  // namespace sozeta
