// Asymptotic expansions of the one-sided tails
//
//   T(p, n; sign) = sum_{m >= n} sign^m / m^p
//
// with explicit remainder bounds. For sign = +1 this is Euler-Maclaurin,
// for sign = -1 Boole's alternating analogue; both are valid for every
// n >= 1 because x^-p is completely monotone:
//
//   T(p, n; sign) = sign^n * sum_j coeffs[j] * n^-exponents[j] + R,
//   |R| <= remainder_coeff * n^-remainder_exponent.
#pragma once

#include "sozeta/precision_real.hpp"

#include <stdexcept>
#include <vector>

namespace sozeta {

struct TargetUnreachable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TailExpansion {
  int p = 0;
  int sign = 1;
  int corrections = 0;  // Bernoulli correction terms included
  std::vector<Real> coeffs;
  std::vector<int> exponents;
  Real remainder_coeff;
  int remainder_exponent = 0;
};

/// Needs p >= 2 for sign = +1, p >= 1 for sign = -1, corrections >= 1.
TailExpansion tail_expansion(int p, int sign, int corrections);

/// Smallest expansion whose remainder, summed against n^-extra_decay over
/// n >= n_min, stays below target. extra_decay = 0 bounds the tail at n_min
/// alone. Throws TargetUnreachable if the asymptotic series stalls first.
TailExpansion tail_expansion_for(int p, int sign, long n_min, const Real& target, int extra_decay,
                                 int max_corrections);

/// T(p, n; sign) with err <= target (plus rounding).
PrecisionReal tail_value(int p, int sign, long n, const Real& target, int max_corrections = 400);

}  // namespace sozeta
