// High-precision values carrying an absolute error bound.
#pragma once

#include "sozeta/exact.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <mutex>
#include <string>

namespace sozeta {

using Real = boost::multiprecision::mpfr_float;

/// The true quantity lies in [value - err, value + err].
struct PrecisionReal {
  Real value;
  Real err;
};

struct EvalConfig {
  int digits = 30;  // requested decimal accuracy D
  int guard = 12;   // extra working digits, >= 10
  /// Outer cutoff for the Euler-sum series; 0 picks one from digits.
  int cutoff = 0;
  /// Give up if an asymptotic tail needs more correction terms than this.
  int max_correction_terms = 400;

  int working_digits() const { return digits + guard; }
  /// Error reported for every term evaluated at this configuration.
  Real reported_err() const;
  /// What the series cutoffs actually aim for; leaves room for rounding.
  Real internal_target() const;
};

/// Sets the MPFR default precision for the current scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(int digits10);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

/// MPFR keeps its default precision in a global; hold this while using Real.
std::recursive_mutex& mpfr_mutex();

Real to_real(const BigRational& q);

/// One unit in the last place relative to |x| at the current precision.
Real ulp_bound(const Real& x);

PrecisionReal operator+(const PrecisionReal& a, const PrecisionReal& b);
PrecisionReal operator-(const PrecisionReal& a, const PrecisionReal& b);
PrecisionReal operator*(const PrecisionReal& a, const PrecisionReal& b);
PrecisionReal operator*(const BigRational& c, const PrecisionReal& a);

/// |a - b| <= a.err + b.err
bool numeric_equal(const PrecisionReal& a, const PrecisionReal& b);
/// |a - b| <= a.err + b.err + tol
bool numeric_equal(const PrecisionReal& a, const PrecisionReal& b, const Real& tol);

/// Fixed-point with `digits` fractional digits, round-half-even.
std::string to_fixed(const Real& x, int digits);
/// Exponent notation such as "1.0e-32".
std::string to_sci(const Real& x, int digits = 1);

}  // namespace sozeta
