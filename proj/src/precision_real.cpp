#include "sozeta/precision_real.hpp"

#include <mpfr.h>

#include <algorithm>
#include <vector>

namespace sozeta {

std::recursive_mutex& mpfr_mutex() {
  static std::recursive_mutex m;
  return m;
}

Real EvalConfig::reported_err() const { return boost::multiprecision::pow(Real(10), -(digits + 2)); }

Real EvalConfig::internal_target() const { return reported_err() / 4; }

PrecisionScope::PrecisionScope(int digits10) : saved_(Real::default_precision()) {
  Real::default_precision(static_cast<unsigned>(digits10));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

Real to_real(const BigRational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real ulp_bound(const Real& x) {
  if (x == 0) return Real(0);
  const long prec = static_cast<long>(mpfr_get_prec(x.backend().data()));
  return abs(x) * boost::multiprecision::pow(Real(2), 1 - prec);
}

namespace {

// Results carry the larger operand precision, whatever the ambient default.
unsigned digits_of(const PrecisionReal& a) { return a.value.precision(); }

}  // namespace

PrecisionReal operator+(const PrecisionReal& a, const PrecisionReal& b) {
  std::lock_guard lock(mpfr_mutex());
  PrecisionScope scope(static_cast<int>(std::max(digits_of(a), digits_of(b))));
  Real v = a.value + b.value;
  return {v, a.err + b.err + ulp_bound(v)};
}

PrecisionReal operator-(const PrecisionReal& a, const PrecisionReal& b) {
  std::lock_guard lock(mpfr_mutex());
  PrecisionScope scope(static_cast<int>(std::max(digits_of(a), digits_of(b))));
  Real v = a.value - b.value;
  return {v, a.err + b.err + ulp_bound(v)};
}

PrecisionReal operator*(const PrecisionReal& a, const PrecisionReal& b) {
  std::lock_guard lock(mpfr_mutex());
  PrecisionScope scope(static_cast<int>(std::max(digits_of(a), digits_of(b))));
  Real v = a.value * b.value;
  return {v, abs(a.value) * b.err + abs(b.value) * a.err + a.err * b.err + ulp_bound(v)};
}

PrecisionReal operator*(const BigRational& c, const PrecisionReal& a) {
  std::lock_guard lock(mpfr_mutex());
  PrecisionScope scope(static_cast<int>(digits_of(a)));
  Real cr = to_real(c);
  Real v = cr * a.value;
  return {v, abs(cr) * a.err + 2 * ulp_bound(v)};
}

bool numeric_equal(const PrecisionReal& a, const PrecisionReal& b) {
  std::lock_guard lock(mpfr_mutex());
  PrecisionScope scope(static_cast<int>(std::max(digits_of(a), digits_of(b))));
  return abs(a.value - b.value) <= a.err + b.err;
}

bool numeric_equal(const PrecisionReal& a, const PrecisionReal& b, const Real& tol) {
  std::lock_guard lock(mpfr_mutex());
  PrecisionScope scope(static_cast<int>(std::max(digits_of(a), digits_of(b))));
  return abs(a.value - b.value) <= a.err + b.err + tol;
}

std::string to_fixed(const Real& x, int digits) {
  int n = mpfr_snprintf(nullptr, 0, "%.*RNf", digits, x.backend().data());
  std::vector<char> buf(static_cast<size_t>(n) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*RNf", digits, x.backend().data());
  return std::string(buf.data());
}

std::string to_sci(const Real& x, int digits) {
  // round up so the printed bound is never smaller than the true one
  int n = mpfr_snprintf(nullptr, 0, "%.*RUe", digits, x.backend().data());
  std::vector<char> buf(static_cast<size_t>(n) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*RUe", digits, x.backend().data());
  return std::string(buf.data());
}

}  // namespace sozeta
