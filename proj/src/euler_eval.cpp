#include "sozeta/numeric.hpp"

#include "sozeta/constant_cache.hpp"

#include <boost/multiprecision/mpfr.hpp>
#include <mpfr.h>

#include <cmath>
#include <mutex>

namespace sozeta {

namespace {

void check_admissible(SignedArg a) {
  if (a.exponent < 1) throw std::invalid_argument("Euler sum exponents must be >= 1");
  if (a.exponent == 1 && a.sign == 1) throw DivergentTerm("leading argument (1, +1) diverges");
}

Real signed_power(long n, int sign) { return (sign < 0 && n % 2 != 0) ? Real(-1) : Real(1); }

PrecisionReal depth1_at_working_precision(SignedArg a, const EvalConfig& cfg) {
  const long cutoff = default_cutoff(cfg);
  const Real target = cfg.internal_target();
  PrecisionReal tail = tail_value(a.exponent, a.sign, cutoff, target / 2, cfg.max_correction_terms);
  Real sum, abs_sum;
  for (long m = 1; m < cutoff; ++m) {
    Real t = signed_power(m, a.sign) / pow(Real(m), a.exponent);
    sum += t;
    abs_sum += abs(t);
  }
  Real value = sum + tail.value;
  Real err = tail.err + 4 * (cutoff + 4) * ulp_bound(abs_sum + abs(tail.value));
  if (err > target) throw TargetUnreachable("depth-1 evaluation missed its error target");
  return {value, err};
}

PrecisionReal depth2_at_working_precision(SignedArg outer, SignedArg inner, const EvalConfig& cfg) {
  const int s1 = outer.exponent, x1 = outer.sign;
  const int s2 = inner.exponent, x2 = inner.sign;
  const int xx = x1 * x2;
  const long cutoff = default_cutoff(cfg);
  const Real target = cfg.internal_target();
  Real err;

  // n < cutoff: x2^n n^-s2 T(s1, n+1; x1), running T downward from T(s1, cutoff; x1).
  const Real log_bound = 1 + log(Real(cutoff));
  PrecisionReal t_start = tail_value(s1, x1, cutoff, target / (8 * log_bound), cfg.max_correction_terms);
  err += t_start.err * log_bound;
  Real running = t_start.value, direct, abs_direct;
  for (long n = cutoff - 1; n >= 1; --n) {
    Real t = signed_power(n, x2) * running / pow(Real(n), s2);
    direct += t;
    abs_direct += abs(t);
    running += signed_power(n, x1) / pow(Real(n), s1);
  }

  // n >= cutoff: T(s1, n+1; x1) = T(s1, n; x1) - x1^n n^-s1 and T(s1, n; x1) is expanded.
  TailExpansion inner_tail = tail_expansion_for(s1, x1, cutoff, target / 8, s2, cfg.max_correction_terms);
  err += inner_tail.remainder_coeff *
         (pow(Real(cutoff), -(inner_tail.remainder_exponent + s2)) +
          pow(Real(cutoff), 1 - (inner_tail.remainder_exponent + s2)) / (inner_tail.remainder_exponent + s2 - 1));
  Real tail_sum, abs_tail;
  const size_t count = inner_tail.coeffs.size();
  for (size_t j = 0; j < count; ++j) {
    const Real& c = inner_tail.coeffs[j];
    Real share = target / (8 * count * (1 + abs(c)));
    PrecisionReal piece = tail_value(s2 + inner_tail.exponents[j], xx, cutoff, share, cfg.max_correction_terms);
    tail_sum += c * piece.value;
    abs_tail += abs(c * piece.value);
    err += abs(c) * piece.err;
  }
  PrecisionReal diagonal = tail_value(s1 + s2, xx, cutoff, target / 8, cfg.max_correction_terms);
  err += diagonal.err;

  Real value = direct + tail_sum - diagonal.value;
  err += 4 * (cutoff + count + 8) * ulp_bound(abs_direct + abs_tail + abs(diagonal.value) + abs(running));
  if (err > target) throw TargetUnreachable("depth-2 evaluation missed its error target");
  return {value, err};
}

}  // namespace

long default_cutoff(const EvalConfig& cfg) {
  if (cfg.cutoff > 0) return cfg.cutoff;
  return cfg.working_digits() + 10;
}

PrecisionReal eval_depth1(SignedArg arg, const EvalConfig& cfg) {
  check_admissible(arg);
  std::lock_guard lock(mpfr_mutex());
  PrecisionScope scope(cfg.working_digits());
  PrecisionReal r = depth1_at_working_precision(arg, cfg);
  return {r.value, cfg.reported_err()};
}

PrecisionReal eval_term(const EulerTerm& term, const EvalConfig& cfg) {
  std::lock_guard lock(mpfr_mutex());
  PrecisionScope scope(cfg.working_digits());
  PrecisionReal r = term.depth() == 1 ? depth1_at_working_precision(term[0], cfg)
                                      : depth2_at_working_precision(term[0], term[1], cfg);
  return {r.value, cfg.reported_err()};
}

PrecisionReal eval_combo(const Combo& c, const EvalConfig& cfg, ConstantCache* cache) {
  std::lock_guard lock(mpfr_mutex());
  PrecisionScope scope(cfg.working_digits());
  PrecisionReal total{Real(0), Real(0)};
  for (const auto& [term, coeff] : c.terms()) {
    PrecisionReal v;
    if (auto hit = cache ? cache->lookup(term, cfg) : std::nullopt) {
      v = *hit;
    } else {
      v = eval_term(term, cfg);
      if (cache) cache->store(term, cfg, v);
    }
    total = total + coeff * v;
  }
  return total;
}

PrecisionReal pi_value(const EvalConfig& cfg) {
  std::lock_guard lock(mpfr_mutex());
  PrecisionScope scope(cfg.working_digits());
  Real p;
  mpfr_const_pi(p.backend().data(), MPFR_RNDN);
  return {p, ulp_bound(p)};
}

}  // namespace sozeta
