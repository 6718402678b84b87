#include "sozeta/direct.hpp"
#include "sozeta/quadrature.hpp"

#include <cfloat>
#include <cmath>

namespace sozeta {
namespace {

struct Quadrant {
  long double lo, hi, err;
};

// Convexity of f in each variable: the trapezoid rule undershoots the sum and
// the midpoint rule overshoots it.  f is homogeneous of degree -w, so both
// double integrals reduce to J = J1 + J2 below.
Quadrant quadrant_bracket(const ZetaSoArgs& a, long cutoff) {
  const int w = a.weight();
  UnitIntegrand j1;  // int_0^1 f(1, 1/t) t^(w-2) dt
  j1.scale = std::ldexp(1.0L, -a.s4);
  j1.power = a.s2 + a.s3 + a.s4 - 2;
  j1.factors = {{1.0L, a.s3}, {0.5L, a.s4}};
  UnitIntegrand j2;  // int_0^1 f(1/t, 1) t^(w-2) dt
  j2.power = a.s1 + a.s3 + a.s4 - 2;
  j2.factors = {{1.0L, a.s3}, {2.0L, a.s4}};
  QuadratureResult q1 = integrate_unit(j1, 1e-19L), q2 = integrate_unit(j2, 1e-19L);
  const long double j = q1.value + q2.value, jerr = q1.err + q2.err;

  const long double n = static_cast<long double>(cutoff);
  const long double at_n = std::pow(n, 2.0L - w);
  const long double corner = 1 / (std::pow(n, w) * std::pow(2.0L, a.s3) * std::pow(3.0L, a.s4));
  Quadrant r;
  const long double edge = at_n / n;  // int_N^inf f(x, N) dx = N^(1-w) J2, likewise J1
  r.lo = j * (at_n / (w - 2) + edge / 2) + corner / 4;
  r.hi = std::pow(n - 0.5L, 2.0L - w) * j / (w - 2);
  r.err = jerr * (at_n / (w - 2) + edge / 2 + std::pow(n - 0.5L, 2.0L - w) / (w - 2)) +
          8 * LDBL_EPSILON * r.hi;
  return r;
}

}  // namespace

DirectResult eval_so_direct_detailed(const ZetaSoArgs& a, long double target_err,
                                     const DirectOptions& opt) {
  if (auto bad = violated_condition(a))
    throw Divergent("zeta_so" + to_string(a) + " diverges: " + *bad + " fails");

  const long double piece_target = target_err / (16.0L * opt.max_cutoff);
  KernelSum rows;
  long done = 1;
  for (long cutoff = opt.initial_cutoff; cutoff <= opt.max_cutoff; cutoff *= 2) {
    KernelSum more = opt.parallel ? rows_parallel(a, done, cutoff, piece_target)
                                  : rows_serial(a, done, cutoff, piece_target);
    rows.value += more.value;
    rows.err += more.err;
    done = cutoff;
    KernelSum cols = opt.parallel ? columns_parallel(a, cutoff, piece_target)
                                  : columns_serial(a, cutoff, piece_target);
    Quadrant q = quadrant_bracket(a, cutoff);

    DirectResult r;
    r.cutoff = cutoff;
    r.rows = rows.value;
    r.columns = cols.value;
    r.quadrant_lo = q.lo;
    r.quadrant_hi = q.hi;
    r.value = rows.value + cols.value + (q.lo + q.hi) / 2;
    r.err = rows.err + cols.err + (q.hi - q.lo) / 2 + q.err + 4 * LDBL_EPSILON * r.value;
    if (r.err <= target_err) return r;
  }
  throw TargetUnreachable("direct sum of zeta_so" + to_string(a) + " cannot reach " +
                          std::to_string(static_cast<double>(target_err)) + " with cutoff " +
                          std::to_string(opt.max_cutoff));
}

PrecisionReal eval_so_direct(const ZetaSoArgs& a, double target_err, const DirectOptions& opt) {
  DirectResult r = eval_so_direct_detailed(a, target_err, opt);
  std::lock_guard lock(mpfr_mutex());
  PrecisionScope scope(30);
  return {Real(r.value), Real(r.err)};
}

}  // namespace sozeta
