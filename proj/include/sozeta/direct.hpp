// Direct evaluation of zeta_so from its defining double series, in long double.
//
// The lattice is cut at N into rows n < N (all m), columns m < N (n >= N) and
// the quadrant m, n >= N.  Rows and columns are single series with completely
// monotone summands and get an Euler-Maclaurin tail with a rigorous bound.  The
// quadrant is bracketed by convexity of the summand in each variable.
#pragma once

#include "sozeta/precision_real.hpp"
#include "sozeta/reducer.hpp"
#include "sozeta/tails.hpp"

namespace sozeta {

struct KernelSum {
  long double value = 0;
  long double err = 0;
  long double abs_sum = 0;
};

/// sum_{m>=1} f(m, n) with its error bound.
KernelSum direct_row(const ZetaSoArgs& a, long n, long double target);
/// sum_{n>=cutoff} f(m, n).
KernelSum direct_column(const ZetaSoArgs& a, long m, long cutoff, long double target);

/// Rows n in [begin, end).
KernelSum rows_serial(const ZetaSoArgs& a, long begin, long end, long double target);
KernelSum rows_parallel(const ZetaSoArgs& a, long begin, long end, long double target);
/// Columns m in [1, cutoff).
KernelSum columns_serial(const ZetaSoArgs& a, long cutoff, long double target);
KernelSum columns_parallel(const ZetaSoArgs& a, long cutoff, long double target);

struct DirectOptions {
  bool parallel = true;
  long initial_cutoff = 32;
  long max_cutoff = 1L << 14;
};

struct DirectResult {
  long double value = 0;
  long double err = 0;
  long cutoff = 0;
  long double rows = 0, columns = 0;
  long double quadrant_lo = 0, quadrant_hi = 0;
};

/// Throws Divergent outside the convergence region and TargetUnreachable when
/// max_cutoff does not reach target_err (long double cannot go much below
/// 1e-16 relative).
DirectResult eval_so_direct_detailed(const ZetaSoArgs& a, long double target_err,
                                     const DirectOptions& opt = {});

PrecisionReal eval_so_direct(const ZetaSoArgs& a, double target_err, const DirectOptions& opt = {});

}  // namespace sozeta
