// Symbolic reduction of so(5) Witten zeta values
//
//   zeta_so(s1,s2,s3,s4) = sum_{m,n>=1} 1 / (m^s1 n^s2 (m+n)^s3 (m+2n)^s4)
//
// to rational combinations of alternating Euler sums of depth <= 2.
//
// Dispatch (s4 = 0 is a Mordell-Tornheim value; otherwise):
//
//   s2 > 0, s3 > 0          split 1/(n^s2 (m+n)^s3) over m+2n, recurse
//   s3 = 0, s2 > 0          even/odd split of n          (all s4 > 0 paths)
//   s2 = 0, s1 > 0          split 1/(m^s1 (m+2n)^s4) over 2(m+n)
//   s1 = s2 = s3 = 0        direct count, exceptional: needs z(w-1)
//   s1 = s2 = 0, s3 > 0     split with x1 = -(m+n), x2 = m+2n and a limit term
//
// The first split only ever produces tuples that fall in the next three rows,
// so recursion depth is at most two.
#pragma once

#include "sozeta/euler_terms.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sozeta {

struct Divergent : std::domain_error {
  using std::domain_error::domain_error;
};

struct ZetaSoArgs {
  int s1 = 0, s2 = 0, s3 = 0, s4 = 0;

  int weight() const { return s1 + s2 + s3 + s4; }
  /// s1 = s2 = s3 = 0 or s1 = s2 = s4 = 0.
  bool exceptional() const { return s1 == 0 && s2 == 0 && (s3 == 0 || s4 == 0); }
  std::array<int, 4> as_array() const { return {s1, s2, s3, s4}; }

  friend auto operator<=>(const ZetaSoArgs&, const ZetaSoArgs&) = default;
};

std::string to_string(const ZetaSoArgs& a);

struct MtArgs {
  std::vector<int> exponents;
  int s = 0;
};

bool converges_so(const ZetaSoArgs& a);

/// Name of the first violated convergence inequality, e.g. "s2+s3+s4>1".
std::optional<std::string> violated_condition(const ZetaSoArgs& a);

/// Checks s + sum of any nonempty subset of exponents > subset size.
bool converges_mt(const MtArgs& a);

/// One summand of the two-variable partial fraction identity
///
///   1/(x1^n1 x2^n2) = sum  coeff / ((x1+x2)^sum_exponent * x_k^rest_exponent)
///
/// where the variable with index `absorbed` has been absorbed into the sum
/// and k is the other index. `shift` is the amount moved from x_k onto the sum.
struct PartialFractionTerm {
  int absorbed = 0;  // 0 or 1
  int shift = 0;
  int sum_exponent = 0;
  int rest_exponent = 0;
  BigInteger coeff;
};

struct PartialFractionExpansion {
  int n1 = 0, n2 = 0;
  std::vector<PartialFractionTerm> terms;

  /// Exact value of the right-hand side at (x1, x2).
  BigRational evaluate(const BigRational& x1, const BigRational& x2) const;
};

PartialFractionExpansion partial_fraction2(int n1, int n2);

/// sum_{m,n>=1} m^-s1 n^-s2 (m+n)^-s. Throws Divergent.
Combo reduce_mt2(int s1, int s2, int s);

/// Throws Divergent when converges_so(args) is false.
Combo reduce_so(const ZetaSoArgs& args);

/// sum_{m,n>=1} 1/(n^u (m+2n)^v) = 2^(u-1) (z(v,u) + z(v,bu)), u >= 1, v >= 2.
Combo reduce_sum_n_m2n(int u, int v);

/// lim_N sum_{m,n<=N} (1/(n^s (m+2n)) - 1/(n^s (m+n))), s >= 2.
Combo reduce_tail_limit(int s);

/// Rational c(m) with zeta_so(2m,2m,2m,2m) = c(m) pi^(8m).
BigRational witten_c(int m);

}  // namespace sozeta
