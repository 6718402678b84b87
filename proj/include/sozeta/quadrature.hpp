// Gauss-Legendre quadrature on [0, 1] with an a-priori error bound for
// integrands of the form
//
//   scale * t^power * prod_i (1 + c_i t)^(-e_i),   c_i >= 0, e_i >= 0.
//
// Every pole sits at -1/c_i < 0, so the integrand is analytic inside a
// Bernstein ellipse around [0, 1] and the classical bound
// |I - I_n| <= (64/15) M rho^(-2n) / (rho^2 - 1) (halved for the unit
// interval) applies with M bounded on the ellipse directly.
#pragma once

#include <utility>
#include <vector>

namespace sozeta {

struct UnitIntegrand {
  long double scale = 1;
  int power = 0;
  std::vector<std::pair<long double, int>> factors;  // (c_i, e_i)

  long double operator()(long double t) const;
};

struct QuadratureResult {
  long double value = 0;
  long double err = 0;
  int nodes = 0;
};

/// Nodes and weights of the n-point rule on [-1, 1].
const std::vector<std::pair<long double, long double>>& gauss_legendre_rule(int n);

/// Uses the smallest rule among 8, 16, 32, 64, 128 points meeting target;
/// otherwise the 128-point result with its (larger) bound.
QuadratureResult integrate_unit(const UnitIntegrand& f, long double target);

}  // namespace sozeta
