#include "sozeta/quadrature.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace sozeta {

long double UnitIntegrand::operator()(long double t) const {
  long double v = scale;
  for (int i = 0; i < power; ++i) v *= t;
  for (const auto& [c, e] : factors) {
    long double base = 1 + c * t;
    for (int i = 0; i < e; ++i) v /= base;
  }
  return v;
}

const std::vector<std::pair<long double, long double>>& gauss_legendre_rule(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<std::pair<long double, long double>>> rules;
  std::lock_guard lock(mutex);
  auto [it, inserted] = rules.try_emplace(n);
  if (!inserted) return it->second;
  auto& rule = it->second;
  rule.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    long double x = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (n + 0.5L));
    long double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      long double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      long double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 4 * LDBL_EPSILON) break;
    }
    rule[static_cast<size_t>(i)] = {x, 2 / ((1 - x * x) * dp * dp)};
  }
  return rule;
}

QuadratureResult integrate_unit(const UnitIntegrand& f, long double target) {
  long double c_max = 0;
  for (const auto& [c, e] : f.factors)
    if (e > 0) c_max = std::max(c_max, c);

  // Ellipse with foci 0 and 1 whose leftmost point is halfway to the nearest pole.
  long double a = c_max > 0 ? std::min(0.5L + 0.5L / c_max, 8.0L) : 8.0L;
  long double rho = 2 * a + std::sqrt(4 * a * a - 1);
  long double bound_m = std::fabs(f.scale) * std::pow(0.5L + a, f.power);
  for (const auto& [c, e] : f.factors) bound_m /= std::pow(1 + c * (0.5L - a), e);

  QuadratureResult r;
  for (int n : {8, 16, 32, 64, 128}) {
    long double sum = 0, abs_sum = 0;
    for (const auto& [x, w] : gauss_legendre_rule(n)) {
      long double v = w * f((x + 1) / 2);
      sum += v;
      abs_sum += std::fabs(v);
    }
    r.value = sum / 2;
    r.nodes = n;
    long double truncation = (c_max == 0 && 2 * n > f.power) ? 0.0L
                                                              : 0.5L * (64.0L / 15.0L) * bound_m *
                                                                    std::pow(rho, -2.0L * n) / (rho * rho - 1);
    long double rounding = (n + 4) * LDBL_EPSILON * abs_sum / 2;
    r.err = truncation + rounding;
    if (r.err <= target || truncation <= rounding) break;
  }
  return r;
}

}  // namespace sozeta
