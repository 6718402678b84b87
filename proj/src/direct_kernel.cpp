#include "sozeta/direct.hpp"
#include "sozeta/quadrature.hpp"

#include <array>
#include <cfloat>
#include <cmath>
#include <string>

namespace sozeta {
namespace {

constexpr int kMaxCorrections = 20;
constexpr int kSeriesLength = 2 * kMaxCorrections + 2;

long double ipow(long double x, int e) {
  long double r = 1;
  for (; e > 0; --e) r *= x;
  return r;
}

// B_{2k} / (2k) for k = 1..kMaxCorrections
const std::array<long double, kMaxCorrections + 1>& bernoulli_ratios() {
  static const auto table = [] {
    std::array<long double, kMaxCorrections + 1> t{};
    for (int k = 1; k <= kMaxCorrections; ++k) {
      BigRational b = bernoulli(static_cast<unsigned>(2 * k));
      t[k] = std::stold(b.get_num().get_str()) / std::stold(b.get_den().get_str()) / (2 * k);
    }
    return t;
  }();
  return table;
}

struct Factor {
  long double shift;
  int exponent;
};

// sum_{x >= start} prod (x + shift_i)^(-e_i) by Euler-Maclaurin.  Each factor is
// completely monotone, so the remainder is bounded by the first omitted term.
KernelSum em_tail(const std::array<Factor, 3>& factors, long double start, long double target) {
  std::array<long double, kSeriesLength> series{};
  series[0] = 1;
  int total = 0;
  UnitIntegrand integrand;
  for (const auto& [shift, e] : factors) {
    if (e == 0) continue;
    total += e;
    long double base = start + shift;
    std::array<long double, kSeriesLength> own{};
    own[0] = 1 / ipow(base, e);
    for (int j = 1; j < kSeriesLength; ++j) own[j] = -own[j - 1] * (e + j - 1) / (j * base);
    std::array<long double, kSeriesLength> prod{};
    for (int i = 0; i < kSeriesLength; ++i)
      for (int j = 0; i + j < kSeriesLength; ++j) prod[i + j] += series[i] * own[j];
    series = prod;
    integrand.factors.emplace_back(shift / start, e);
  }
  integrand.power = total - 2;
  long double scale = std::pow(start, 1 - total);

  const auto& br = bernoulli_ratios();
  long double corr = 0, omitted = 0;
  long double best = INFINITY;
  for (int k = 1; k <= kMaxCorrections; ++k) {
    long double term = br[k] * series[2 * k - 1];
    if (std::fabs(term) <= target / 2 || std::fabs(term) > best) {
      omitted = std::fabs(term);
      break;
    }
    best = std::fabs(term);
    corr += term;
    omitted = best;  // if the loop runs out, this term stays as the bound
  }

  QuadratureResult q = integrate_unit(integrand, target / (4 * scale));
  KernelSum r;
  r.value = scale * q.value + series[0] / 2 - corr;
  r.err = 2 * omitted + scale * q.err + 16 * LDBL_EPSILON * std::fabs(r.value);
  r.abs_sum = r.value;
  return r;
}

}  // namespace

KernelSum direct_row(const ZetaSoArgs& a, long n, long double target) {
  const long double nn = static_cast<long double>(n);
  const long limit = 2 * n + 32;
  const long double scale = 1 / ipow(nn, a.s2);
  long double sum = 0;
  for (long m = 1; m < limit; ++m) {
    const long double mm = static_cast<long double>(m);
    sum += 1 / (ipow(mm, a.s1) * ipow(mm + nn, a.s3) * ipow(mm + 2 * nn, a.s4));
  }
  KernelSum tail = em_tail({Factor{0, a.s1}, Factor{nn, a.s3}, Factor{2 * nn, a.s4}},
                           static_cast<long double>(limit), target / scale);
  KernelSum r;
  r.value = scale * (sum + tail.value);
  r.err = scale * (tail.err + (limit + 8) * LDBL_EPSILON * sum);
  r.abs_sum = r.value;
  return r;
}

KernelSum direct_column(const ZetaSoArgs& a, long m, long cutoff, long double target) {
  const long double mm = static_cast<long double>(m);
  const long double scale = 1 / (ipow(mm, a.s1) * ipow(2, a.s4));
  KernelSum tail = em_tail({Factor{0, a.s2}, Factor{mm, a.s3}, Factor{mm / 2, a.s4}},
                           static_cast<long double>(cutoff), target / scale);
  tail.value *= scale;
  tail.err *= scale;
  tail.abs_sum = tail.value;
  return tail;
}

KernelSum rows_serial(const ZetaSoArgs& a, long begin, long end, long double target) {
  KernelSum r;
  for (long n = begin; n < end; ++n) {
    KernelSum row = direct_row(a, n, target);
    r.value += row.value;
    r.err += row.err;
  }
  r.abs_sum = r.value;
  r.err += (end - begin + 1) * LDBL_EPSILON * r.value;
  return r;
}

KernelSum rows_parallel(const ZetaSoArgs& a, long begin, long end, long double target) {
  long double value = 0, err = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : value, err)
  for (long n = begin; n < end; ++n) {
    KernelSum row = direct_row(a, n, target);
    value += row.value;
    err += row.err;
  }
  KernelSum r{value, err, value};
  r.err += (end - begin + 1) * LDBL_EPSILON * r.value;
  return r;
}

KernelSum columns_serial(const ZetaSoArgs& a, long cutoff, long double target) {
  KernelSum r;
  for (long m = 1; m < cutoff; ++m) {
    KernelSum col = direct_column(a, m, cutoff, target);
    r.value += col.value;
    r.err += col.err;
  }
  r.abs_sum = r.value;
  r.err += (cutoff + 1) * LDBL_EPSILON * r.value;
  return r;
}

KernelSum columns_parallel(const ZetaSoArgs& a, long cutoff, long double target) {
  long double value = 0, err = 0;
#pragma omp parallel for schedule(static) reduction(+ : value, err)
  for (long m = 1; m < cutoff; ++m) {
    KernelSum col = direct_column(a, m, cutoff, target);
    value += col.value;
    err += col.err;
  }
  KernelSum r{value, err, value};
  r.err += (cutoff + 1) * LDBL_EPSILON * r.value;
  return r;
}

}  // namespace sozeta
