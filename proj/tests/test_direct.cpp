#include "support.hpp"
#include "sozeta/direct.hpp"
#include "sozeta/numeric.hpp"
#include "sozeta/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace sozeta;

TEST_CASE("quadrature bound covers the truth") {
  // int_0^1 t^2/(1+t) dt = ln 2 - 1/2
  UnitIntegrand f;
  f.power = 2;
  f.factors = {{1.0L, 1}};
  auto r = integrate_unit(f, 1e-18L);
  CHECK(std::fabs(r.value - (std::numbers::ln2_v<long double> - 0.5L)) <= r.err);
  CHECK(r.err <= 1e-18L);
  // int_0^1 (1+9t)^-2 dt = 1/10, pole close to the interval
  UnitIntegrand g;
  g.factors = {{9.0L, 2}};
  auto q = integrate_unit(g, 1e-16L);
  CHECK(std::fabs(q.value - 0.1L) <= q.err);
  // a polynomial is exact
  UnitIntegrand p;
  p.power = 5;
  CHECK(std::fabs(integrate_unit(p, 0).value - 1.0L / 6) < 1e-18L);
}

TEST_CASE("single rows and columns") {
  // sum_m 1/(m (m+n)) = H_n / n
  ZetaSoArgs a{1, 0, 1, 0};
  for (long n : {1L, 5L, 100L}) {
    long double h = 0;
    for (long k = 1; k <= n; ++k) h += 1.0L / k;
    auto row = direct_row(a, n, 1e-18L);
    CHECK(std::fabs(row.value - h / n) <= row.err + 1e-18L);
  }
  // sum_{n>=N} 1/n^2 with m = 1 and only s2 active
  ZetaSoArgs b{0, 2, 0, 0};
  auto col = direct_column(b, 1, 10, 1e-18L);
  long double expect = std::pow(std::numbers::pi_v<long double>, 2) / 6;
  for (int k = 1; k < 10; ++k) expect -= 1.0L / (k * k);
  CHECK(std::fabs(col.value - expect) < 1e-17L);
}

TEST_CASE("serial and parallel kernels agree") {
  for (ZetaSoArgs a : {ZetaSoArgs{1, 0, 0, 2}, ZetaSoArgs{2, 2, 2, 2}, ZetaSoArgs{0, 0, 3, 0}}) {
    auto rs = rows_serial(a, 1, 700, 1e-20L), rp = rows_parallel(a, 1, 700, 1e-20L);
    CHECK(std::fabs(rs.value - rp.value) <= rs.err + rp.err);
    auto cs = columns_serial(a, 700, 1e-20L), cp = columns_parallel(a, 700, 1e-20L);
    CHECK(std::fabs(cs.value - cp.value) <= cs.err + cp.err);
    DirectOptions serial;
    serial.parallel = false;
    auto x = eval_so_direct_detailed(a, 1e-10L, serial), y = eval_so_direct_detailed(a, 1e-10L);
    CHECK(x.cutoff == y.cutoff);
    CHECK(std::fabs(x.value - y.value) <= x.err + y.err);
  }
}

TEST_CASE("direct values against closed forms") {
  // sum 1/(m (m+n)^2) = zeta(2,1) = zeta(3)
  auto r = eval_so_direct_detailed({1, 0, 2, 0}, 1e-10L);
  long double z3 = ld(eval_depth1(pos(3)).value);
  CHECK(std::fabs(r.value - z3) <= r.err);
  CHECK(r.err <= 1e-10L);
  CHECK(r.quadrant_lo <= r.quadrant_hi);
  auto w = eval_so_direct({2, 2, 2, 2}, 1e-12);
  CHECK(std::fabs(dbl(w.value) - std::pow(std::numbers::pi, 8) / 302400) <= dbl(w.err) + 1e-15);
}

TEST_CASE("direct failures") {
  CHECK_THROWS_AS(eval_so_direct({2, 0, 0, 0}, 1e-8), Divergent);
  DirectOptions tiny;
  tiny.max_cutoff = 64;
  CHECK_THROWS_AS(eval_so_direct({1, 0, 0, 2}, 1e-12, tiny), TargetUnreachable);
}
