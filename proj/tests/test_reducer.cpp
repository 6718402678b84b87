#include "sozeta/reducer.hpp"
#include "sozeta/table.hpp"

#include <doctest.h>

#include <random>

using namespace sozeta;

namespace {

EulerTerm z(int s) { return EulerTerm::make({pos(s)}); }
EulerTerm z(SignedArg a, SignedArg b) { return EulerTerm::make({a, b}); }

BigRational power(const BigRational& x, int n) {
  BigRational r = 1;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

}  // namespace

TEST_CASE("convergence region") {
  CHECK(converges_so({1, 0, 0, 2}));
  CHECK_FALSE(converges_so({2, 0, 0, 0}));
  CHECK_FALSE(converges_so({0, 0, 2, 0}));
  CHECK(*violated_condition({2, 0, 0, 0}) == "s2+s3+s4>1");
  CHECK(*violated_condition({0, 2, 0, 0}) == "s1+s3+s4>1");
  CHECK(*violated_condition({0, 0, 2, 0}) == "s1+s2+s3+s4>2");
  CHECK_FALSE(violated_condition({0, 0, 0, 3}));
  CHECK(converges_mt({{2, 2}, 2}));
  CHECK_FALSE(converges_mt({{0, 0}, 2}));
  CHECK_THROWS_AS(reduce_so({2, 0, 0, 0}), Divergent);
  CHECK_THROWS_AS(reduce_so({1, 1, 0, 0}), Divergent);
}

TEST_CASE("partial fractions, worked example") {
  auto pf = partial_fraction2(2, 1);
  CHECK(pf.terms.size() == 3);
  CHECK(pf.evaluate(1, 2) == make_rational(1, 2));
  BigRational sum = 0;
  for (const auto& t : pf.terms) {
    BigRational x_rest = t.absorbed == 0 ? BigRational(2) : BigRational(1);
    sum += BigRational(t.coeff) / (power(BigRational(3), t.sum_exponent) * power(x_rest, t.rest_exponent));
  }
  CHECK(sum == make_rational(1, 18) + make_rational(1, 3) + make_rational(1, 9));
}

TEST_CASE("partial fractions on random rationals") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> exps(1, 6), num(-40, 40), den(1, 30);
  int trials = 0;
  while (trials < 100) {
    BigRational x1 = make_rational(num(rng), den(rng)), x2 = make_rational(num(rng), den(rng));
    if (x1 == 0 || x2 == 0 || x1 + x2 == 0) continue;
    int n1 = exps(rng), n2 = exps(rng);
    CAPTURE(n1);
    CAPTURE(n2);
    CHECK(partial_fraction2(n1, n2).evaluate(x1, x2) == 1 / (power(x1, n1) * power(x2, n2)));
    ++trials;
  }
  auto pf = partial_fraction2(3, 2);
  for (int k = 1; k <= 100; ++k) {
    BigRational x1 = make_rational(k, 7), x2 = make_rational(-3 * k - 1, 11);
    CHECK(pf.evaluate(x1, x2) == 1 / (power(x1, 3) * power(x2, 2)));
  }
}

TEST_CASE("Mordell-Tornheim pieces") {
  CHECK(reduce_mt2(0, 0, 4) == Combo(z(3)) + Combo(z(4), -1));
  Combo stuffle = reduce_mt2(2, 3, 0);
  CHECK(stuffle == stuffle_product(pos(2), pos(3)));
  CHECK(reduce_mt2(0, 2, 3) == Combo(z(pos(3), pos(2))));
  CHECK_THROWS_AS(reduce_mt2(0, 0, 2), Divergent);
}

TEST_CASE("exceptional tuples") {
  for (int s = 3; s <= 8; ++s) {
    CAPTURE(s);
    CHECK(reduce_so({0, 0, s, 0}) == Combo(z(s - 1)) + Combo(z(s), -1));
    Combo expect = Combo(z(s - 1), make_rational(1, 2)) + Combo(z(s), -make_rational(1, 2) * (1 + pow2(-s)));
    CHECK(reduce_so({0, 0, 0, s}) == expect);
  }
  CHECK(reduce_so({0, 0, 0, 3}) == Combo(z(2), make_rational(1, 2)) + Combo(z(3), make_rational(-9, 16)));
  CHECK(reduce_so({0, 0, 5, 0}) == Combo(z(4)) + Combo(z(5), -1));
}

TEST_CASE("helper sums") {
  CHECK(reduce_sum_n_m2n(1, 2) == Combo(z(pos(2), pos(1))) + Combo(z(pos(2), neg(1))));
  CHECK(reduce_sum_n_m2n(2, 3) == Combo(z(pos(3), pos(2)), 2) + Combo(z(pos(3), neg(2)), 2));
  Combo t2 = Combo(z(3), -1) + Combo(z(pos(2), pos(1)), -1) + Combo(z(neg(2), pos(1)), -2) +
             Combo(EulerTerm::make({neg(3)}), -2);
  CHECK(reduce_tail_limit(2) == t2);
  Combo t3 = Combo(z(4), -3) + Combo(z(pos(3), pos(1)), -3) + Combo(z(neg(3), pos(1)), -4) +
             Combo(EulerTerm::make({neg(4)}), -4);
  CHECK(reduce_tail_limit(3) == t3);
  CHECK_THROWS(reduce_sum_n_m2n(0, 2));
  CHECK_THROWS(reduce_tail_limit(1));
}

TEST_CASE("Witten coefficients") {
  CHECK(witten_c(1) == make_rational(BigInteger(2 * 3), 5 * factorial(9)));
  CHECK(witten_c(1) == make_rational(1, 302400));
  CHECK(witten_c(2) == make_rational(BigInteger(32 * 479), 5 * factorial(17)));
  CHECK(witten_c(3) == make_rational(BigInteger(128L * 5 * 43 * 19309), 9 * 7 * 13 * factorial(23)));
  CHECK(witten_c(4) == make_rational(BigInteger(256L * 13 * 241) * 64009163, 5 * 17 * factorial(31)));
}

TEST_CASE("weight and depth invariants up to weight 8") {
  for (int w = 3; w <= 8; ++w)
    for (const auto& a : convergent_tuples(w)) {
      CAPTURE(to_string(a));
      Combo c = reduce_so(a);
      CHECK(c.max_depth() <= 2);
      CHECK_FALSE(c.empty());
      if (!a.exceptional()) {
        CHECK(c.weights() == std::set<int>{w});
        continue;
      }
      int off = 0;
      for (const auto& [t, coeff] : c.terms())
        if (t.weight() != w) {
          ++off;
          CHECK(t.weight() == w - 1);
          CHECK(t.depth() == 1);
        }
      CHECK(off == 1);
    }
}

TEST_CASE("enumeration is complete and ordered") {
  for (int w = 3; w <= 7; ++w) {
    std::vector<ZetaSoArgs> brute;
    for (int s1 = 0; s1 <= w; ++s1)
      for (int s2 = 0; s2 <= w; ++s2)
        for (int s3 = 0; s3 <= w; ++s3)
          for (int s4 = 0; s4 <= w; ++s4) {
            ZetaSoArgs a{s1, s2, s3, s4};
            if (a.weight() == w && converges_so(a)) brute.push_back(a);
          }
    CHECK(convergent_tuples(w) == brute);
    for (const auto& a : convergent_tuples(w, true)) CHECK_FALSE(a.exceptional());
    CHECK(convergent_tuples(w).size() == convergent_tuples(w, true).size() + 2);
  }
  CHECK(convergent_tuples(3, true).size() == 10);
  CHECK(convergent_tuples(4, true).size() == 25);
  CHECK(convergent_tuples(5, true).size() == 46);
  CHECK(convergent_tuples(6, true).size() == 74);
}
