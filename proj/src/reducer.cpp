#include "sozeta/reducer.hpp"

#include <cassert>

namespace sozeta {

namespace {

EulerTerm z(SignedArg a) { return EulerTerm::make({a}); }
EulerTerm z(SignedArg a, SignedArg b) { return EulerTerm::make({a, b}); }

BigRational sign_pow(int e) { return BigRational(e % 2 == 0 ? 1 : -1); }

Combo reduce_so_unchecked(const ZetaSoArgs& a);

// s4 > 0, s2 > 0, s3 > 0. Partial fractions with x1 = n, x2 = m+n, x1+x2 = m+2n.
Combo case_split_n_mn(const ZetaSoArgs& a) {
  Combo out;
  for (const auto& t : partial_fraction2(a.s2, a.s3).terms) {
    ZetaSoArgs next = t.absorbed == 0 ? ZetaSoArgs{a.s1, 0, t.rest_exponent, a.s4 + t.sum_exponent}
                                      : ZetaSoArgs{a.s1, t.rest_exponent, 0, a.s4 + t.sum_exponent};
    out.add(reduce_so_unchecked(next), BigRational(t.coeff));
  }
  return out;
}

// s3 = 0, s2 > 0, s4 > 0. Only even n survive after n -> 2n; 1 + (-1)^n picks them.
Combo case_even_n(const ZetaSoArgs& a) {
  Combo inner = reduce_mt2(a.s1, a.s2, a.s4);
  if (a.s1 == 0) {
    inner.add(z(pos(a.s4), neg(a.s2)), 1);
  } else {
    // sum (-1)^n / (m^s1 n^s2 (m+n)^s4) with x1 = m, x2 = n
    for (const auto& t : partial_fraction2(a.s1, a.s2).terms) {
      int lead = a.s4 + t.sum_exponent;
      // k = m+n: (-1)^n = (-1)^k (-1)^m when the surviving index is m
      EulerTerm term = t.absorbed == 0 ? z(pos(lead), neg(t.rest_exponent)) : z(neg(lead), neg(t.rest_exponent));
      inner.add(term, BigRational(t.coeff));
    }
  }
  return combo_scale(pow2(a.s2 - 1), inner);
}

// s2 = 0, s1 > 0, s4 > 0. Partial fractions with x1 = m, x2 = m+2n, x1+x2 = 2(m+n).
Combo case_split_m_m2n(const ZetaSoArgs& a) {
  Combo out;
  for (const auto& t : partial_fraction2(a.s1, a.s4).terms) {
    BigRational c = BigRational(t.coeff) * pow2(-t.sum_exponent);
    if (t.absorbed == 0) {
      out.add(reduce_so_unchecked({0, 0, a.s3 + t.sum_exponent, t.rest_exponent}), c);
    } else {
      out.add(z(pos(a.s3 + t.sum_exponent), pos(t.rest_exponent)), c);
    }
  }
  return out;
}

// s1 = s2 = s3 = 0: sum over k = m+2n counts floor((k-1)/2) pairs.
Combo case_only_s4(int s) {
  Combo out;
  out.add(z(pos(s - 1)), make_rational(1, 2));
  out.add(z(pos(s)), -make_rational(1, 2) * (1 + pow2(-s)));
  return out;
}

// s1 = s2 = 0, r = s3 > 0, t = s4 > 0. Partial fractions with x1 = -(m+n),
// x2 = m+2n, x1+x2 = n. The two pieces with a bare (m+n) or (m+2n) in the
// denominator diverge separately and are recombined into the limit term.
Combo case_mn_m2n(int r, int t) {
  Combo out;
  BigRational limit_plus, limit_minus;
  const BigRational outer = sign_pow(r);
  for (const auto& p : partial_fraction2(r, t).terms) {
    BigRational c = outer * BigRational(p.coeff);
    if (p.absorbed == 0) {
      // n^-e (m+2n)^-rho
      if (p.rest_exponent == 1)
        limit_plus += c;
      else
        out.add(reduce_sum_n_m2n(p.sum_exponent, p.rest_exponent), c);
    } else {
      // n^-e (-(m+n))^-rho
      c *= sign_pow(p.rest_exponent);
      if (p.rest_exponent == 1)
        limit_minus += c;
      else
        out.add(z(pos(p.rest_exponent), pos(p.sum_exponent)), c);
    }
  }
  assert(limit_plus == -limit_minus);
  out.add(reduce_tail_limit(r + t - 1), limit_plus);
  return out;
}

Combo reduce_so_unchecked(const ZetaSoArgs& a) {
  assert(converges_so(a));
  if (a.s4 == 0) return reduce_mt2(a.s1, a.s2, a.s3);
  if (a.s2 > 0 && a.s3 > 0) return case_split_n_mn(a);
  if (a.s2 > 0) return case_even_n(a);
  if (a.s1 > 0) return case_split_m_m2n(a);
  if (a.s3 == 0) return case_only_s4(a.s4);
  return case_mn_m2n(a.s3, a.s4);
}

}  // namespace

std::string to_string(const ZetaSoArgs& a) {
  return "(" + std::to_string(a.s1) + "," + std::to_string(a.s2) + "," + std::to_string(a.s3) + "," +
         std::to_string(a.s4) + ")";
}

std::optional<std::string> violated_condition(const ZetaSoArgs& a) {
  if (a.s1 < 0 || a.s2 < 0 || a.s3 < 0 || a.s4 < 0) return "s1,s2,s3,s4>=0";
  if (!(a.s1 + a.s3 + a.s4 > 1)) return "s1+s3+s4>1";
  if (!(a.s2 + a.s3 + a.s4 > 1)) return "s2+s3+s4>1";
  if (!(a.weight() > 2)) return "s1+s2+s3+s4>2";
  return std::nullopt;
}

bool converges_so(const ZetaSoArgs& a) { return !violated_condition(a).has_value(); }

bool converges_mt(const MtArgs& a) {
  const size_t d = a.exponents.size();
  if (d == 0 || d > 30) return false;
  for (unsigned long mask = 1; mask < (1ul << d); ++mask) {
    long total = a.s, count = 0;
    for (size_t i = 0; i < d; ++i) {
      if (mask & (1ul << i)) {
        total += a.exponents[i];
        ++count;
      }
    }
    if (!(total > count)) return false;
  }
  return true;
}

BigRational PartialFractionExpansion::evaluate(const BigRational& x1, const BigRational& x2) const {
  BigRational sum = x1 + x2, total;
  for (const auto& t : terms) {
    const BigRational& rest = t.absorbed == 0 ? x2 : x1;
    BigRational den(1);
    for (int i = 0; i < t.sum_exponent; ++i) den *= sum;
    for (int i = 0; i < t.rest_exponent; ++i) den *= rest;
    total += BigRational(t.coeff) / den;
  }
  return total;
}

PartialFractionExpansion partial_fraction2(int n1, int n2) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("partial_fraction2 needs n1, n2 >= 1");
  PartialFractionExpansion pf{n1, n2, {}};
  // x1 absorbed: C(n1+a-1, a) / ((x1+x2)^(n1+a) x2^(n2-a))
  for (int a = 0; a < n2; ++a) pf.terms.push_back({0, a, n1 + a, n2 - a, binomial(n1 + a - 1, a)});
  for (int a = 0; a < n1; ++a) pf.terms.push_back({1, a, n2 + a, n1 - a, binomial(n2 + a - 1, a)});
  return pf;
}

Combo reduce_mt2(int s1, int s2, int s) {
  if (s1 < 0 || s2 < 0 || s < 0 || !converges_mt({{s1, s2}, s}))
    throw Divergent("Mordell-Tornheim (" + std::to_string(s1) + "," + std::to_string(s2) + ";" +
                    std::to_string(s) + ") diverges");
  Combo out;
  if (s1 == 0 && s2 == 0) {
    // sum_{k>=2} (k-1)/k^s
    out.add(z(pos(s - 1)), 1);
    out.add(z(pos(s)), -1);
  } else if (s == 0) {
    out = stuffle_product(pos(s1), pos(s2));
  } else if (s1 == 0) {
    out.add(z(pos(s), pos(s2)), 1);
  } else if (s2 == 0) {
    out.add(z(pos(s), pos(s1)), 1);
  } else {
    // x1 = m, x2 = n; whichever index survives is the inner one below k = m+n
    for (const auto& t : partial_fraction2(s1, s2).terms)
      out.add(z(pos(s + t.sum_exponent), pos(t.rest_exponent)), BigRational(t.coeff));
  }
  return out;
}

Combo reduce_so(const ZetaSoArgs& args) {
  if (auto v = violated_condition(args)) throw Divergent("zeta_so" + to_string(args) + " diverges: " + *v + " fails");
  return reduce_so_unchecked(args);
}

Combo reduce_sum_n_m2n(int u, int v) {
  if (u < 1 || v < 2) throw std::domain_error("reduce_sum_n_m2n needs u >= 1 and v >= 2");
  Combo out;
  out.add(z(pos(v), pos(u)), pow2(u - 1));
  out.add(z(pos(v), neg(u)), pow2(u - 1));
  return out;
}

Combo reduce_tail_limit(int s) {
  if (s < 2) throw std::domain_error("reduce_tail_limit needs s >= 2");
  Combo out;
  BigRational a = 1 - pow2(s - 1), b = -pow2(s - 1);
  out.add(z(pos(s + 1)), a);
  out.add(z(pos(s), pos(1)), a);
  out.add(z(neg(s), pos(1)), b);
  out.add(z(neg(s + 1)), b);
  return out;
}

}  // namespace sozeta
