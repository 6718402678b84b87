#include "sozeta/exact.hpp"

#include <mutex>
#include <vector>

namespace sozeta {

BigRational make_rational(long num, long den) {
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigRational make_rational(const BigInteger& num, const BigInteger& den) {
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigInteger binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInteger r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInteger factorial(unsigned long n) {
  BigInteger r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

namespace {

std::mutex bernoulli_mutex;
std::vector<BigRational> bernoulli_table{BigRational(1)};

}  // namespace

BigRational bernoulli(unsigned n) {
  std::lock_guard lock(bernoulli_mutex);
  // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1
  for (unsigned m = bernoulli_table.size(); m <= n; ++m) {
    if (m >= 3 && m % 2 == 1) {
      bernoulli_table.emplace_back(0);
      continue;
    }
    BigRational acc;
    for (unsigned k = 0; k < m; ++k) {
      if (bernoulli_table[k] == 0) continue;
      acc += BigRational(binomial(m + 1, k)) * bernoulli_table[k];
    }
    bernoulli_table.push_back(-acc / BigRational(m + 1));
  }
  return bernoulli_table[n];
}

BigRational pow2(int e) {
  BigInteger p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return BigRational(p);
  return make_rational(BigInteger(1), p);
}

std::string to_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace sozeta
