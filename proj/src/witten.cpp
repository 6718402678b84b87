#include "sozeta/reducer.hpp"

namespace sozeta {

namespace {

BigRational sign_pow_int(unsigned long k) { return BigRational(k % 2 == 0 ? 1 : -1); }

}  // namespace

// Closed form of zeta_so(2m,2m,2m,2m) / pi^(8m) as a double sum over
// products of Bernoulli numbers.
BigRational witten_c(int m) {
  if (m < 1) throw std::domain_error("witten_c needs m >= 1");
  const unsigned long M = static_cast<unsigned long>(m);
  BigRational total;
  for (unsigned long nu = 0; nu <= M; ++nu) {
    BigRational bracket;
    for (unsigned long mu = 0; mu <= 2 * M - 1; ++mu) {
      BigRational w = pow2(static_cast<int>(2 * nu) - 1 - static_cast<int>(2 * M + mu)) - sign_pow_int(mu);
      bracket += w * BigRational(binomial(4 * M - mu - 2, 2 * M - 1) * binomial(2 * M - 2 * nu + mu, 2 * M - 2 * nu));
    }
    for (unsigned long mu = 0; mu <= 2 * M - 2 * nu; ++mu) {
      BigRational w = pow2(-static_cast<int>(2 * M + mu)) + sign_pow_int(mu);
      bracket += w * BigRational(binomial(4 * M - 2 * nu - mu - 1, 2 * M - 1) * binomial(2 * M - 1 + mu, 2 * M - 1));
    }
    total += bernoulli(2 * nu) * bernoulli(8 * M - 2 * nu) * BigRational(binomial(8 * M, 2 * nu)) * bracket;
  }
  return total * pow2(static_cast<int>(8 * M) - 3) / BigRational(factorial(8 * M));
}

}  // namespace sozeta
