// Exact integer and rational arithmetic used by the symbolic side.
#pragma once

#include <gmpxx.h>

#include <string>

namespace sozeta {

using BigInteger = mpz_class;

/// Always kept in lowest terms with a positive denominator.
using BigRational = mpq_class;

BigRational make_rational(long num, long den = 1);
BigRational make_rational(const BigInteger& num, const BigInteger& den);

/// C(n, k); zero when k > n.
BigInteger binomial(unsigned long n, unsigned long k);

BigInteger factorial(unsigned long n);

/// B_n with B_1 = -1/2. Memoized; safe to call from several threads.
BigRational bernoulli(unsigned n);

/// 2^e for any integer e.
BigRational pow2(int e);

/// "p/q", or "p" when q == 1.
std::string to_string(const BigRational& q);

}  // namespace sozeta
