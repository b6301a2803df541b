#pragma once

#include <gmpxx.h>

#include <string>

namespace vrmat {

// Exact arithmetic used everywhere in the library. Integers are unbounded;
// rationals are kept reduced with a positive denominator.
using Integer = mpz_class;
using Rational = mpq_class;

/// Reduced rational num/den with positive denominator. Throws
/// std::domain_error when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

bool is_integral(const Rational& q);

/// Numerator of an integral rational. Pre: is_integral(q).
Integer to_integer(const Rational& q);

/// base^exp over the integers (0^0 == 1).
Integer ipow(const Integer& base, unsigned long exp);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
/// Computed by the multiplicative running product with an exact division at
/// each step, so every intermediate value is an integer.
Integer binom(unsigned long n, long k);

/// n-th Catalan number: C(2n, n) / (n + 1).
Integer catalan(unsigned long n);

/// Canonical residue of x modulo p, in [0, p). Pre: p >= 2.
long mod_p(const Integer& x, long p);

/// Multiplicative inverse of x modulo the prime p. Throws std::domain_error
/// when x is divisible by p.
long modp_inverse(long x, long p);

/// Deterministic trial-division primality test for small moduli.
bool is_prime(long p);

}  // namespace vrmat
