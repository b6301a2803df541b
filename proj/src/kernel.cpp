#include "vrmat/kernel.hpp"

#include <stdexcept>

namespace vrmat {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool is_integral(const Rational& q) {
    return q.get_den() == 1;
}

Integer to_integer(const Rational& q) {
    if (!is_integral(q)) {
        throw std::domain_error("rational " + q.get_str() + " is not an integer");
    }
    return q.get_num();
}

Integer ipow(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Integer binom(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) {
        return 0;
    }
    unsigned long kk = static_cast<unsigned long>(k);
    if (kk > n - kk) {
        kk = n - kk;  // symmetry keeps the loop short
    }
    Integer r = 1;
    for (unsigned long i = 1; i <= kk; ++i) {
        r *= static_cast<unsigned long>(n - kk + i);
        r /= static_cast<unsigned long>(i);  // exact: r is C(n-kk+i, i)
    }
    return r;
}

Integer catalan(unsigned long n) {
    Integer r = binom(2 * n, static_cast<long>(n));
    r /= static_cast<unsigned long>(n + 1);  // exact by the classical formula
    return r;
}

long mod_p(const Integer& x, long p) {
    if (p < 2) {
        throw std::domain_error("modulus must be at least 2");
    }
    return static_cast<long>(mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(p)));
}

long modp_inverse(long x, long p) {
    long a = x % p;
    if (a < 0) {
        a += p;
    }
    if (a == 0) {
        throw std::domain_error("zero residue is not invertible");
    }
    // Extended Euclid on (a, p).
    long old_r = a, r = p;
    long old_s = 1, s = 0;
    while (r != 0) {
        long q = old_r / r;
        long tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    long inv = old_s % p;
    if (inv < 0) {
        inv += p;
    }
    return inv;
}

bool is_prime(long p) {
    if (p < 2) {
        return false;
    }
    for (long d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

}  // namespace vrmat
