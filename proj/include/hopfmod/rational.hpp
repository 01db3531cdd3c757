#ifndef HOPFMOD_RATIONAL_HPP
#define HOPFMOD_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "hopfmod/util.hpp"

namespace hopfmod {

// Exact arithmetic over Q. mpq_class keeps the canonical form
// (positive denominator, coprime numerator/denominator) for us.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rational_from_strings(const std::string& num, const std::string& den) {
    Integer n(num), d(den);
    check(d != 0, "rational: zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline long to_long(const Integer& z) {
    check(z.fits_slong_p(), "integer out of machine range");
    return z.get_si();
}

inline long to_long(const Rational& q) {
    check(is_integer(q), "rational is not an integer");
    return to_long(Integer(q.get_num()));
}

// Exact integer square root; throws NonSquareDegree when z is not a perfect square.
inline Integer exact_isqrt(const Integer& z) {
    check(z >= 0, "exact_isqrt: negative input");
    Integer r = sqrt(z);
    if (r * r != z) throw NonSquareDegree("not a perfect square: " + z.get_str());
    return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline long mod_nonneg(long a, long m) {
    check(m > 0, "mod_nonneg: modulus must be positive");
    long r = a % m;
    return r < 0 ? r + m : r;
}

// Inverse of q modulo m; requires gcd(q, m) = 1.
inline long mod_inverse(long q, long m) {
    if (m == 1) return 0;
    Integer inv;
    Integer qq(mod_nonneg(q, m)), mm(m);
    if (mpz_invert(inv.get_mpz_t(), qq.get_mpz_t(), mm.get_mpz_t()) == 0)
        throw NotAUnit("no inverse of " + std::to_string(q) + " mod " + std::to_string(m));
    return to_long(inv);
}

inline Rational pow(const Rational& q, long e) {
    if (e < 0) {
        check(q != 0, "pow: zero to negative power");
        return pow(Rational(1) / q, -e);
    }
    Rational r(1), base = q;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline unsigned long euler_phi(unsigned long m) {
    check(m >= 1, "euler_phi: m >= 1 required");
    unsigned long result = m, n = m;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

}  // namespace hopfmod

#endif
