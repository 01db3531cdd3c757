#ifndef HOPFMOD_BIGFLOAT_HPP
#define HOPFMOD_BIGFLOAT_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "hopfmod/rational.hpp"

namespace hopfmod {

// Thin RAII wrapper around mpfr_t. Precision is fixed per value; binary
// operations inherit the precision of the left operand.
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }

    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }

    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }

    BigFloat& operator=(BigFloat o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }

    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from_rational(const Rational& q, mpfr_prec_t prec) {
        BigFloat f(prec);
        mpfr_set_q(f.v_, q.get_mpq_t(), MPFR_RNDN);
        return f;
    }

    static BigFloat from_long(long n, mpfr_prec_t prec) {
        BigFloat f(prec);
        mpfr_set_si(f.v_, n, MPFR_RNDN);
        return f;
    }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(a.precision());
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(a.precision());
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(a.precision());
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(a.precision());
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigFloat operator-() const {
        BigFloat r(precision());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    BigFloat& operator+=(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator-=(const BigFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator*=(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }

    BigFloat abs() const {
        BigFloat r(precision());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }

    bool less_than(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) < 0; }
    bool is_zero() const { return mpfr_zero_p(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    static BigFloat two_pow(long e, mpfr_prec_t prec) {
        BigFloat f(prec);
        mpfr_set_ui_2exp(f.v_, 1, e, MPFR_RNDN);
        return f;
    }

    // cos(2 pi k / m) and sin(2 pi k / m)
    static std::pair<BigFloat, BigFloat> cos_sin_2pi(long k, unsigned long m, mpfr_prec_t prec) {
        BigFloat angle(prec), c(prec), s(prec);
        mpfr_const_pi(angle.v_, MPFR_RNDN);
        mpfr_mul_si(angle.v_, angle.v_, 2 * k, MPFR_RNDN);
        mpfr_div_ui(angle.v_, angle.v_, m, MPFR_RNDN);
        mpfr_sin_cos(s.v_, c.v_, angle.v_, MPFR_RNDN);
        return {c, s};
    }

    // Nearest rational with denominator at most den_bound (continued fractions).
    Rational to_rational_bounded(const Integer& den_bound) const {
        mpq_class approx;
        mpfr_exp_t exp2;
        mpz_class mant;
        exp2 = mpfr_get_z_2exp(mant.get_mpz_t(), v_);
        if (mpfr_zero_p(v_)) return Rational(0);
        if (exp2 >= 0) {
            mpz_mul_2exp(mant.get_mpz_t(), mant.get_mpz_t(), static_cast<mp_bitcnt_t>(exp2));
            approx = mpq_class(mant);
        } else {
            mpz_class den(1);
            mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-exp2));
            approx = mpq_class(mant, den);
            approx.canonicalize();
        }
        // Continued-fraction convergents of the dyadic approximation.
        Integer p0(0), q0(1), p1(1), q1(0);
        Rational x = approx;
        bool negative = x < 0;
        if (negative) x = -x;
        while (true) {
            Integer a = x.get_num() / x.get_den();
            Integer p2 = a * p1 + p0, q2 = a * q1 + q0;
            if (q2 > den_bound) break;
            p0 = p1; q0 = q1; p1 = p2; q1 = q2;
            Rational frac = x - Rational(a);
            if (frac == 0) break;
            x = Rational(1) / frac;
        }
        if (q1 == 0) return Rational(0);
        Rational r(p1, q1);
        r.canonicalize();
        return negative ? Rational(-r) : r;
    }

  private:
    mpfr_t v_;
};

struct BigComplex {
    BigFloat re, im;

    explicit BigComplex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigFloat n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }

    BigFloat abs2() const { return re * re + im * im; }
};

}  // namespace hopfmod

#endif
