#ifndef FUSIONKIT_HIGHPREC_HPP
#define FUSIONKIT_HIGHPREC_HPP

#include <mpfr.h>

#include <string>

#include "fusionkit/rational.hpp"

namespace fusionkit {

// 256-bit real, the working precision for root refinement and for the
// independent numeric re-check of exact results.
class Real256 {
  public:
    static constexpr mpfr_prec_t kPrec = 256;

    Real256() { mpfr_init2(v_, kPrec); mpfr_set_zero(v_, 1); }
    Real256(const Real256& o) { mpfr_init2(v_, kPrec); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real256(Real256&& o) noexcept { mpfr_init2(v_, kPrec); mpfr_swap(v_, o.v_); }
    explicit Real256(long x) { mpfr_init2(v_, kPrec); mpfr_set_si(v_, x, MPFR_RNDN); }
    explicit Real256(double x) { mpfr_init2(v_, kPrec); mpfr_set_d(v_, x, MPFR_RNDN); }
    explicit Real256(const BigInt& x) { mpfr_init2(v_, kPrec); mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN); }
    explicit Real256(const BigRational& x) { mpfr_init2(v_, kPrec); mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN); }
    ~Real256() { mpfr_clear(v_); }

    Real256& operator=(const Real256& o) {
        if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real256& operator=(Real256&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_); }

    Real256 operator-() const { Real256 r; mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }
    Real256& operator+=(const Real256& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real256& operator-=(const Real256& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real256& operator*=(const Real256& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real256& operator/=(const Real256& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    friend Real256 operator+(Real256 a, const Real256& b) { return a += b; }
    friend Real256 operator-(Real256 a, const Real256& b) { return a -= b; }
    friend Real256 operator*(Real256 a, const Real256& b) { return a *= b; }
    friend Real256 operator/(Real256 a, const Real256& b) { return a /= b; }

    friend bool operator<(const Real256& a, const Real256& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Real256& a, const Real256& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Real256& a, const Real256& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Real256& a, const Real256& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const Real256& a, const Real256& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

    friend Real256 abs(const Real256& a) { Real256 r; mpfr_abs(r.v_, a.v_, MPFR_RNDN); return r; }
    friend Real256 sqrt(const Real256& a) { Real256 r; mpfr_sqrt(r.v_, a.v_, MPFR_RNDN); return r; }
    friend Real256 cos(const Real256& a) { Real256 r; mpfr_cos(r.v_, a.v_, MPFR_RNDN); return r; }
    friend Real256 sin(const Real256& a) { Real256 r; mpfr_sin(r.v_, a.v_, MPFR_RNDN); return r; }
    friend Real256 atan2(const Real256& y, const Real256& x) {
        Real256 r;
        mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
        return r;
    }

    static Real256 pi() { Real256 r; mpfr_const_pi(r.v_, MPFR_RNDN); return r; }
    // 2^-e as a comparison threshold
    static Real256 eps(long e) { Real256 r(1L); mpfr_mul_2si(r.v_, r.v_, -e, MPFR_RNDN); return r; }
    static Real256 pow10(long e) {
        Real256 r(10L);
        mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
        return r;
    }

    // Rational approximation with denominator 2^bits, for building exact
    // interval endpoints from a refined numeric value.
    BigRational to_rational(long bits = 192) const;
    BigInt nearest_int() const;

  private:
    mpfr_t v_;
};

struct Complex256 {
    Real256 re, im;

    Complex256() = default;
    Complex256(Real256 r, Real256 i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex256(long r) : re(r), im(0L) {}

    Complex256 operator-() const { return {-re, -im}; }
    friend Complex256 operator+(const Complex256& a, const Complex256& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex256 operator-(const Complex256& a, const Complex256& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex256 operator*(const Complex256& a, const Complex256& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex256 operator/(const Complex256& a, const Complex256& b) {
        Real256 d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }

    Real256 abs2() const { return re * re + im * im; }
    Real256 abs() const { return sqrt(abs2()); }
};

}  // namespace fusionkit

#endif
