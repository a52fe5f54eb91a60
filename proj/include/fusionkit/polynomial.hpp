#ifndef FUSIONKIT_POLYNOMIAL_HPP
#define FUSIONKIT_POLYNOMIAL_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "fusionkit/rational.hpp"

namespace fusionkit {

// Dense univariate polynomial over Z, coefficients lowest degree first.
// The zero polynomial is the empty coefficient vector (degree -1).
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }
    IntPolynomial(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        normalize();
    }

    static IntPolynomial x_power(std::size_t k) {
        std::vector<BigInt> c(k + 1, BigInt(0));
        c[k] = 1;
        return IntPolynomial(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<BigInt>& coeffs() const { return c_; }
    BigInt coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }
    const BigInt& leading() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

using RationalPoly = std::vector<BigRational>;  // lowest degree first, trailing nonzero

IntPolynomial add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial sub(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial mul(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial negate(const IntPolynomial& a);
IntPolynomial derivative(const IntPolynomial& a);
IntPolynomial scale(const IntPolynomial& a, const BigInt& k);

BigRational eval(const IntPolynomial& p, const BigRational& x);
BigInt eval(const IntPolynomial& p, const BigInt& x);
int sign_at(const IntPolynomial& p, const BigRational& x);

BigInt content(const IntPolynomial& p);
// Primitive part with positive leading coefficient; zero stays zero.
IntPolynomial primitive_part(const IntPolynomial& p);

// Quotient when f divides p exactly over Z; nullopt otherwise.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& p, const IntPolynomial& f);

// Primitive gcd with positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial squarefree_part(const IntPolynomial& p);

// All coefficients of p are at most this in absolute value / leading: every
// real root lies in (-bound, bound).
BigRational root_bound(const IntPolynomial& p);

// Number of distinct real roots of squarefree p in the half-open interval
// (lo, hi], by Sturm's theorem. p need not be squarefree; counting is on
// distinct roots.
class SturmSequence {
  public:
    explicit SturmSequence(const IntPolynomial& p);
    int count_roots(const BigRational& lo, const BigRational& hi) const;  // (lo, hi]

  private:
    int variations(const BigRational& x) const;
    std::vector<RationalPoly> seq_;
};

// n-th cyclotomic polynomial, exact (cached internally).
const IntPolynomial& cyclotomic_polynomial(unsigned long n);

// --- rational-coefficient helpers (used by cyclotomic reduction and the
// resultant path) ---
RationalPoly to_rational(const IntPolynomial& p);
// Clears denominators; returns primitive integer polynomial.
IntPolynomial clear_denominators(const RationalPoly& p);
RationalPoly rp_mul(const RationalPoly& a, const RationalPoly& b);
RationalPoly rp_sub(const RationalPoly& a, const RationalPoly& b);
// Division with remainder over Q (b nonzero).
std::pair<RationalPoly, RationalPoly> rp_divmod(const RationalPoly& a, const RationalPoly& b);
BigRational rp_eval(const RationalPoly& p, const BigRational& x);
// Resultant over Q via the Euclidean remainder sequence.
BigRational resultant(RationalPoly a, RationalPoly b);
// Inverse of a modulo a monic polynomial coprime to it (extended Euclid).
RationalPoly poly_inverse_mod(const RationalPoly& a, const RationalPoly& modulus);

std::string to_string(const IntPolynomial& p, const std::string& var = "x");

}  // namespace fusionkit

#endif
