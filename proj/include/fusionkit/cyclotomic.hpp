#ifndef FUSIONKIT_CYCLOTOMIC_HPP
#define FUSIONKIT_CYCLOTOMIC_HPP

#include <complex>
#include <vector>

#include "fusionkit/highprec.hpp"
#include "fusionkit/polynomial.hpp"
#include "fusionkit/rational.hpp"

namespace fusionkit {

unsigned long euler_phi(unsigned long n);
// Units of Z/n in increasing order; {1} for n <= 2.
std::vector<unsigned long> units_mod(unsigned long n);
// Q(zeta_m) subset of Q(zeta_n)?
bool cyclotomic_subfield(unsigned long m, unsigned long n);

// Exact element of Q(zeta_n): coefficient vector of length phi(n) in the
// power basis {zeta_n^k : 0 <= k < phi(n)}, canonically reduced mod Phi_n.
// Elements carry their conductor; binary operations embed into the lcm.
class CyclotomicNumber {
  public:
    CyclotomicNumber() : conductor_(1), coeffs_{BigRational(0)} {}
    explicit CyclotomicNumber(BigRational q) : conductor_(1), coeffs_{std::move(q)} {}
    explicit CyclotomicNumber(long v) : CyclotomicNumber(BigRational(v)) {}

    static CyclotomicNumber zero(unsigned long n);
    static CyclotomicNumber one(unsigned long n);
    // zeta_n^k
    static CyclotomicNumber zeta(unsigned long n, long k = 1);
    // validates length phi(n)
    static CyclotomicNumber from_coeffs(unsigned long n, std::vector<BigRational> coeffs);

    unsigned long conductor() const { return conductor_; }
    const std::vector<BigRational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    BigRational rational_value() const;  // requires is_rational()
    bool is_real() const;

    // same value in Q(zeta_m); requires conductor() | m
    CyclotomicNumber embedded(unsigned long m) const;
    // same value at the smallest conductor that holds it
    CyclotomicNumber normalized() const;
    // sigma_m: zeta_n -> zeta_n^m; requires gcd(m, n) = 1
    CyclotomicNumber galois(unsigned long m) const;
    CyclotomicNumber conj() const;
    CyclotomicNumber inverse() const;

    CyclotomicNumber operator-() const;
    friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

    Complex256 numeric() const;
    std::complex<double> numeric_double() const;

  private:
    CyclotomicNumber(unsigned long n, std::vector<BigRational> reduced)
        : conductor_(n), coeffs_(std::move(reduced)) {}
    unsigned long conductor_;
    std::vector<BigRational> coeffs_;
};

// One conjugate per unit m of Z/n in increasing m, except that the identity
// (the element itself) comes first. Complex conjugation is the m = n-1 entry.
std::vector<CyclotomicNumber> galois_conjugates(const CyclotomicNumber& a);
// The orbit with duplicates removed (first occurrences kept).
std::vector<CyclotomicNumber> distinct_conjugates(const CyclotomicNumber& a);

// Monic minimal polynomial over Q: product of (x - v) over the distinct
// conjugates.
RationalPoly min_poly_over_q(const CyclotomicNumber& a);
bool is_algebraic_integer(const CyclotomicNumber& a);

// Exact positive square root of a positive integer, built from quadratic
// Gauss sums; the returned conductor is the minimal natural one.
CyclotomicNumber sqrt_of_integer(const BigInt& m);

enum class CycloOp { add, sub, mul, div };
CyclotomicNumber cyclo_arith(const CyclotomicNumber& a, const CyclotomicNumber& b, CycloOp op);

}  // namespace fusionkit

#endif
