#ifndef FUSIONKIT_ALGEBRAIC_HPP
#define FUSIONKIT_ALGEBRAIC_HPP

#include <optional>
#include <vector>

#include "fusionkit/cyclotomic.hpp"
#include "fusionkit/polynomial.hpp"
#include "fusionkit/rational.hpp"

namespace fusionkit {

using IntMatrix = std::vector<std::vector<BigInt>>;

struct NilpotentInputError : Error {
    NilpotentInputError() : Error("matrix is nilpotent: every eigenvalue is zero") {}
};

// det(xI - M), exact, by Faddeev-LeVerrier over rationals.
IntPolynomial char_poly(const IntMatrix& M);
RationalPoly char_poly_rational(const std::vector<std::vector<BigRational>>& M);

// A real algebraic number: the unique root of `annihilator` inside the open
// isolating interval (lo, hi). The squarefree part of the annihilator has
// nonzero sign at both endpoints and Sturm count one inside. Values are
// immutable; refinement returns a new value.
class AlgebraicReal {
  public:
    AlgebraicReal();  // the number 0
    static AlgebraicReal from_rational(const BigRational& q);
    static AlgebraicReal from_int(long v) { return from_rational(BigRational(v)); }
    // Verifies the isolation certificate; throws on failure.
    static AlgebraicReal isolate(IntPolynomial annihilator, const BigRational& lo, const BigRational& hi);

    const IntPolynomial& annihilator() const { return annihilator_; }
    const BigRational& lower() const { return lo_; }
    const BigRational& upper() const { return hi_; }
    const std::optional<CyclotomicNumber>& exact() const { return exact_; }
    const std::optional<IntPolynomial>& certified_min_poly() const { return min_poly_; }
    const std::optional<BigRational>& rational_value() const { return rational_; }

    bool is_rational() const { return rational_.has_value(); }
    bool is_rational_integer() const { return rational_ && fusionkit::is_integer(*rational_); }

    AlgebraicReal refined(const BigRational& width) const;
    // Attach the irreducible integer minimal polynomial (conjugate
    // clustering) and, in degree <= 2, an exact cyclotomic representative.
    AlgebraicReal certified() const;
    AlgebraicReal with_exact(CyclotomicNumber value) const;
    // Value scaled by a nonzero rational, exactly.
    AlgebraicReal scaled(const BigRational& c) const;

    double to_double() const;
    Real256 numeric() const;

    friend int compare(const AlgebraicReal& a, const AlgebraicReal& b);  // -1, 0, 1
    friend bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) == 0; }
    friend bool operator!=(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) != 0; }
    friend bool operator<(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) < 0; }
    friend bool operator<=(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) <= 0; }

    int compare_rational(const BigRational& q) const;

    friend AlgebraicReal perron_root(const IntMatrix& M);

  private:
    struct Raw {};
    explicit AlgebraicReal(Raw) {}
    void collapse_to_rational(const BigRational& q);

    IntPolynomial annihilator_;
    IntPolynomial squarefree_;
    BigRational lo_, hi_;
    std::optional<BigRational> rational_;
    std::optional<CyclotomicNumber> exact_;
    std::optional<IntPolynomial> min_poly_;
};

// Largest real eigenvalue of a nonnegative integer matrix, certified:
// isolating interval of width <= 1e-12, minimal polynomial attached when
// conjugate clustering succeeds, exact cyclotomic form in degree <= 2.
AlgebraicReal perron_root(const IntMatrix& M);

// Exact representative of v inside Q(zeta_n) for the first workable n in
// `conductors`. Requires a certified minimal polynomial; only degrees 1 and
// 2 lift (quadratic subfields via Gauss sums); absent otherwise.
std::optional<CyclotomicNumber> cyclotomic_lift(const AlgebraicReal& v,
                                                const std::vector<unsigned long>& conductors);

// Natural conductor that houses v when its minimal polynomial has degree
// <= 2 (1 for rationals, the quadratic-subfield conductor otherwise).
std::optional<unsigned long> natural_conductor(const AlgebraicReal& v);

// a / b as a certified algebraic number, via the resultant of the two
// minimal polynomials. Requires certified minimal polynomials and b != 0;
// nullopt when the combined degree is beyond the factoring cap.
std::optional<AlgebraicReal> ratio(const AlgebraicReal& a, const AlgebraicReal& b);

// Is the value a root of a monic integer polynomial? Decided from the
// certified minimal polynomial.
std::optional<bool> algebraic_integer_flag(const AlgebraicReal& v);

}  // namespace fusionkit

#endif
