#ifndef FUSIONKIT_ROOTS_HPP
#define FUSIONKIT_ROOTS_HPP

#include <optional>
#include <vector>

#include "fusionkit/highprec.hpp"
#include "fusionkit/polynomial.hpp"

namespace fusionkit {

// All complex roots of a squarefree polynomial, refined to 256-bit working
// precision (Aberth iteration seeded from the double-precision companion
// matrix).
std::vector<Complex256> complex_roots(const IntPolynomial& squarefree);

// The minimal integer factor of primitive squarefree p whose root set
// contains roots[target_index]: complex roots are clustered into candidate
// Galois orbits (closed under conjugation), coefficients rounded to
// integers, and the candidate verified by exact division. The result is
// irreducible over Q. Returns nullopt when the degree is beyond the
// enumeration cap or no candidate verifies.
std::optional<IntPolynomial> integer_factor_at(const IntPolynomial& p,
                                               const std::vector<Complex256>& roots,
                                               std::size_t target_index);

std::optional<IntPolynomial> integer_factor_near(const IntPolynomial& p, const Complex256& target);

}  // namespace fusionkit

#endif
