#include "fusionkit/highprec.hpp"

namespace fusionkit {

BigRational Real256::to_rational(long bits) const {
    Real256 scaled = *this;
    mpfr_mul_2si(scaled.v_, scaled.v_, bits, MPFR_RNDN);
    BigInt num;
    mpfr_get_z(num.get_mpz_t(), scaled.v_, MPFR_RNDN);
    BigInt den(1);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
    return make_rational(std::move(num), std::move(den));
}

BigInt Real256::nearest_int() const {
    BigInt z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
    return z;
}

}  // namespace fusionkit
