#ifndef FUSIONKIT_RATIONAL_HPP
#define FUSIONKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace fusionkit {

using BigInt = mpz_class;
using BigRational = mpq_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZeroError : Error {
    DivisionByZeroError() : Error("division by zero") {}
};

// mpq_class does not canonicalize on construction; every entry point that
// builds a rational from raw parts must go through here.
inline BigRational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw DivisionByZeroError();
    BigRational q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline BigRational make_rational(long num, long den = 1) {
    return make_rational(BigInt(num), BigInt(den));
}

inline BigInt parse_bigint(const std::string& s) {
    if (s.empty()) throw Error("empty integer literal");
    BigInt v;
    if (v.set_str(s, 10) != 0) throw Error("bad integer literal: " + s);
    return v;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline bool is_integer(const BigRational& q) { return q.get_den() == 1; }

// Nearest integer to num/den, ties toward even (exact, no floating point).
inline BigInt round_to_nearest(const BigRational& q) {
    BigInt n = q.get_num(), d = q.get_den();
    BigInt quot, rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    BigInt twice = 2 * rem;
    if (twice > d || (twice == d && mpz_odd_p(quot.get_mpz_t()))) quot += 1;
    return quot;
}

inline std::optional<long> to_long(const BigInt& v) {
    if (!v.fits_slong_p()) return std::nullopt;
    return v.get_si();
}

}  // namespace fusionkit

#endif
