#include "fusionkit/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace fusionkit {

IntPolynomial add(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs().size(), b.coeffs().size()), BigInt(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return IntPolynomial(std::move(c));
}

IntPolynomial sub(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs().size(), b.coeffs().size()), BigInt(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return IntPolynomial(std::move(c));
}

IntPolynomial mul(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<BigInt> c(a.coeffs().size() + b.coeffs().size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial negate(const IntPolynomial& a) {
    std::vector<BigInt> c(a.coeffs());
    for (auto& v : c) v = -v;
    return IntPolynomial(std::move(c));
}

IntPolynomial derivative(const IntPolynomial& a) {
    if (a.degree() <= 0) return IntPolynomial();
    std::vector<BigInt> c(a.coeffs().size() - 1);
    for (std::size_t i = 1; i < a.coeffs().size(); ++i) c[i - 1] = a.coeffs()[i] * BigInt(static_cast<long>(i));
    return IntPolynomial(std::move(c));
}

IntPolynomial scale(const IntPolynomial& a, const BigInt& k) {
    if (k == 0) return IntPolynomial();
    std::vector<BigInt> c(a.coeffs());
    for (auto& v : c) v *= k;
    return IntPolynomial(std::move(c));
}

BigRational eval(const IntPolynomial& p, const BigRational& x) {
    BigRational acc(0);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + BigRational(*it);
    return acc;
}

BigInt eval(const IntPolynomial& p, const BigInt& x) {
    BigInt acc(0);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
    return acc;
}

int sign_at(const IntPolynomial& p, const BigRational& x) { return sgn(eval(p, x)); }

BigInt content(const IntPolynomial& p) {
    BigInt g(0);
    for (const auto& c : p.coeffs()) {
        BigInt a = abs(c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    BigInt g = content(p);
    if (sgn(p.leading()) < 0) g = -g;
    std::vector<BigInt> c(p.coeffs());
    for (auto& v : c) v /= g;
    return IntPolynomial(std::move(c));
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial& p, const IntPolynomial& f) {
    if (f.is_zero()) return std::nullopt;
    if (p.is_zero()) return IntPolynomial();
    if (p.degree() < f.degree()) return std::nullopt;
    std::vector<BigInt> rem(p.coeffs());
    std::vector<BigInt> quot(p.degree() - f.degree() + 1, BigInt(0));
    const BigInt& lc = f.leading();
    for (int k = p.degree() - f.degree(); k >= 0; --k) {
        BigInt& top = rem[k + f.degree()];
        if (top == 0) continue;
        BigInt q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
        if (r != 0) return std::nullopt;
        quot[k] = q;
        for (int i = 0; i <= f.degree(); ++i) rem[k + i] -= q * f.coeffs()[i];
    }
    for (const auto& v : rem)
        if (v != 0) return std::nullopt;
    return IntPolynomial(std::move(quot));
}

RationalPoly to_rational(const IntPolynomial& p) {
    RationalPoly r;
    r.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) r.emplace_back(c);
    return r;
}

IntPolynomial clear_denominators(const RationalPoly& p) {
    BigInt l(1);
    for (const auto& q : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<BigInt> c;
    c.reserve(p.size());
    for (const auto& q : p) c.push_back(q.get_num() * (l / q.get_den()));
    return primitive_part(IntPolynomial(std::move(c)));
}

static void rp_normalize(RationalPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RationalPoly rp_mul(const RationalPoly& a, const RationalPoly& b) {
    if (a.empty() || b.empty()) return {};
    RationalPoly c(a.size() + b.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    rp_normalize(c);
    return c;
}

RationalPoly rp_sub(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly c(std::max(a.size(), b.size()), BigRational(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.size()) c[i] += a[i];
        if (i < b.size()) c[i] -= b[i];
    }
    rp_normalize(c);
    return c;
}

std::pair<RationalPoly, RationalPoly> rp_divmod(const RationalPoly& a, const RationalPoly& b) {
    if (b.empty()) throw DivisionByZeroError();
    RationalPoly rem = a, quot;
    rp_normalize(rem);
    if (rem.size() < b.size()) return {quot, rem};
    quot.assign(rem.size() - b.size() + 1, BigRational(0));
    const BigRational& lc = b.back();
    for (int k = static_cast<int>(rem.size()) - static_cast<int>(b.size()); k >= 0; --k) {
        BigRational q = rem[k + b.size() - 1] / lc;
        if (q == 0) continue;
        quot[k] = q;
        for (std::size_t i = 0; i < b.size(); ++i) rem[k + i] -= q * b[i];
    }
    rp_normalize(rem);
    rp_normalize(quot);
    return {quot, rem};
}

BigRational rp_eval(const RationalPoly& p, const BigRational& x) {
    BigRational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BigRational resultant(RationalPoly a, RationalPoly b) {
    rp_normalize(a);
    rp_normalize(b);
    if (a.empty() || b.empty()) return BigRational(0);
    BigRational acc(1);
    // res(a,b) = (-1)^{deg a * deg b} lc(b)^{deg a - deg r} res(b, r), r = a mod b
    while (true) {
        int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
        if (db == 0) {
            BigRational lc = b.back(), pw(1);
            for (int i = 0; i < da; ++i) pw *= lc;
            return acc * pw;
        }
        RationalPoly r = rp_divmod(a, b).second;
        if (r.empty()) return BigRational(0);
        int dr = static_cast<int>(r.size()) - 1;
        if ((da % 2) && (db % 2)) acc = -acc;
        BigRational lc = b.back(), pw(1);
        for (int i = 0; i < da - dr; ++i) pw *= lc;
        acc *= pw;
        a = std::move(b);
        b = std::move(r);
    }
}

RationalPoly poly_inverse_mod(const RationalPoly& a, const RationalPoly& modulus) {
    RationalPoly r0 = modulus, r1 = a;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    if (r1.empty()) throw DivisionByZeroError();
    RationalPoly u0, u1{BigRational(1)};
    while (true) {
        auto [q, r2] = rp_divmod(r0, r1);
        if (r2.empty()) break;
        RationalPoly u2 = rp_sub(u0, rp_mul(q, u1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r1.size() != 1) throw Error("poly_inverse_mod: arguments are not coprime");
    RationalPoly inv = rp_divmod(u1, modulus).second;
    for (auto& c : inv) c /= r1[0];
    return inv;
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    RationalPoly x = to_rational(a), y = to_rational(b);
    while (!y.empty()) {
        RationalPoly r = rp_divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return clear_denominators(x);
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
    if (p.degree() <= 1) return primitive_part(p);
    IntPolynomial g = gcd(p, derivative(p));
    if (g.degree() == 0) return primitive_part(p);
    auto q = divide_exact(primitive_part(p), g);
    if (!q) {
        // gcd is primitive, so it divides the primitive part exactly
        throw Error("squarefree_part: inexact division");
    }
    return primitive_part(*q);
}

BigRational root_bound(const IntPolynomial& p) {
    if (p.degree() < 1) return BigRational(1);
    BigRational m(0);
    for (int i = 0; i < p.degree(); ++i) {
        BigRational v = abs(BigRational(p.coeffs()[i], p.leading()));
        if (v > m) m = v;
    }
    return m + 1;
}

SturmSequence::SturmSequence(const IntPolynomial& p) {
    IntPolynomial sf = squarefree_part(p);
    seq_.push_back(to_rational(sf));
    if (sf.degree() >= 1) {
        seq_.push_back(to_rational(derivative(sf)));
        while (seq_.back().size() > 1) {
            RationalPoly r = rp_divmod(seq_[seq_.size() - 2], seq_.back()).second;
            if (r.empty()) break;
            for (auto& c : r) c = -c;
            seq_.push_back(std::move(r));
        }
    }
}

int SturmSequence::variations(const BigRational& x) const {
    int count = 0, prev = 0;
    for (const auto& p : seq_) {
        int s = sgn(rp_eval(p, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int SturmSequence::count_roots(const BigRational& lo, const BigRational& hi) const {
    if (lo >= hi) return 0;
    return variations(lo) - variations(hi);
}

const IntPolynomial& cyclotomic_polynomial(unsigned long n) {
    static std::map<unsigned long, IntPolynomial> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // x^n - 1 = prod_{d | n} Phi_d
    std::vector<BigInt> xn(n + 1, BigInt(0));
    xn[0] = -1;
    xn[n] = 1;
    IntPolynomial acc(std::move(xn));
    for (unsigned long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto q = divide_exact(acc, cyclotomic_polynomial(d));
        if (!q) throw Error("cyclotomic polynomial recursion failed");
        acc = std::move(*q);
    }
    return cache.emplace(n, std::move(acc)).first->second;
}

std::string to_string(const IntPolynomial& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const BigInt& c = p.coeffs()[k];
        if (c == 0) continue;
        BigInt a = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        if (k == 0 || a != 1) os << a.get_str();
        if (k > 0) {
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace fusionkit
