#include "fusionkit/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace fusionkit {

unsigned long euler_phi(unsigned long n) {
    unsigned long result = n, m = n;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<unsigned long> units_mod(unsigned long n) {
    if (n <= 2) return {1};
    std::vector<unsigned long> u;
    for (unsigned long m = 1; m < n; ++m)
        if (std::gcd(m, n) == 1) u.push_back(m);
    return u;
}

namespace {

unsigned long reduced_conductor(unsigned long m) { return (m % 4 == 2) ? m / 2 : m; }

}  // namespace

bool cyclotomic_subfield(unsigned long m, unsigned long n) {
    return reduced_conductor(n) % reduced_conductor(m) == 0;
}

namespace {

// zeta_n^k reduced mod Phi_n, for 0 <= k < n; integer coefficients since
// Phi_n is monic over Z.
struct PowerTable {
    unsigned long phi;
    std::vector<std::vector<BigInt>> pow;  // n rows of phi entries
};

const PowerTable& power_table(unsigned long n) {
    static std::map<unsigned long, PowerTable> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    const IntPolynomial& cyc = cyclotomic_polynomial(n);
    const unsigned long phi = static_cast<unsigned long>(cyc.degree());
    PowerTable t;
    t.phi = phi;
    t.pow.resize(n);
    std::vector<BigInt> cur(phi, BigInt(0));
    cur[0] = 1;
    t.pow[0] = cur;
    for (unsigned long k = 1; k < n; ++k) {
        // multiply by x, reduce the overflowing top term by Phi_n
        BigInt top = cur.back();
        for (unsigned long j = phi - 1; j > 0; --j) cur[j] = cur[j - 1];
        cur[0] = 0;
        if (top != 0)
            for (unsigned long j = 0; j < phi; ++j) cur[j] -= top * cyc.coeffs()[j];
        t.pow[k] = cur;
    }
    return cache.emplace(n, std::move(t)).first->second;
}

std::vector<BigRational> reduce_exponents(unsigned long n,
                                          const std::vector<std::pair<unsigned long, BigRational>>& terms) {
    const PowerTable& t = power_table(n);
    std::vector<BigRational> out(t.phi, BigRational(0));
    for (const auto& [e, c] : terms) {
        if (c == 0) continue;
        const auto& row = t.pow[e % n];
        for (unsigned long j = 0; j < t.phi; ++j)
            if (row[j] != 0) out[j] += c * BigRational(row[j]);
    }
    return out;
}

}  // namespace

CyclotomicNumber CyclotomicNumber::zero(unsigned long n) {
    if (n == 0) throw Error("conductor must be positive");
    return CyclotomicNumber(n, std::vector<BigRational>(euler_phi(n), BigRational(0)));
}

CyclotomicNumber CyclotomicNumber::one(unsigned long n) {
    auto v = zero(n);
    v.coeffs_[0] = 1;
    return v;
}

CyclotomicNumber CyclotomicNumber::zeta(unsigned long n, long k) {
    if (n == 0) throw Error("conductor must be positive");
    long kk = k % static_cast<long>(n);
    if (kk < 0) kk += static_cast<long>(n);
    return CyclotomicNumber(n, reduce_exponents(n, {{static_cast<unsigned long>(kk), BigRational(1)}}));
}

CyclotomicNumber CyclotomicNumber::from_coeffs(unsigned long n, std::vector<BigRational> coeffs) {
    if (n == 0) throw Error("conductor must be positive");
    if (coeffs.size() != euler_phi(n)) throw Error("coefficient vector length must equal phi(conductor)");
    for (auto& c : coeffs) c.canonicalize();
    return CyclotomicNumber(n, std::move(coeffs));
}

bool CyclotomicNumber::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRational& c) { return c == 0; });
}

bool CyclotomicNumber::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

BigRational CyclotomicNumber::rational_value() const {
    if (!is_rational()) throw Error("value is not rational");
    return coeffs_[0];
}

bool CyclotomicNumber::is_real() const { return conj() == *this; }

CyclotomicNumber CyclotomicNumber::embedded(unsigned long m) const {
    if (m == conductor_) return *this;
    if (m % conductor_ != 0) throw Error("embedding target must be a multiple of the conductor");
    unsigned long step = m / conductor_;
    std::vector<std::pair<unsigned long, BigRational>> terms;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) terms.emplace_back(static_cast<unsigned long>(k) * step, coeffs_[k]);
    return CyclotomicNumber(m, reduce_exponents(m, terms));
}

CyclotomicNumber CyclotomicNumber::galois(unsigned long m) const {
    if (std::gcd(m % conductor_, conductor_) != 1) throw Error("galois exponent must be a unit mod conductor");
    std::vector<std::pair<unsigned long, BigRational>> terms;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) terms.emplace_back((static_cast<unsigned long>(k) * m) % conductor_, coeffs_[k]);
    return CyclotomicNumber(conductor_, reduce_exponents(conductor_, terms));
}

CyclotomicNumber CyclotomicNumber::conj() const {
    if (conductor_ <= 2) return *this;
    return galois(conductor_ - 1);
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    std::vector<BigRational> c(coeffs_);
    for (auto& v : c) v = -v;
    return CyclotomicNumber(conductor_, std::move(c));
}

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    unsigned long n = std::lcm(a.conductor_, b.conductor_);
    CyclotomicNumber x = a.embedded(n), y = b.embedded(n);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
    return x;
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    unsigned long n = std::lcm(a.conductor_, b.conductor_);
    CyclotomicNumber x = a.embedded(n), y = b.embedded(n);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
    return x;
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    unsigned long n = std::lcm(a.conductor_, b.conductor_);
    CyclotomicNumber x = a.embedded(n), y = b.embedded(n);
    std::vector<std::pair<unsigned long, BigRational>> terms;
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
        if (x.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < y.coeffs_.size(); ++j) {
            if (y.coeffs_[j] == 0) continue;
            terms.emplace_back(static_cast<unsigned long>(i + j), x.coeffs_[i] * y.coeffs_[j]);
        }
    }
    return CyclotomicNumber(n, reduce_exponents(n, terms));
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw DivisionByZeroError();
    if (is_rational()) {
        CyclotomicNumber r = zero(conductor_);
        r.coeffs_[0] = 1 / coeffs_[0];
        return r;
    }
    RationalPoly inv = poly_inverse_mod(RationalPoly(coeffs_), to_rational(cyclotomic_polynomial(conductor_)));
    std::vector<BigRational> c(coeffs_.size(), BigRational(0));
    for (std::size_t i = 0; i < inv.size(); ++i) c[i] = inv[i];
    return CyclotomicNumber(conductor_, std::move(c));
}

CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    unsigned long n = std::lcm(a.conductor_, b.conductor_);
    return a.embedded(n) * b.embedded(n).inverse();
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    unsigned long n = std::lcm(a.conductor_, b.conductor_);
    return a.embedded(n).coeffs_ == b.embedded(n).coeffs_;
}

CyclotomicNumber CyclotomicNumber::normalized() const {
    if (is_rational()) {
        CyclotomicNumber r(coeffs_[0]);
        return r;
    }
    for (unsigned long d = 1; d < conductor_; ++d) {
        if (conductor_ % d != 0 || d % 4 == 2) continue;
        // fixed by Gal(Q(zeta_n)/Q(zeta_d))?
        bool fixed = true;
        for (unsigned long m : units_mod(conductor_)) {
            if (m % d != 1) continue;
            if (galois(m) != *this) {
                fixed = false;
                break;
            }
        }
        if (!fixed) continue;
        // solve for coordinates in the conductor-d power basis
        unsigned long phi_d = euler_phi(d), phi_n = coeffs_.size();
        std::vector<std::vector<BigRational>> cols;
        for (unsigned long j = 0; j < phi_d; ++j) cols.push_back(zeta(d, static_cast<long>(j)).embedded(conductor_).coeffs_);
        // Gaussian elimination on the phi_n x (phi_d+1) system
        std::vector<std::vector<BigRational>> m(phi_n, std::vector<BigRational>(phi_d + 1, BigRational(0)));
        for (unsigned long i = 0; i < phi_n; ++i) {
            for (unsigned long j = 0; j < phi_d; ++j) m[i][j] = cols[j][i];
            m[i][phi_d] = coeffs_[i];
        }
        std::vector<long> pivot_col(phi_d, -1);
        unsigned long row = 0;
        for (unsigned long col = 0; col < phi_d && row < phi_n; ++col) {
            unsigned long sel = row;
            while (sel < phi_n && m[sel][col] == 0) ++sel;
            if (sel == phi_n) continue;
            std::swap(m[sel], m[row]);
            for (unsigned long i = 0; i < phi_n; ++i) {
                if (i == row || m[i][col] == 0) continue;
                BigRational f = m[i][col] / m[row][col];
                for (unsigned long j = col; j <= phi_d; ++j) m[i][j] -= f * m[row][j];
            }
            pivot_col[col] = static_cast<long>(row);
            ++row;
        }
        bool consistent = true;
        for (unsigned long i = row; i < phi_n && consistent; ++i)
            if (m[i][phi_d] != 0) consistent = false;
        if (!consistent) continue;
        std::vector<BigRational> sol(phi_d, BigRational(0));
        for (unsigned long col = 0; col < phi_d; ++col)
            if (pivot_col[col] >= 0) {
                unsigned long r0 = static_cast<unsigned long>(pivot_col[col]);
                sol[col] = m[r0][phi_d] / m[r0][col];
            }
        return CyclotomicNumber(d, std::move(sol));
    }
    return *this;
}

Complex256 CyclotomicNumber::numeric() const {
    Real256 two_pi = Real256(2L) * Real256::pi();
    Real256 n(static_cast<long>(conductor_));
    Complex256 acc(0L);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        Real256 angle = two_pi * Real256(static_cast<long>(k)) / n;
        Real256 c(coeffs_[k]);
        acc = acc + Complex256(c * cos(angle), c * sin(angle));
    }
    return acc;
}

std::complex<double> CyclotomicNumber::numeric_double() const {
    Complex256 v = numeric();
    return {v.re.to_double(), v.im.to_double()};
}

std::vector<CyclotomicNumber> galois_conjugates(const CyclotomicNumber& a) {
    std::vector<CyclotomicNumber> out;
    out.push_back(a);
    for (unsigned long m : units_mod(a.conductor())) {
        if (m == 1) continue;
        out.push_back(a.galois(m));
    }
    return out;
}

std::vector<CyclotomicNumber> distinct_conjugates(const CyclotomicNumber& a) {
    std::vector<CyclotomicNumber> out;
    for (const auto& c : galois_conjugates(a))
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    return out;
}

RationalPoly min_poly_over_q(const CyclotomicNumber& a) {
    std::vector<CyclotomicNumber> orbit = distinct_conjugates(a);
    std::vector<CyclotomicNumber> poly{CyclotomicNumber(1L)};  // coefficients, lowest first
    for (const auto& root : orbit) {
        std::vector<CyclotomicNumber> next(poly.size() + 1, CyclotomicNumber::zero(1));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = next[i + 1] + poly[i];
            next[i] = next[i] - poly[i] * root;
        }
        poly = std::move(next);
    }
    RationalPoly out;
    out.reserve(poly.size());
    for (const auto& c : poly) {
        if (!c.is_rational()) throw Error("conjugate product has irrational coefficient");
        out.push_back(c.rational_value());
    }
    return out;
}

bool is_algebraic_integer(const CyclotomicNumber& a) {
    for (const BigRational& c : min_poly_over_q(a))
        if (!fusionkit::is_integer(c)) return false;
    return true;
}

CyclotomicNumber sqrt_of_integer(const BigInt& m) {
    if (m <= 0) throw Error("sqrt_of_integer requires a positive integer");
    // split m = f^2 * d with d squarefree
    BigInt d(1), f(1), rest = m;
    for (BigInt p(2); p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) f *= p;
        if (e % 2) d *= p;
    }
    d *= rest;

    CyclotomicNumber root{BigRational(f)};
    BigInt dd = d;
    if (dd % 2 == 0) {
        // sqrt(2) = zeta_8 + zeta_8^-1
        root = root * (CyclotomicNumber::zeta(8, 1) + CyclotomicNumber::zeta(8, -1));
        dd /= 2;
    }
    for (BigInt p(3); p <= dd; p += 2) {
        if (dd % p != 0) continue;
        dd /= p;
        unsigned long pl = static_cast<unsigned long>(p.get_ui());
        CyclotomicNumber g = CyclotomicNumber::zero(pl);
        for (unsigned long a = 1; a < pl; ++a) {
            BigInt av(static_cast<long>(a));
            int legendre = mpz_legendre(av.get_mpz_t(), p.get_mpz_t());
            if (legendre == 1)
                g = g + CyclotomicNumber::zeta(pl, static_cast<long>(a));
            else if (legendre == -1)
                g = g - CyclotomicNumber::zeta(pl, static_cast<long>(a));
        }
        if (pl % 4 == 3) g = g * CyclotomicNumber::zeta(4, 3);  // g was i*sqrt(p)
        root = root * g;
    }
    CyclotomicNumber check = root * root;
    if (!check.is_rational() || check.rational_value() != BigRational(m))
        throw Error("sqrt_of_integer: verification failed");
    if (root.numeric().re.sign() < 0) root = -root;
    return root.normalized();
}

CyclotomicNumber cyclo_arith(const CyclotomicNumber& a, const CyclotomicNumber& b, CycloOp op) {
    switch (op) {
        case CycloOp::add: return a + b;
        case CycloOp::sub: return a - b;
        case CycloOp::mul: return a * b;
        case CycloOp::div: return a / b;
    }
    throw Error("unknown operation");
}

}  // namespace fusionkit
