#include "fusionkit/algebraic.hpp"

#include <algorithm>
#include <numeric>

#include "fusionkit/roots.hpp"

namespace fusionkit {

RationalPoly char_poly_rational(const std::vector<std::vector<BigRational>>& A) {
    const std::size_t n = A.size();
    for (const auto& row : A)
        if (row.size() != n) throw Error("char_poly requires a square matrix");
    if (n == 0) return {BigRational(1)};

    RationalPoly c(n + 1, BigRational(0));
    c[n] = 1;
    auto Ak = A;
    for (std::size_t k = 1; k <= n; ++k) {
        BigRational tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += Ak[i][i];
        c[n - k] = -tr / BigRational(static_cast<long>(k));
        if (k == n) break;
        for (std::size_t i = 0; i < n; ++i) Ak[i][i] += c[n - k];
        std::vector<std::vector<BigRational>> next(n, std::vector<BigRational>(n, BigRational(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                if (A[i][l] == 0) continue;
                for (std::size_t j = 0; j < n; ++j) next[i][j] += A[i][l] * Ak[l][j];
            }
        Ak = std::move(next);
    }
    return c;
}

IntPolynomial char_poly(const IntMatrix& M) {
    const std::size_t n = M.size();
    std::vector<std::vector<BigRational>> A(n, std::vector<BigRational>(n, BigRational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (M[i].size() != n) throw Error("char_poly requires a square matrix");
        for (std::size_t j = 0; j < n; ++j) A[i][j] = BigRational(M[i][j]);
    }
    RationalPoly c = char_poly_rational(A);
    std::vector<BigInt> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!is_integer(c[i])) throw Error("char_poly: non-integer coefficient");
        out[i] = c[i].get_num();
    }
    return IntPolynomial(std::move(out));
}

namespace {

BigRational midpoint(const BigRational& a, const BigRational& b) {
    BigRational m = (a + b) / 2;
    m.canonicalize();
    return m;
}

}  // namespace

AlgebraicReal::AlgebraicReal() { *this = from_rational(BigRational(0)); }

void AlgebraicReal::collapse_to_rational(const BigRational& q) {
    rational_ = q;
    exact_ = CyclotomicNumber(q);
    min_poly_ = IntPolynomial(std::vector<BigInt>{-q.get_num(), q.get_den()});
    // shrink the interval around q keeping endpoint signs nonzero
    BigRational w(1, 4);
    while (true) {
        BigRational lo = q - w, hi = q + w;
        if (sign_at(squarefree_, lo) != 0 && sign_at(squarefree_, hi) != 0) {
            SturmSequence sturm(squarefree_);
            if (sturm.count_roots(lo, hi) == 1) {
                lo_ = lo;
                hi_ = hi;
                return;
            }
        }
        w /= 2;
    }
}

AlgebraicReal AlgebraicReal::from_rational(const BigRational& q) {
    AlgebraicReal v{Raw{}};
    v.annihilator_ = IntPolynomial(std::vector<BigInt>{-q.get_num(), q.get_den()});
    v.squarefree_ = v.annihilator_;
    v.lo_ = q - 1;
    v.hi_ = q + 1;
    v.collapse_to_rational(q);
    return v;
}

AlgebraicReal AlgebraicReal::isolate(IntPolynomial annihilator, const BigRational& lo, const BigRational& hi) {
    if (annihilator.degree() < 1) throw Error("isolate: annihilator must be nonconstant");
    AlgebraicReal v{Raw{}};
    v.annihilator_ = std::move(annihilator);
    v.squarefree_ = squarefree_part(v.annihilator_);
    v.lo_ = lo;
    v.hi_ = hi;
    if (lo >= hi) throw Error("isolate: empty interval");
    if (sign_at(v.squarefree_, lo) == 0 || sign_at(v.squarefree_, hi) == 0)
        throw Error("isolate: interval endpoint is a root");
    SturmSequence sturm(v.squarefree_);
    if (sturm.count_roots(lo, hi) != 1) throw Error("isolate: interval does not isolate exactly one root");
    if (v.squarefree_.degree() == 1) {
        BigRational q(-v.squarefree_.coeffs()[0], v.squarefree_.coeffs()[1]);
        q.canonicalize();
        v.collapse_to_rational(q);
    }
    return v;
}

AlgebraicReal AlgebraicReal::refined(const BigRational& width) const {
    if (rational_) return *this;
    AlgebraicReal v = *this;
    int lo_sign = sign_at(v.squarefree_, v.lo_);
    while (v.hi_ - v.lo_ > width) {
        BigRational mid = midpoint(v.lo_, v.hi_);
        int s = sign_at(v.squarefree_, mid);
        if (s == 0) {
            v.collapse_to_rational(mid);
            return v;
        }
        if (s == lo_sign)
            v.lo_ = mid;
        else
            v.hi_ = mid;
    }
    return v;
}

AlgebraicReal AlgebraicReal::certified() const {
    if (min_poly_) return *this;
    AlgebraicReal v = refined(BigRational(1, BigInt(1) << 96));
    if (v.min_poly_) return v;
    Real256 approx = Real256(midpoint(v.lo_, v.hi_));
    auto factor = integer_factor_near(v.squarefree_, Complex256(approx, Real256(0L)));
    if (!factor) return v;
    if (sign_at(*factor, v.lo_) * sign_at(*factor, v.hi_) > 0) return v;  // clustering picked a wrong root
    if (factor->degree() == 1) {
        BigRational q(-factor->coeffs()[0], factor->coeffs()[1]);
        q.canonicalize();
        v.collapse_to_rational(q);
        return v;
    }
    v.min_poly_ = *factor;
    if (!v.exact_ && factor->degree() == 2) {
        if (auto n = natural_conductor(v)) {
            if (auto lifted = cyclotomic_lift(v, {*n})) v.exact_ = lifted->normalized();
        }
    }
    return v;
}

AlgebraicReal AlgebraicReal::with_exact(CyclotomicNumber value) const {
    AlgebraicReal v = *this;
    v.exact_ = std::move(value);
    return v;
}

AlgebraicReal AlgebraicReal::scaled(const BigRational& c) const {
    if (c == 0) throw Error("scaled: zero multiplier");
    if (rational_) return from_rational(*rational_ * c);
    // p(x) annihilates v  =>  cleared p(x/c) annihilates c*v
    auto transform = [&](const IntPolynomial& p) {
        RationalPoly out(p.coeffs().size());
        BigRational pw(1);
        for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
            out[k] = BigRational(p.coeffs()[k]) / pw;
            pw *= c;
        }
        return clear_denominators(out);
    };
    AlgebraicReal v{Raw{}};
    v.annihilator_ = transform(annihilator_);
    v.squarefree_ = transform(squarefree_);
    BigRational a = lo_ * c, b = hi_ * c;
    if (c < 0) std::swap(a, b);
    v.lo_ = a;
    v.hi_ = b;
    if (min_poly_) v.min_poly_ = transform(*min_poly_);
    if (exact_) v.exact_ = *exact_ * CyclotomicNumber(c);
    return v;
}

double AlgebraicReal::to_double() const {
    if (rational_) return rational_->get_d();
    AlgebraicReal v = refined(BigRational(1, BigInt(1) << 64));
    if (v.rational_) return v.rational_->get_d();
    return midpoint(v.lo_, v.hi_).get_d();
}

Real256 AlgebraicReal::numeric() const {
    if (rational_) return Real256(*rational_);
    AlgebraicReal v = refined(BigRational(1, BigInt(1) << 224));
    if (v.rational_) return Real256(*v.rational_);
    return Real256(midpoint(v.lo_, v.hi_));
}

int AlgebraicReal::compare_rational(const BigRational& q) const {
    if (rational_) return *rational_ < q ? -1 : (*rational_ == q ? 0 : 1);
    AlgebraicReal v = *this;
    while (!v.rational_ && v.lo_ < q && q < v.hi_) {
        // a root of the squarefree part inside the isolating interval is
        // the value itself
        if (sign_at(v.squarefree_, q) == 0) return 0;
        v = v.refined((v.hi_ - v.lo_) / 4);
    }
    if (v.rational_) return *v.rational_ < q ? -1 : (*v.rational_ == q ? 0 : 1);
    if (v.hi_ <= q) return -1;
    return 1;
}

int compare(const AlgebraicReal& a, const AlgebraicReal& b) {
    if (a.rational_ && b.rational_)
        return *a.rational_ < *b.rational_ ? -1 : (*a.rational_ == *b.rational_ ? 0 : 1);
    if (a.rational_) return -b.compare_rational(*a.rational_);
    if (b.rational_) return a.compare_rational(*b.rational_);

    // Exact equality decision on the overlap via Sturm counts of the
    // squarefree parts and of their gcd.
    BigRational lo = std::max(a.lo_, b.lo_), hi = std::min(a.hi_, b.hi_);
    if (lo < hi && sign_at(a.squarefree_, lo) != 0 && sign_at(a.squarefree_, hi) != 0 &&
        sign_at(b.squarefree_, lo) != 0 && sign_at(b.squarefree_, hi) != 0) {
        SturmSequence sa(a.squarefree_), sb(b.squarefree_);
        int ca = sa.count_roots(lo, hi), cb = sb.count_roots(lo, hi);
        if (ca == 1 && cb == 1) {
            IntPolynomial g = gcd(a.squarefree_, b.squarefree_);
            if (g.degree() >= 1 && SturmSequence(g).count_roots(lo, hi) == 1) return 0;
            // both values in the overlap but distinct: refine until disjoint
        } else if (ca == 0 || cb == 0) {
            // one of the values lies outside the overlap
        }
    }
    AlgebraicReal x = a, y = b;
    for (int round = 0; round < 512; ++round) {
        if (x.hi_ <= y.lo_) return -1;
        if (y.hi_ <= x.lo_) return 1;
        if (x.rational_) return -y.compare_rational(*x.rational_);
        if (y.rational_) return x.compare_rational(*y.rational_);
        BigRational wx = (x.hi_ - x.lo_) / 4, wy = (y.hi_ - y.lo_) / 4;
        x = x.refined(wx);
        y = y.refined(wy);
        // re-test exact equality on the fresh overlap
        BigRational l = std::max(x.lo_, y.lo_), h = std::min(x.hi_, y.hi_);
        if (l < h && sign_at(x.squarefree_, l) != 0 && sign_at(x.squarefree_, h) != 0 &&
            sign_at(y.squarefree_, l) != 0 && sign_at(y.squarefree_, h) != 0) {
            SturmSequence sx(x.squarefree_), sy(y.squarefree_);
            int cx = sx.count_roots(l, h), cy = sy.count_roots(l, h);
            if (cx == 0 || cy == 0) continue;
            if (cx == 1 && cy == 1) {
                IntPolynomial g = gcd(x.squarefree_, y.squarefree_);
                if (g.degree() >= 1 && SturmSequence(g).count_roots(l, h) == 1) return 0;
            }
        }
    }
    throw Error("compare: failed to separate algebraic numbers");
}

AlgebraicReal perron_root(const IntMatrix& M) {
    if (M.empty()) throw Error("perron_root: empty matrix");
    for (const auto& row : M) {
        if (row.size() != M.size()) throw Error("perron_root: matrix not square");
        for (const auto& v : row)
            if (v < 0) throw Error("perron_root: negative entry");
    }
    IntPolynomial p = char_poly(M);
    bool nilpotent = true;
    for (int k = 0; k < p.degree() && nilpotent; ++k)
        if (p.coeffs()[k] != 0) nilpotent = false;
    if (nilpotent) throw NilpotentInputError();

    IntPolynomial sq = squarefree_part(p);
    SturmSequence sturm(sq);
    BigRational bound = root_bound(sq);
    BigRational lo = -bound, hi = bound;
    if (sturm.count_roots(lo, hi) < 1) throw Error("perron_root: no real root found");
    // keep the invariant: the largest real root lies in (lo, hi]
    while (sturm.count_roots(lo, hi) != 1) {
        BigRational mid = midpoint(lo, hi);
        if (sturm.count_roots(mid, hi) >= 1)
            lo = mid;
        else
            hi = mid;
    }
    AlgebraicReal v{AlgebraicReal::Raw{}};
    // ensure open endpoints: hi may sit exactly on the root
    if (sign_at(sq, hi) == 0) {
        v.annihilator_ = p;
        v.squarefree_ = sq;
        v.lo_ = lo;
        v.hi_ = hi + 1;
        v.collapse_to_rational(hi);
    } else {
        if (sign_at(sq, lo) == 0) {
            // lo sits on a smaller root; nudge it right without crossing
            // the isolated one
            BigRational step = (hi - lo) / 4;
            while (sign_at(sq, lo + step) == 0 || sturm.count_roots(lo + step, hi) != 1) step /= 4;
            lo += step;
        }
        v = AlgebraicReal::isolate(p, lo, hi);
    }
    v = v.refined(BigRational(1, BigInt(10) * BigInt(1000000000000)));  // width <= 1e-13
    return v.certified();
}

std::optional<unsigned long> natural_conductor(const AlgebraicReal& v) {
    const auto& mp = v.certified_min_poly();
    if (!mp) return std::nullopt;
    if (mp->degree() == 1) return 1;
    if (mp->degree() != 2) return std::nullopt;
    const BigInt &a = mp->coeffs()[2], &b = mp->coeffs()[1], &c = mp->coeffs()[0];
    BigInt disc = b * b - 4 * a * c;
    if (disc <= 0) return std::nullopt;
    // squarefree core of the discriminant
    BigInt d(1), rest = disc;
    for (BigInt q(2); q * q <= rest; ++q) {
        if (rest % q != 0) continue;
        int e = 0;
        while (rest % q == 0) {
            rest /= q;
            ++e;
        }
        if (e % 2) d *= q;
    }
    d *= rest;
    if (d == 1) return 1;
    unsigned long conductor = 1;
    BigInt dd = d;
    if (dd % 2 == 0) {
        conductor = 8;
        dd /= 2;
    }
    for (BigInt q(3); q <= dd; q += 2) {
        if (dd % q != 0) continue;
        dd /= q;
        unsigned long ql = static_cast<unsigned long>(q.get_ui());
        conductor = std::lcm(conductor, (ql % 4 == 1) ? ql : 4 * ql);
    }
    return conductor;
}

std::optional<CyclotomicNumber> cyclotomic_lift(const AlgebraicReal& v,
                                                const std::vector<unsigned long>& conductors) {
    const auto& mp = v.certified_min_poly();
    if (!mp) throw Error("cyclotomic_lift requires a certified minimal polynomial");
    if (mp->degree() == 1) {
        BigRational q(-mp->coeffs()[0], mp->coeffs()[1]);
        q.canonicalize();
        return CyclotomicNumber(q);
    }
    if (mp->degree() != 2) return std::nullopt;
    auto home = natural_conductor(v);
    if (!home) return std::nullopt;
    const BigInt &a = mp->coeffs()[2], &b = mp->coeffs()[1], &c = mp->coeffs()[0];
    BigInt disc = b * b - 4 * a * c;
    CyclotomicNumber root = sqrt_of_integer(disc);
    BigRational inv2a(1, 2 * a);
    CyclotomicNumber plus = (CyclotomicNumber(BigRational(-b)) + root) * CyclotomicNumber(inv2a);
    CyclotomicNumber minus = (CyclotomicNumber(BigRational(-b)) - root) * CyclotomicNumber(inv2a);
    // pick the root inside the isolating interval: the two roots are real
    // and distinct, so numeric comparison against the refined interval is
    // decisive once the interval is narrower than the root gap
    AlgebraicReal ref = v.refined(BigRational(1, BigInt(1) << 160));
    Real256 val = ref.numeric();
    const CyclotomicNumber& pick = (abs(plus.numeric().re - val) < abs(minus.numeric().re - val)) ? plus : minus;
    for (unsigned long n : conductors) {
        if (!cyclotomic_subfield(pick.conductor(), n)) continue;
        return pick.embedded(n);
    }
    return std::nullopt;
}

std::optional<AlgebraicReal> ratio(const AlgebraicReal& num, const AlgebraicReal& den) {
    if (den.compare_rational(BigRational(0)) == 0) throw DivisionByZeroError();
    if (num.is_rational() && den.is_rational())
        return AlgebraicReal::from_rational(*num.rational_value() / *den.rational_value());
    if (den.is_rational()) return num.scaled(1 / *den.rational_value());
    if (!num.certified_min_poly() || !den.certified_min_poly()) return std::nullopt;
    const IntPolynomial& p = *num.certified_min_poly();
    const IntPolynomial& q = *den.certified_min_poly();
    int dp = p.degree(), dq = q.degree();
    if (dp * dq > 24) return std::nullopt;

    // R(x) = Res_y(q(y), p(x*y)) vanishes at num/den; recover it by
    // interpolation from resultants at sample points.
    int deg = dp * dq;
    std::vector<BigRational> xs, ys;
    for (int t = 1; t <= deg + 1; ++t) {
        BigRational xt(t);
        RationalPoly py(static_cast<std::size_t>(dp) + 1);
        BigRational pw(1);
        for (int k = 0; k <= dp; ++k) {
            py[static_cast<std::size_t>(k)] = BigRational(p.coeffs()[static_cast<std::size_t>(k)]) * pw;
            pw *= xt;
        }
        xs.push_back(xt);
        ys.push_back(resultant(to_rational(q), py));
    }
    // Lagrange interpolation
    RationalPoly R;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        RationalPoly term{BigRational(1)};
        BigRational denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            term = rp_mul(term, RationalPoly{-xs[j], BigRational(1)});
            denom *= xs[i] - xs[j];
        }
        BigRational w = -ys[i] / denom;
        RationalPoly neg_term(term.size());
        for (std::size_t k = 0; k < term.size(); ++k) neg_term[k] = term[k] * w;
        R = rp_sub(R, neg_term);
    }
    IntPolynomial annihilator = clear_denominators(R);
    if (annihilator.degree() < 1) return std::nullopt;

    // bracket num/den from the two isolating intervals (denominator kept
    // away from zero first)
    AlgebraicReal a = num, b = den;
    BigRational width(1, BigInt(1) << 128);
    a = a.refined(width);
    b = b.refined(width);
    while (b.lower() <= 0 && 0 <= b.upper()) b = b.refined((b.upper() - b.lower()) / 4);
    auto div_lo = [&](const AlgebraicReal& x, const AlgebraicReal& y) {
        BigRational c1 = x.lower() / y.lower(), c2 = x.lower() / y.upper(), c3 = x.upper() / y.lower(),
                    c4 = x.upper() / y.upper();
        return std::min(std::min(c1, c2), std::min(c3, c4));
    };
    auto div_hi = [&](const AlgebraicReal& x, const AlgebraicReal& y) {
        BigRational c1 = x.lower() / y.lower(), c2 = x.lower() / y.upper(), c3 = x.upper() / y.lower(),
                    c4 = x.upper() / y.upper();
        return std::max(std::max(c1, c2), std::max(c3, c4));
    };
    IntPolynomial sq = squarefree_part(annihilator);
    SturmSequence sturm(sq);
    for (int round = 0; round < 256; ++round) {
        BigRational lo = div_lo(a, b), hi = div_hi(a, b);
        BigRational pad = (hi - lo) / 1024;
        if (pad == 0) pad = BigRational(1, BigInt(1) << 200);
        lo -= pad;
        hi += pad;
        if (sign_at(sq, lo) != 0 && sign_at(sq, hi) != 0 && sturm.count_roots(lo, hi) == 1)
            return AlgebraicReal::isolate(annihilator, lo, hi).certified();
        a = a.refined((a.upper() - a.lower()) / 16);
        b = b.refined((b.upper() - b.lower()) / 16);
    }
    return std::nullopt;
}

std::optional<bool> algebraic_integer_flag(const AlgebraicReal& v) {
    if (v.is_rational()) return is_integer(*v.rational_value());
    const auto& mp = v.certified_min_poly();
    if (!mp) return std::nullopt;
    return abs(mp->leading()) == 1;
}

}  // namespace fusionkit
