#include "fusionkit/roots.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <numeric>

namespace fusionkit {

namespace {

std::vector<Complex256> initial_guesses(const IntPolynomial& p) {
    const int d = p.degree();
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
    const double lc = p.leading().get_d();
    for (int i = 0; i < d; ++i) {
        companion(i, d - 1) = -p.coeffs()[static_cast<std::size_t>(i)].get_d() / lc;
        if (i + 1 < d) companion(i + 1, i) = 1.0;
    }
    Eigen::VectorXcd ev = companion.eigenvalues();
    std::vector<Complex256> z;
    z.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        // tiny deterministic perturbation so coincident double-precision
        // estimates do not stall the Aberth correction
        double bump = 1e-7 * (i + 1);
        z.emplace_back(Real256(ev(i).real() + bump), Real256(ev(i).imag() + bump * 0.5));
    }
    return z;
}

// p and p' evaluated by Horner at 256 bits
void eval_with_derivative(const IntPolynomial& p, const Complex256& z, Complex256& val, Complex256& der) {
    val = Complex256(0L);
    der = Complex256(0L);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        der = der * z + val;
        val = val * z + Complex256(Real256(*it), Real256(0L));
    }
}

}  // namespace

std::vector<Complex256> complex_roots(const IntPolynomial& p) {
    const int d = p.degree();
    if (d <= 0) return {};
    if (d == 1) {
        BigRational r(-p.coeffs()[0], p.coeffs()[1]);
        r.canonicalize();
        return {Complex256(Real256(r), Real256(0L))};
    }
    std::vector<Complex256> z = initial_guesses(p);
    const Real256 tol = Real256::eps(210);
    for (int iter = 0; iter < 400; ++iter) {
        Real256 worst(0L);
        for (int i = 0; i < d; ++i) {
            Complex256 val, der;
            eval_with_derivative(p, z[i], val, der);
            if (der.abs2().is_zero()) continue;
            Complex256 w = val / der;
            Complex256 s(0L);
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                Complex256 diff = z[i] - z[j];
                if (diff.abs2().is_zero()) continue;
                s = s + Complex256(1L) / diff;
            }
            Complex256 denom = Complex256(1L) - w * s;
            Complex256 step = denom.abs2().is_zero() ? w : w / denom;
            z[i] = z[i] - step;
            Real256 m = step.abs();
            if (m > worst) worst = m;
        }
        if (worst < tol) break;
    }
    return z;
}

namespace {

struct Atom {
    std::vector<std::size_t> roots;  // one real root or a conjugate pair
};

// atoms: real roots alone, conjugate pairs together, so that candidate
// factors built from whole atoms have real coefficients
std::vector<Atom> cluster_atoms(const std::vector<Complex256>& roots) {
    const Real256 pair_tol = Real256::eps(100);
    std::vector<bool> used(roots.size(), false);
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        if (abs(roots[i].im) < pair_tol) {
            atoms.push_back({{i}});
            continue;
        }
        std::size_t best = i;
        Real256 best_dist;
        bool found = false;
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            if (used[j]) continue;
            Complex256 diff{roots[i].re - roots[j].re, roots[i].im + roots[j].im};
            Real256 dist = diff.abs2();
            if (!found || dist < best_dist) {
                best = j;
                best_dist = dist;
                found = true;
            }
        }
        if (!found) {
            atoms.push_back({{i}});
            continue;
        }
        used[best] = true;
        atoms.push_back({{i, best}});
    }
    return atoms;
}

// real coefficients of prod over atom roots of (x - z), monic
std::vector<Real256> atom_factor(const std::vector<Complex256>& roots, const Atom& a) {
    if (a.roots.size() == 1) {
        return {-roots[a.roots[0]].re, Real256(1L)};
    }
    const Complex256& z = roots[a.roots[0]];
    Real256 two(2L);
    return {z.abs2(), -(two * z.re), Real256(1L)};
}

std::vector<Real256> real_poly_mul(const std::vector<Real256>& a, const std::vector<Real256>& b) {
    std::vector<Real256> c(a.size() + b.size() - 1, Real256(0L));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

std::vector<BigInt> divisors_ascending(const BigInt& n) {
    BigInt a = abs(n);
    std::vector<BigInt> ds;
    for (BigInt d(1); d * d <= a; ++d) {
        if (a % d == 0) {
            ds.push_back(d);
            ds.push_back(a / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    return ds;
}

}  // namespace

std::optional<IntPolynomial> integer_factor_at(const IntPolynomial& p,
                                               const std::vector<Complex256>& roots,
                                               std::size_t target_index) {
    if (p.degree() < 1 || roots.size() != static_cast<std::size_t>(p.degree())) return std::nullopt;
    std::vector<Atom> atoms = cluster_atoms(roots);
    if (atoms.size() > 20) return std::nullopt;

    std::size_t target_atom = 0;
    for (std::size_t a = 0; a < atoms.size(); ++a)
        for (std::size_t r : atoms[a].roots)
            if (r == target_index) target_atom = a;

    std::vector<std::size_t> others;
    for (std::size_t a = 0; a < atoms.size(); ++a)
        if (a != target_atom) others.push_back(a);

    std::vector<std::uint32_t> masks(static_cast<std::size_t>(1) << others.size());
    std::iota(masks.begin(), masks.end(), 0u);
    auto mask_degree = [&](std::uint32_t m) {
        std::size_t deg = atoms[target_atom].roots.size();
        for (std::size_t b = 0; b < others.size(); ++b)
            if (m & (1u << b)) deg += atoms[others[b]].roots.size();
        return deg;
    };
    std::stable_sort(masks.begin(), masks.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return mask_degree(a) < mask_degree(b); });

    const std::vector<BigInt> lcs = divisors_ascending(p.leading());
    const Real256 round_tol = Real256::pow10(-24);

    for (std::uint32_t m : masks) {
        std::vector<Real256> f = atom_factor(roots, atoms[target_atom]);
        for (std::size_t b = 0; b < others.size(); ++b)
            if (m & (1u << b)) f = real_poly_mul(f, atom_factor(roots, atoms[others[b]]));
        if (f.size() > static_cast<std::size_t>(p.degree()) + 1) continue;
        for (const BigInt& c : lcs) {
            Real256 cr((c));
            std::vector<BigInt> rounded(f.size());
            bool ok = true;
            for (std::size_t i = 0; i < f.size() && ok; ++i) {
                Real256 v = f[i] * cr;
                rounded[i] = v.nearest_int();
                if (abs(v - Real256(rounded[i])) > round_tol) ok = false;
            }
            if (!ok) continue;
            IntPolynomial candidate{std::vector<BigInt>(rounded)};
            if (candidate.degree() + 1 != static_cast<int>(f.size())) continue;
            if (divide_exact(p, candidate)) return candidate;
        }
    }
    return std::nullopt;
}

std::optional<IntPolynomial> integer_factor_near(const IntPolynomial& p, const Complex256& target) {
    std::vector<Complex256> roots = complex_roots(p);
    if (roots.empty()) return std::nullopt;
    std::size_t best = 0;
    Real256 best_dist = (roots[0] - target).abs2();
    for (std::size_t i = 1; i < roots.size(); ++i) {
        Real256 d = (roots[i] - target).abs2();
        if (d < best_dist) {
            best = i;
            best_dist = d;
        }
    }
    return integer_factor_at(p, roots, best);
}

}  // namespace fusionkit
