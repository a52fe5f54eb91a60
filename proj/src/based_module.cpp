#include "fusionkit/based_module.hpp"

#include <algorithm>
#include <sstream>

namespace fusionkit {

BasedModule BasedModule::make(FusionRing ring, std::size_t size, std::vector<std::int64_t> m_flat) {
    BasedModule mod;
    if (size == 0) throw Error("module size must be positive");
    if (m_flat.size() != ring.rank() * size * size) throw Error("module tensor has wrong shape");
    for (std::int64_t v : m_flat)
        if (v < 0) throw Error("negative module multiplicity");
    mod.ring_ = std::move(ring);
    mod.size_ = size;
    mod.m_ = std::move(m_flat);
    return mod;
}

ModuleValidation validate_module(const BasedModule& mod) {
    const FusionRing& ring = mod.ring();
    require_valid(ring);
    ModuleValidation out;
    const std::size_t r = ring.rank(), s = mod.size(), u = ring.unit();
    constexpr std::size_t kMaxViolations = 100;
    auto add = [&](const std::string& axiom, std::vector<std::size_t> where, std::string detail) {
        if (out.violations.size() < kMaxViolations)
            out.violations.push_back({axiom, std::move(where), std::move(detail)});
    };

    for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b) {
            std::int64_t want = (a == b) ? 1 : 0;
            if (mod.m(u, a, b) != want) add("module-unit", {u, a, b}, "unit does not act as identity");
        }

    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t a = 0; a < s; ++a)
                for (std::size_t b = 0; b < s; ++b) {
                    std::int64_t lhs = 0, rhs = 0;
                    for (std::size_t c = 0; c < s; ++c) lhs += mod.m(j, a, c) * mod.m(i, c, b);
                    for (std::size_t k = 0; k < r; ++k) rhs += ring.n(i, j, k) * mod.m(k, a, b);
                    if (lhs != rhs) {
                        std::ostringstream os;
                        os << "action of b_i(b_j m_a) = " << lhs << " but (b_i b_j) m_a = " << rhs;
                        add("module-associativity", {i, j, a, b}, os.str());
                    }
                }

    // strong connectivity of the action graph
    auto reach = [&](bool forward) {
        std::vector<bool> seen(s, false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        while (!stack.empty()) {
            std::size_t a = stack.back();
            stack.pop_back();
            for (std::size_t b = 0; b < s; ++b) {
                if (seen[b]) continue;
                bool edge = false;
                for (std::size_t i = 0; i < r && !edge; ++i)
                    edge = forward ? mod.m(i, a, b) > 0 : mod.m(i, b, a) > 0;
                if (edge) {
                    seen[b] = true;
                    stack.push_back(b);
                }
            }
        }
        return seen;
    };
    auto fwd = reach(true), bwd = reach(false);
    out.indecomposable = std::all_of(fwd.begin(), fwd.end(), [](bool x) { return x; }) &&
                         std::all_of(bwd.begin(), bwd.end(), [](bool x) { return x; });
    return out;
}

BasedModule regular_module(const FusionRing& ring) {
    const std::size_t r = ring.rank();
    std::vector<std::int64_t> m(r * r * r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b) m[(i * r + a) * r + b] = ring.n(i, a, b);
    return BasedModule::make(ring, r, std::move(m));
}

BasedModule direct_sum(const BasedModule& x, const BasedModule& y) {
    if (!x.ring().same_fusion_rules(y.ring())) throw Error("direct sum needs modules over the same ring");
    const std::size_t r = x.ring().rank(), sx = x.size(), sy = y.size(), s = sx + sy;
    std::vector<std::int64_t> m(r * s * s, 0);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t a = 0; a < sx; ++a)
            for (std::size_t b = 0; b < sx; ++b) m[(i * s + a) * s + b] = x.m(i, a, b);
        for (std::size_t a = 0; a < sy; ++a)
            for (std::size_t b = 0; b < sy; ++b) m[(i * s + sx + a) * s + sx + b] = y.m(i, a, b);
    }
    return BasedModule::make(x.ring(), s, std::move(m));
}

namespace {

// arithmetic in Q[mu]/(p) for the exact eigenvector solve
struct NumberField {
    RationalPoly modulus;

    RationalPoly reduce(const RationalPoly& a) const { return rp_divmod(a, modulus).second; }
    RationalPoly mul(const RationalPoly& a, const RationalPoly& b) const { return reduce(rp_mul(a, b)); }
    RationalPoly sub(const RationalPoly& a, const RationalPoly& b) const { return rp_sub(a, b); }
    RationalPoly inv(const RationalPoly& a) const { return poly_inverse_mod(a, modulus); }
    static bool is_zero(const RationalPoly& a) {
        return std::all_of(a.begin(), a.end(), [](const BigRational& c) { return c == 0; });
    }
};

}  // namespace

std::vector<AlgebraicReal> fp_vector(const BasedModule& mod) {
    ModuleValidation v = validate_module(mod);
    if (!v.violations.empty()) throw Error("fp_vector requires a valid module");
    if (!v.indecomposable) throw DecomposableError();

    const FusionRing& ring = mod.ring();
    const std::size_t r = ring.rank(), s = mod.size();

    IntMatrix total(s, std::vector<BigInt>(s, BigInt(0)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t a = 0; a < s; ++a)
            for (std::size_t b = 0; b < s; ++b) total[a][b] += mod.m(i, a, b);
    AlgebraicReal lam = perron_root(total);

    std::vector<RationalPoly> entries(s);
    RationalPoly modulus;
    if (lam.is_rational()) {
        modulus = {-*lam.rational_value(), BigRational(1)};
    } else if (lam.certified_min_poly()) {
        modulus = to_rational(*lam.certified_min_poly());
        BigRational lead = modulus.back();
        for (auto& c : modulus) c /= lead;
    } else {
        throw Error("fp_vector: eigenvalue minimal polynomial unavailable");
    }
    NumberField field{modulus};
    const std::size_t deg = modulus.size() - 1;

    // kernel of (total - mu I) over Q[mu]/(p); the Perron eigenvalue is
    // simple, so the kernel is one-dimensional
    std::vector<std::vector<RationalPoly>> mat(s, std::vector<RationalPoly>(s));
    for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b) {
            RationalPoly cell{BigRational(total[a][b])};
            if (a == b) cell = field.sub(cell, field.reduce(RationalPoly{BigRational(0), BigRational(1)}));
            mat[a][b] = field.reduce(cell);
        }
    std::vector<long> pivot_of_col(s, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < s && row < s; ++col) {
        std::size_t sel = row;
        while (sel < s && NumberField::is_zero(mat[sel][col])) ++sel;
        if (sel == s) continue;
        std::swap(mat[sel], mat[row]);
        RationalPoly inv = field.inv(mat[row][col]);
        for (std::size_t j = 0; j < s; ++j) mat[row][j] = field.mul(mat[row][j], inv);
        for (std::size_t i = 0; i < s; ++i) {
            if (i == row || NumberField::is_zero(mat[i][col])) continue;
            RationalPoly f = mat[i][col];
            for (std::size_t j = 0; j < s; ++j)
                mat[i][j] = field.sub(mat[i][j], field.mul(f, mat[row][j]));
        }
        pivot_of_col[col] = static_cast<long>(row);
        ++row;
    }
    long free_col = -1;
    std::size_t free_count = 0;
    for (std::size_t col = 0; col < s; ++col)
        if (pivot_of_col[col] < 0) {
            free_col = static_cast<long>(col);
            ++free_count;
        }
    if (free_col < 0) throw Error("fp_vector: eigen-kernel is trivial");
    if (free_count != 1) throw Error("fp_vector: Perron eigenvalue is not simple");
    entries[static_cast<std::size_t>(free_col)] = RationalPoly{BigRational(1)};
    for (std::size_t col = 0; col < s; ++col) {
        if (pivot_of_col[col] < 0) continue;
        RationalPoly val = mat[static_cast<std::size_t>(pivot_of_col[col])][static_cast<std::size_t>(free_col)];
        for (auto& c : val) c = -c;
        entries[col] = field.reduce(val);
    }

    // normalize: all entries share a sign; scale so the minimum entry is 1
    Real256 mu = lam.numeric();
    auto numeric_at = [&](const RationalPoly& p) {
        Real256 acc(0L);
        for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * mu + Real256(*it);
        return acc;
    };
    if (numeric_at(entries[0]).sign() < 0)
        for (auto& e : entries)
            for (auto& c : e) c = -c;
    std::size_t min_at = 0;
    Real256 min_val = numeric_at(entries[0]);
    for (std::size_t a = 1; a < s; ++a) {
        Real256 val = numeric_at(entries[a]);
        if (val.sign() <= 0) throw Error("fp_vector: eigenvector is not strictly positive");
        if (val < min_val) {
            min_at = a;
            min_val = val;
        }
    }
    RationalPoly scale = field.inv(entries[min_at]);
    for (auto& e : entries) e = field.mul(e, scale);

    // package each entry as a certified algebraic real
    std::vector<AlgebraicReal> out;
    out.reserve(s);
    for (std::size_t a = 0; a < s; ++a) {
        RationalPoly& e = entries[a];
        bool constant = true;
        for (std::size_t k = 1; k < e.size(); ++k)
            if (e[k] != 0) constant = false;
        if (constant) {
            out.push_back(AlgebraicReal::from_rational(e.empty() ? BigRational(0) : e[0]));
            continue;
        }
        // annihilator: characteristic polynomial of multiplication by the
        // entry in the basis 1, mu, ..., mu^{deg-1}
        std::vector<std::vector<BigRational>> mult(deg, std::vector<BigRational>(deg, BigRational(0)));
        for (std::size_t j = 0; j < deg; ++j) {
            RationalPoly basis(j + 1, BigRational(0));
            basis[j] = 1;
            RationalPoly img = field.mul(e, basis);
            for (std::size_t i = 0; i < img.size(); ++i) mult[i][j] = img[i];
        }
        IntPolynomial annihilator = clear_denominators(char_poly_rational(mult));
        Real256 val = numeric_at(e);
        IntPolynomial sq = squarefree_part(annihilator);
        SturmSequence sturm(sq);
        BigRational center = val.to_rational(200);
        BigRational w(1, BigInt(1) << 100);
        AlgebraicReal entry = AlgebraicReal::from_rational(BigRational(0));
        bool placed = false;
        for (int tries = 0; tries < 120 && !placed; ++tries) {
            BigRational lo = center - w, hi = center + w;
            if (sign_at(sq, lo) != 0 && sign_at(sq, hi) != 0) {
                int count = sturm.count_roots(lo, hi);
                if (count == 1) {
                    entry = AlgebraicReal::isolate(annihilator, lo, hi).certified();
                    placed = true;
                    break;
                }
                if (count == 0) {
                    w *= 8;  // the nearest root drifted outside; widen
                    continue;
                }
            }
            w /= 4;
        }
        if (!placed) throw Error("fp_vector: failed to isolate an eigenvector entry");
        out.push_back(entry);
    }

    // eigen-relation check at the working tolerance
    FPData fp = fpdims(ring);
    std::vector<Real256> vals;
    vals.reserve(s);
    for (const auto& e : out) vals.push_back(e.numeric());
    Real256 tol = Real256::pow10(-9);
    for (std::size_t i = 0; i < r; ++i) {
        Real256 lam_i = fp.dims[i].numeric();
        for (std::size_t a = 0; a < s; ++a) {
            Real256 acc(0L);
            for (std::size_t b = 0; b < s; ++b)
                if (mod.m(i, a, b)) acc += Real256(static_cast<long>(mod.m(i, a, b))) * vals[b];
            if (abs(acc - lam_i * vals[a]) > tol) throw Error("fp_vector: eigen-relation check failed");
        }
    }
    return out;
}

}  // namespace fusionkit
