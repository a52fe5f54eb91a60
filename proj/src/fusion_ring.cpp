#include "fusionkit/fusion_ring.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace fusionkit {

FusionRing FusionRing::make(std::string name, std::vector<std::string> labels, std::size_t unit,
                            std::vector<std::size_t> dual, std::vector<std::int64_t> n_flat) {
    FusionRing r;
    r.name_ = std::move(name);
    r.rank_ = labels.size();
    if (r.rank_ == 0) throw InvalidRingError("rank must be positive");
    if (unit >= r.rank_) throw InvalidRingError("unit index out of range");
    if (dual.size() != r.rank_) throw InvalidRingError("dual involution has wrong length");
    for (std::size_t d : dual)
        if (d >= r.rank_) throw InvalidRingError("dual index out of range");
    if (n_flat.size() != r.rank_ * r.rank_ * r.rank_)
        throw InvalidRingError("structure constant tensor has wrong shape");
    for (std::int64_t v : n_flat)
        if (v < 0) throw InvalidRingError("negative structure constant");
    r.labels_ = std::move(labels);
    r.unit_ = unit;
    r.dual_ = std::move(dual);
    r.n_ = std::move(n_flat);
    return r;
}

ValidationReport validate(const FusionRing& ring) {
    ValidationReport report;
    const std::size_t r = ring.rank(), u = ring.unit();
    constexpr std::size_t kMaxViolations = 100;
    auto add = [&](const std::string& axiom, std::vector<std::size_t> where, std::string detail) {
        if (report.size() < kMaxViolations) report.push_back({axiom, std::move(where), std::move(detail)});
    };

    for (std::size_t i = 0; i < r; ++i) {
        if (ring.dual(ring.dual(i)) != i) add("dual-involution", {i}, "dual(dual(i)) != i");
    }
    if (ring.dual(u) != u) add("dual-involution", {u}, "dual(unit) != unit");

    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k) {
            std::int64_t want = (j == k) ? 1 : 0;
            if (ring.n(u, j, k) != want) add("unit", {u, j, k}, "N[unit][j][k] != delta_jk");
            if (ring.n(j, u, k) != want) add("unit", {j, u, k}, "N[j][unit][k] != delta_jk");
        }

    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            std::int64_t want = (j == ring.dual(i)) ? 1 : 0;
            if (ring.n(i, j, u) != want) add("duality", {i, j, u}, "N[i][j][unit] != delta_{j,dual(i)}");
        }

    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t k = 0; k < r; ++k)
                if (ring.n(a, i, k) != ring.n(ring.dual(k), a, ring.dual(i)))
                    add("frobenius-reciprocity", {a, i, k}, "N[a][i][k] != N[dual(k)][a][dual(i)]");

    for (std::size_t i = 0; i < r && report.size() < kMaxViolations; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k)
                for (std::size_t l = 0; l < r; ++l) {
                    std::int64_t lhs = 0, rhs = 0;
                    for (std::size_t m = 0; m < r; ++m) {
                        lhs += ring.n(i, j, m) * ring.n(m, k, l);
                        rhs += ring.n(j, k, m) * ring.n(i, m, l);
                    }
                    if (lhs != rhs) {
                        std::ostringstream os;
                        os << "sum_m N[i][j][m]N[m][k][l] = " << lhs << " but " << rhs;
                        add("associativity", {i, j, k, l}, os.str());
                    }
                }
    return report;
}

void require_valid(const FusionRing& ring) {
    ValidationReport report = validate(ring);
    if (report.empty()) return;
    std::ostringstream os;
    os << ring.name() << ": " << report.front().axiom << " violated at (";
    for (std::size_t i = 0; i < report.front().where.size(); ++i)
        os << (i ? "," : "") << report.front().where[i];
    os << ")";
    throw InvalidRingError(os.str());
}

IntMatrix mult_matrix(const FusionRing& ring, std::size_t i) {
    if (i >= ring.rank()) throw IndexOutOfRangeError();
    IntMatrix m(ring.rank(), std::vector<BigInt>(ring.rank()));
    for (std::size_t k = 0; k < ring.rank(); ++k)
        for (std::size_t j = 0; j < ring.rank(); ++j) m[k][j] = ring.n(i, k, j);
    return m;
}

namespace {

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size();
    IntMatrix c(n, std::vector<BigInt>(n, BigInt(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

IntMatrix mat_add(IntMatrix a, const IntMatrix& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) a[i][j] += b[i][j];
    return a;
}

}  // namespace

FPData fpdims(const FusionRing& ring) {
    require_valid(ring);
    const std::size_t r = ring.rank();
    FPData data;
    data.dims.reserve(r);
    for (std::size_t i = 0; i < r; ++i) data.dims.push_back(perron_root(mult_matrix(ring, i)));

    if (!data.dims[ring.unit()].is_rational() || *data.dims[ring.unit()].rational_value() != 1)
        throw InvalidRingError("unit does not have FP dimension 1");
    for (std::size_t i = 0; i < r; ++i)
        if (compare(data.dims[i], data.dims[ring.dual(i)]) != 0)
            throw InvalidRingError("FP dimension not dual-invariant");

    // sum of squares as the Perron root of sum_i [b_i][b_i*]
    IntMatrix b(r, std::vector<BigInt>(r, BigInt(0)));
    for (std::size_t i = 0; i < r; ++i)
        b = mat_add(std::move(b), mat_mul(mult_matrix(ring, i), mult_matrix(ring, ring.dual(i))));
    data.ring_dim = perron_root(b);
    data.regular = data.dims;

    // homomorphism identity, numerically always and exactly when every
    // dimension has a cyclotomic representative
    std::vector<Real256> numeric;
    numeric.reserve(r);
    for (const auto& d : data.dims) numeric.push_back(d.numeric());
    Real256 worst(0L);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Real256 rhs(0L);
            for (std::size_t k = 0; k < r; ++k)
                if (ring.n(i, j, k)) rhs += Real256(static_cast<long>(ring.n(i, j, k))) * numeric[k];
            Real256 resid = abs(numeric[i] * numeric[j] - rhs);
            if (resid > worst) worst = resid;
        }
    data.homomorphism_residual = worst.to_double();

    bool all_exact = std::all_of(data.dims.begin(), data.dims.end(),
                                 [](const AlgebraicReal& d) { return d.exact().has_value(); });
    if (all_exact) {
        unsigned long n = 1;
        for (const auto& d : data.dims) n = std::lcm(n, d.exact()->conductor());
        std::vector<CyclotomicNumber> ex;
        ex.reserve(r);
        for (const auto& d : data.dims) ex.push_back(d.exact()->embedded(n));
        bool ok = true;
        for (std::size_t i = 0; i < r && ok; ++i)
            for (std::size_t j = 0; j < r && ok; ++j) {
                CyclotomicNumber rhs = CyclotomicNumber::zero(n);
                for (std::size_t k = 0; k < r; ++k)
                    if (ring.n(i, j, k))
                        rhs = rhs + CyclotomicNumber(BigRational(static_cast<long>(ring.n(i, j, k)))) * ex[k];
                ok = (ex[i] * ex[j] == rhs);
            }
        data.homomorphism_exact = ok;
        if (!ok) throw InvalidRingError("exact FP homomorphism identity failed");
    }
    return data;
}

std::vector<BigInt> central_element_z(const FusionRing& ring) {
    require_valid(ring);
    const std::size_t r = ring.rank();
    std::vector<BigInt> z(r, BigInt(0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t m = 0; m < r; ++m) {
                std::int64_t c = ring.n(i, j, m);
                if (!c) continue;
                for (std::size_t k = 0; k < r; ++k) z[k] += BigInt(c) * BigInt(ring.n(m, ring.dual(i), k));
            }
    // centrality and strict positivity
    for (const BigInt& v : z)
        if (v <= 0) throw InvalidRingError("central element has a nonpositive coefficient");
    for (std::size_t a = 0; a < r; ++a) {
        std::vector<BigInt> e(r, BigInt(0));
        e[a] = 1;
        if (multiply_elements(ring, e, z) != multiply_elements(ring, z, e))
            throw InvalidRingError("z is not central");
    }
    return z;
}

std::vector<BigInt> multiply_elements(const FusionRing& ring, const std::vector<BigInt>& x,
                                      const std::vector<BigInt>& y) {
    const std::size_t r = ring.rank();
    if (x.size() != r || y.size() != r) throw IndexOutOfRangeError();
    std::vector<BigInt> out(r, BigInt(0));
    for (std::size_t i = 0; i < r; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < r; ++j) {
            if (y[j] == 0) continue;
            for (std::size_t k = 0; k < r; ++k)
                if (ring.n(i, j, k)) out[k] += x[i] * y[j] * BigInt(ring.n(i, j, k));
        }
    }
    return out;
}

bool is_commutative(const FusionRing& ring) {
    for (std::size_t i = 0; i < ring.rank(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            for (std::size_t k = 0; k < ring.rank(); ++k)
                if (ring.n(i, j, k) != ring.n(j, i, k)) return false;
    return true;
}

bool is_pointed(const FusionRing& ring) {
    for (std::size_t i = 0; i < ring.rank(); ++i)
        for (std::size_t k = 0; k < ring.rank(); ++k) {
            std::int64_t want = (k == ring.unit()) ? 1 : 0;
            if (ring.n(i, ring.dual(i), k) != want) return false;
        }
    return true;
}

Characters characters(const FusionRing& ring, double tol) {
    require_valid(ring);
    if (!is_commutative(ring)) throw NotCommutativeError();
    const std::size_t r = ring.rank();

    std::mt19937_64 rng(0x5eedULL);
    std::uniform_real_distribution<double> weight(0.25, 1.0);
    Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(static_cast<int>(r), static_cast<int>(r));
    std::vector<Eigen::MatrixXd> mats(r);
    for (std::size_t i = 0; i < r; ++i) {
        Eigen::MatrixXd m(static_cast<int>(r), static_cast<int>(r));
        for (std::size_t k = 0; k < r; ++k)
            for (std::size_t j = 0; j < r; ++j) m(static_cast<int>(k), static_cast<int>(j)) = double(ring.n(i, k, j));
        mats[i] = m;
        combo += weight(rng) * m;
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(combo.cast<std::complex<double>>());
    if (solver.info() != Eigen::Success) throw DegenerateSpectrumError("eigensolver failed");

    std::vector<std::vector<std::complex<double>>> rows;
    for (std::size_t m = 0; m < r; ++m) {
        Eigen::VectorXcd v = solver.eigenvectors().col(static_cast<int>(m));
        int pivot = 0;
        v.cwiseAbs().maxCoeff(&pivot);
        std::vector<std::complex<double>> chi(r);
        for (std::size_t i = 0; i < r; ++i) {
            Eigen::VectorXcd w = mats[i] * v;
            chi[i] = w(pivot) / v(pivot);
            if ((w - chi[i] * v).cwiseAbs().maxCoeff() > tol * v.cwiseAbs().maxCoeff() * 64)
                throw DegenerateSpectrumError("simultaneous diagonalization failed");
        }
        rows.push_back(std::move(chi));
    }
    // distinctness of homomorphisms
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = 0; b < a; ++b) {
            double dist = 0;
            for (std::size_t i = 0; i < r; ++i) dist = std::max(dist, std::abs(rows[a][i] - rows[b][i]));
            if (dist < tol) throw DegenerateSpectrumError("repeated character");
        }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (std::abs(a[i].real() - b[i].real()) > 1e-7) return a[i].real() < b[i].real();
            if (std::abs(a[i].imag() - b[i].imag()) > 1e-7) return a[i].imag() < b[i].imag();
        }
        return false;
    });
    Characters out;
    out.table = std::move(rows);
    std::size_t positive_rows = 0;
    for (std::size_t m = 0; m < out.table.size(); ++m) {
        bool pos = true;
        for (const auto& c : out.table[m])
            if (std::abs(c.imag()) > tol || c.real() <= tol) pos = false;
        if (pos) {
            out.fp_index = m;
            ++positive_rows;
        }
    }
    if (positive_rows != 1) throw DegenerateSpectrumError("Frobenius-Perron character not unique");
    return out;
}

std::vector<std::size_t> subring_generated(const FusionRing& ring, const std::vector<std::size_t>& seeds) {
    const std::size_t r = ring.rank();
    std::vector<bool> in(r, false);
    in[ring.unit()] = true;
    for (std::size_t s : seeds) {
        if (s >= r) throw IndexOutOfRangeError();
        in[s] = true;
    }
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t i = 0; i < r; ++i) {
            if (!in[i]) continue;
            if (!in[ring.dual(i)]) {
                in[ring.dual(i)] = true;
                grew = true;
            }
            for (std::size_t j = 0; j < r; ++j) {
                if (!in[j]) continue;
                for (std::size_t k = 0; k < r; ++k)
                    if (ring.n(i, j, k) > 0 && !in[k]) {
                        in[k] = true;
                        grew = true;
                    }
            }
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < r; ++i)
        if (in[i]) out.push_back(i);
    return out;
}

std::vector<std::size_t> adjoint_subring(const FusionRing& ring) {
    require_valid(ring);
    std::vector<std::size_t> seeds;
    for (std::size_t i = 0; i < ring.rank(); ++i)
        for (std::size_t k = 0; k < ring.rank(); ++k)
            if (ring.n(i, ring.dual(i), k) > 0) seeds.push_back(k);
    return subring_generated(ring, seeds);
}

FusionRing subring_restriction(const FusionRing& ring, const std::vector<std::size_t>& sub) {
    std::vector<std::size_t> closed = subring_generated(ring, sub);
    std::vector<std::size_t> sorted = sub;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (closed != sorted) throw NotClosedError();

    const std::size_t m = sorted.size();
    std::vector<std::size_t> back(ring.rank(), m);
    for (std::size_t a = 0; a < m; ++a) back[sorted[a]] = a;
    std::vector<std::string> labels;
    std::vector<std::size_t> dual(m);
    std::vector<std::int64_t> n(m * m * m, 0);
    for (std::size_t a = 0; a < m; ++a) {
        labels.push_back(ring.labels()[sorted[a]]);
        dual[a] = back[ring.dual(sorted[a])];
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c) n[(a * m + b) * m + c] = ring.n(sorted[a], sorted[b], sorted[c]);
    }
    return FusionRing::make(ring.name() + "-sub", std::move(labels), back[ring.unit()], std::move(dual),
                            std::move(n));
}

namespace {

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
    std::vector<std::size_t> parent;
};

}  // namespace

Grading universal_grading(const FusionRing& ring) {
    require_valid(ring);
    const std::size_t r = ring.rank();
    std::vector<std::size_t> adj = adjoint_subring(ring);

    UnionFind uf(r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t a : adj)
            for (std::size_t j = 0; j < r; ++j)
                if (ring.n(i, a, j) > 0) uf.unite(i, j);

    // components ordered with the unit's class first, then by least element
    std::vector<std::size_t> roots;
    for (std::size_t i = 0; i < r; ++i)
        if (uf.find(i) == i) roots.push_back(i);
    std::stable_sort(roots.begin(), roots.end(), [&](std::size_t a, std::size_t b) {
        bool ua = (uf.find(ring.unit()) == a), ub = (uf.find(ring.unit()) == b);
        if (ua != ub) return ua;
        return a < b;
    });
    std::vector<std::size_t> class_of_root(r);
    for (std::size_t c = 0; c < roots.size(); ++c) class_of_root[roots[c]] = c;

    Grading g;
    g.group_order = roots.size();
    g.assignment.resize(r);
    g.components.resize(g.group_order);
    for (std::size_t i = 0; i < r; ++i) {
        g.assignment[i] = class_of_root[uf.find(i)];
        g.components[g.assignment[i]].push_back(i);
    }

    // the trivial component must be exactly the adjoint subring's span
    for (std::size_t a : adj)
        if (g.assignment[a] != 0)
            throw NotAGradingError("adjoint subring is not contained in the trivial component", {a});

    g.group_table.assign(g.group_order, std::vector<std::size_t>(g.group_order, g.group_order));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            for (std::size_t k = 0; k < r; ++k) {
                if (ring.n(i, j, k) == 0) continue;
                std::size_t& cell = g.group_table[g.assignment[i]][g.assignment[j]];
                if (cell == g.group_order)
                    cell = g.assignment[k];
                else if (cell != g.assignment[k])
                    throw NotAGradingError("class product is not a single class", {i, j, k});
            }
        }
    for (std::size_t a = 0; a < g.group_order; ++a)
        for (std::size_t b = 0; b < g.group_order; ++b)
            if (g.group_table[a][b] == g.group_order)
                throw NotAGradingError("class product undefined", {a, b});

    // group axioms on the component table
    for (std::size_t a = 0; a < g.group_order; ++a) {
        if (g.group_table[0][a] != a || g.group_table[a][0] != a)
            throw NotAGradingError("trivial component is not an identity", {a});
        bool has_inverse = false;
        for (std::size_t b = 0; b < g.group_order; ++b)
            if (g.group_table[a][b] == 0 && g.group_table[b][a] == 0) has_inverse = true;
        if (!has_inverse) throw NotAGradingError("component without inverse", {a});
        for (std::size_t b = 0; b < g.group_order; ++b)
            for (std::size_t c = 0; c < g.group_order; ++c)
                if (g.group_table[g.group_table[a][b]][c] != g.group_table[a][g.group_table[b][c]])
                    throw NotAGradingError("component table not associative", {a, b, c});
    }
    // duality maps a component to its inverse
    for (std::size_t i = 0; i < r; ++i)
        if (g.group_table[g.assignment[i]][g.assignment[ring.dual(i)]] != 0)
            throw NotAGradingError("dual component is not the group inverse", {i});
    return g;
}

FusionRing tensor_product(const FusionRing& a, const FusionRing& b) {
    require_valid(a);
    require_valid(b);
    const std::size_t ra = a.rank(), rb = b.rank(), r = ra * rb;
    std::vector<std::string> labels;
    labels.reserve(r);
    std::vector<std::size_t> dual(r);
    auto idx = [&](std::size_t i, std::size_t x) { return i * rb + x; };
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t x = 0; x < rb; ++x) {
            labels.push_back(a.labels()[i] + "*" + b.labels()[x]);
            dual[idx(i, x)] = idx(a.dual(i), b.dual(x));
        }
    std::vector<std::int64_t> n(r * r * r, 0);
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < ra; ++j)
            for (std::size_t k = 0; k < ra; ++k) {
                std::int64_t na = a.n(i, j, k);
                if (!na) continue;
                for (std::size_t x = 0; x < rb; ++x)
                    for (std::size_t y = 0; y < rb; ++y)
                        for (std::size_t z = 0; z < rb; ++z) {
                            std::int64_t nb = b.n(x, y, z);
                            if (!nb) continue;
                            n[(idx(i, x) * r + idx(j, y)) * r + idx(k, z)] = na * nb;
                        }
            }
    FusionRing prod = FusionRing::make(a.name() + "x" + b.name(), std::move(labels),
                                       idx(a.unit(), b.unit()), std::move(dual), std::move(n));
    // FP dimension multiplicativity, numerically
    Real256 da = fpdims(a).ring_dim.numeric(), db = fpdims(b).ring_dim.numeric();
    Real256 dp = fpdims(prod).ring_dim.numeric();
    if (abs(da * db - dp) > Real256::pow10(-9))
        throw InvalidRingError("tensor product FP dimension is not multiplicative");
    return prod;
}

}  // namespace fusionkit
