#ifndef FUSIONKIT_FUSION_RING_HPP
#define FUSIONKIT_FUSION_RING_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "fusionkit/algebraic.hpp"

namespace fusionkit {

struct IndexOutOfRangeError : Error {
    IndexOutOfRangeError() : Error("basis index out of range") {}
};
struct InvalidRingError : Error {
    explicit InvalidRingError(const std::string& what) : Error("invalid fusion ring: " + what) {}
};
struct NotCommutativeError : Error {
    NotCommutativeError() : Error("ring is not commutative") {}
};
struct DegenerateSpectrumError : Error {
    explicit DegenerateSpectrumError(const std::string& what) : Error("degenerate spectrum: " + what) {}
};
struct NotAGradingError : Error {
    NotAGradingError(const std::string& what, std::vector<std::size_t> w)
        : Error("no universal grading: " + what), witness(std::move(w)) {}
    std::vector<std::size_t> witness;
};
struct NotClosedError : Error {
    NotClosedError() : Error("index set is not a closed sub-basis") {}
};

// Unital based ring of finite rank: basis b_0..b_{r-1}, nonnegative integer
// structure constants N[i][j][k] (multiplicity of b_k in b_i * b_j), a unit
// basis element and a duality involution.
class FusionRing {
  public:
    // Validates shape only (sizes, index ranges, nonnegative entries);
    // the ring axioms are the business of validate().
    static FusionRing make(std::string name, std::vector<std::string> labels, std::size_t unit,
                           std::vector<std::size_t> dual, std::vector<std::int64_t> n_flat);

    const std::string& name() const { return name_; }
    std::size_t rank() const { return rank_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t unit() const { return unit_; }
    std::size_t dual(std::size_t i) const { return dual_.at(i); }
    const std::vector<std::size_t>& duals() const { return dual_; }
    std::int64_t n(std::size_t i, std::size_t j, std::size_t k) const {
        return n_[(i * rank_ + j) * rank_ + k];
    }
    const std::vector<std::int64_t>& n_flat() const { return n_; }

    bool same_fusion_rules(const FusionRing& other) const {
        return rank_ == other.rank_ && unit_ == other.unit_ && dual_ == other.dual_ && n_ == other.n_;
    }

  private:
    std::string name_;
    std::size_t rank_ = 0;
    std::vector<std::string> labels_;
    std::size_t unit_ = 0;
    std::vector<std::size_t> dual_;
    std::vector<std::int64_t> n_;
};

struct AxiomViolation {
    std::string axiom;
    std::vector<std::size_t> where;
    std::string detail;
};
using ValidationReport = std::vector<AxiomViolation>;

// Empty report means the ring satisfies all based-ring axioms.
ValidationReport validate(const FusionRing& ring);
void require_valid(const FusionRing& ring);

// Matrix of multiplication by b_i: entry (k, j) = N[i][k][j], so the vector
// of Frobenius-Perron dimensions is a right eigenvector.
IntMatrix mult_matrix(const FusionRing& ring, std::size_t i);

struct FPData {
    std::vector<AlgebraicReal> dims;    // lambda_i
    AlgebraicReal ring_dim;             // sum of lambda_i^2
    std::vector<AlgebraicReal> regular; // coefficients of the regular element
    bool homomorphism_exact = false;    // identity lambda_i lambda_j = sum N lambda_k checked in Q(zeta_n)
    double homomorphism_residual = 0.0; // max numeric residual of the same identity
};
FPData fpdims(const FusionRing& ring);

// Coefficient vector of z = sum_j sum_i b_i b_j b_i^*; checked central and
// strictly positive.
std::vector<BigInt> central_element_z(const FusionRing& ring);

struct Characters {
    // one row per algebra homomorphism K ⊗ C -> C, entries indexed by basis
    std::vector<std::vector<std::complex<double>>> table;
    std::size_t fp_index = 0;  // the all-positive (Frobenius-Perron) row
};
Characters characters(const FusionRing& ring, double tol = 1e-9);

bool is_commutative(const FusionRing& ring);
bool is_pointed(const FusionRing& ring);

std::vector<std::size_t> subring_generated(const FusionRing& ring, const std::vector<std::size_t>& seeds);
std::vector<std::size_t> adjoint_subring(const FusionRing& ring);
// The based ring on a closed sub-basis; throws NotClosedError otherwise.
FusionRing subring_restriction(const FusionRing& ring, const std::vector<std::size_t>& sub);

struct Grading {
    std::size_t group_order = 1;
    std::vector<std::vector<std::size_t>> group_table;  // component indices; identity is 0
    std::vector<std::size_t> assignment;                // basis index -> component
    std::vector<std::vector<std::size_t>> components;   // component -> basis indices
};
// Universal grading at the ring level: components are the orbits of the
// adjoint subring action; throws NotAGradingError when class products are
// not single classes.
Grading universal_grading(const FusionRing& ring);

FusionRing tensor_product(const FusionRing& a, const FusionRing& b);

// x * y in the basis, exact.
std::vector<BigInt> multiply_elements(const FusionRing& ring, const std::vector<BigInt>& x,
                                      const std::vector<BigInt>& y);

}  // namespace fusionkit

#endif
