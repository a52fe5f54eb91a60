#ifndef FUSIONKIT_BASED_MODULE_HPP
#define FUSIONKIT_BASED_MODULE_HPP

#include "fusionkit/fusion_ring.hpp"

namespace fusionkit {

struct DecomposableError : Error {
    DecomposableError() : Error("based module is decomposable") {}
};

// Based module over a fusion ring: M[i][a][b] is the multiplicity of m_b in
// b_i * m_a.
class BasedModule {
  public:
    static BasedModule make(FusionRing ring, std::size_t size, std::vector<std::int64_t> m_flat);

    const FusionRing& ring() const { return ring_; }
    std::size_t size() const { return size_; }
    std::int64_t m(std::size_t i, std::size_t a, std::size_t b) const {
        return m_[(i * size_ + a) * size_ + b];
    }
    const std::vector<std::int64_t>& m_flat() const { return m_; }

  private:
    FusionRing ring_ = FusionRing::make("1", {"1"}, 0, {0}, {1});
    std::size_t size_ = 0;
    std::vector<std::int64_t> m_;
};

struct ModuleValidation {
    ValidationReport violations;  // module axioms, exact
    bool indecomposable = false;  // strong connectivity of the action graph
};
ModuleValidation validate_module(const BasedModule& mod);

// The ring acting on itself.
BasedModule regular_module(const FusionRing& ring);
// Direct sum of two modules over the same ring.
BasedModule direct_sum(const BasedModule& a, const BasedModule& b);

// Strictly positive common eigenvector of the action matrices, eigenvalues
// the ring's FP dimensions, normalized so the minimum entry is 1. Entries
// are certified algebraic reals.
std::vector<AlgebraicReal> fp_vector(const BasedModule& mod);

}  // namespace fusionkit

#endif
