#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fusionkit/fusion_ring.hpp"

using namespace fusionkit;

namespace {

FusionRing fibonacci() {
    // tau * tau = 1 + tau
    std::vector<std::int64_t> n = {
        1, 0, 0, 1,  // 1*1, 1*tau
        0, 1, 1, 1,  // tau*1, tau*tau
    };
    return FusionRing::make("fibonacci", {"1", "tau"}, 0, {0, 1}, n);
}

FusionRing ising() {
    auto idx = [](std::size_t i, std::size_t j, std::size_t k) { return (i * 3 + j) * 3 + k; };
    std::vector<std::int64_t> n(27, 0);
    auto set = [&](std::size_t i, std::size_t j, std::initializer_list<std::size_t> ks) {
        for (std::size_t k : ks) n[idx(i, j, k)] = 1;
    };
    set(0, 0, {0});
    set(0, 1, {1});
    set(0, 2, {2});
    set(1, 0, {1});
    set(1, 1, {0});
    set(1, 2, {2});
    set(2, 0, {2});
    set(2, 1, {2});
    set(2, 2, {0, 1});
    return FusionRing::make("ising", {"1", "eps", "sigma"}, 0, {0, 1, 2}, n);
}

FusionRing cyclic_group_ring(std::size_t order, const std::string& name) {
    std::vector<std::string> labels;
    std::vector<std::size_t> dual(order);
    std::vector<std::int64_t> n(order * order * order, 0);
    for (std::size_t g = 0; g < order; ++g) {
        labels.push_back("g" + std::to_string(g));
        dual[g] = (order - g) % order;
        for (std::size_t h = 0; h < order; ++h) n[(g * order + h) * order + (g + h) % order] = 1;
    }
    return FusionRing::make(name, std::move(labels), 0, std::move(dual), std::move(n));
}

FusionRing s3_group_ring() {
    // permutations of {0,1,2} listed as images
    std::vector<std::array<int, 3>> elems = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                             {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    auto compose = [&](int a, int b) {
        std::array<int, 3> c;
        for (int i = 0; i < 3; ++i) c[i] = elems[a][elems[b][i]];
        for (std::size_t k = 0; k < elems.size(); ++k)
            if (elems[k] == c) return static_cast<int>(k);
        return -1;
    };
    const std::size_t r = 6;
    std::vector<std::string> labels;
    std::vector<std::size_t> dual(r);
    std::vector<std::int64_t> n(r * r * r, 0);
    for (std::size_t g = 0; g < r; ++g) {
        labels.push_back("s" + std::to_string(g));
        for (std::size_t h = 0; h < r; ++h) {
            int gh = compose(static_cast<int>(g), static_cast<int>(h));
            n[(g * r + h) * r + gh] = 1;
            if (gh == 0) dual[g] = h;
        }
    }
    return FusionRing::make("s3", std::move(labels), 0, std::move(dual), std::move(n));
}

CyclotomicNumber golden() { return CyclotomicNumber(1L) + CyclotomicNumber::zeta(5, 1) + CyclotomicNumber::zeta(5, 4); }

}  // namespace

TEST_CASE("validate accepts the catalog examples") {
    CHECK(validate(fibonacci()).empty());
    CHECK(validate(ising()).empty());
    CHECK(validate(cyclic_group_ring(2, "z2")).empty());
    CHECK(validate(s3_group_ring()).empty());
}

TEST_CASE("validate pinpoints a duality violation") {
    std::vector<std::int64_t> n = {
        1, 0, 0, 1,  //
        0, 1, 2, 1,  // tau*tau contains the unit twice
    };
    FusionRing broken = FusionRing::make("broken", {"1", "tau"}, 0, {0, 1}, n);
    ValidationReport report = validate(broken);
    REQUIRE(!report.empty());
    bool found = false;
    for (const auto& violation : report)
        if (violation.axiom == "duality" && violation.where == std::vector<std::size_t>{1, 1, 0}) found = true;
    CHECK(found);
}

TEST_CASE("mult matrix convention") {
    IntMatrix tau = mult_matrix(fibonacci(), 1);
    CHECK(tau == IntMatrix{{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(1)}});

    IntMatrix unit = mult_matrix(ising(), 0);
    CHECK(unit == IntMatrix{{BigInt(1), BigInt(0), BigInt(0)},
                            {BigInt(0), BigInt(1), BigInt(0)},
                            {BigInt(0), BigInt(0), BigInt(1)}});

    IntMatrix sigma = mult_matrix(ising(), 2);
    CHECK(sigma == IntMatrix{{BigInt(0), BigInt(0), BigInt(1)},
                             {BigInt(0), BigInt(0), BigInt(1)},
                             {BigInt(1), BigInt(1), BigInt(0)}});

    CHECK_THROWS_AS(mult_matrix(fibonacci(), 5), IndexOutOfRangeError);
}

TEST_CASE("fpdims of fibonacci") {
    FPData fp = fpdims(fibonacci());
    REQUIRE(fp.dims.size() == 2);
    CHECK(fp.dims[0].is_rational());
    CHECK(*fp.dims[0].rational_value() == 1);
    CHECK(fp.dims[1].to_double() == doctest::Approx(1.6180339887498949));
    REQUIRE(fp.dims[1].exact().has_value());
    CHECK(*fp.dims[1].exact() == golden());

    // ring dim (5+sqrt5)/2 = 3 + z5 + z5^4, min poly x^2-5x+5
    CHECK(fp.ring_dim.to_double() == doctest::Approx(3.6180339887498949));
    REQUIRE(fp.ring_dim.certified_min_poly().has_value());
    CHECK(*fp.ring_dim.certified_min_poly() == IntPolynomial{5, -5, 1});
    REQUIRE(fp.ring_dim.exact().has_value());
    CHECK(*fp.ring_dim.exact() ==
          CyclotomicNumber(3L) + CyclotomicNumber::zeta(5, 1) + CyclotomicNumber::zeta(5, 4));

    CHECK(fp.homomorphism_exact);
    CHECK(fp.homomorphism_residual < 1e-9);
    CHECK(fp.regular.size() == 2);
    CHECK(compare(fp.regular[1], fp.dims[1]) == 0);
}

TEST_CASE("fpdims of group rings and ising") {
    FPData z2 = fpdims(cyclic_group_ring(2, "z2"));
    for (const auto& d : z2.dims) CHECK(d.is_rational_integer());
    CHECK(*z2.ring_dim.rational_value() == 2);

    FPData is = fpdims(ising());
    CHECK(is.dims[2].to_double() == doctest::Approx(1.4142135623730951));
    REQUIRE(is.dims[2].certified_min_poly().has_value());
    CHECK(*is.dims[2].certified_min_poly() == IntPolynomial{-2, 0, 1});
    CHECK(*is.ring_dim.rational_value() == 4);
    CHECK(is.homomorphism_exact);

    // lambda_i >= 1 everywhere
    for (const auto& d : is.dims) CHECK(d.compare_rational(BigRational(1)) >= 0);
}

TEST_CASE("central element z") {
    FusionRing trivial = FusionRing::make("1", {"1"}, 0, {0}, {1});
    CHECK(central_element_z(trivial) == std::vector<BigInt>{BigInt(1)});

    CHECK(central_element_z(cyclic_group_ring(2, "z2")) == std::vector<BigInt>{BigInt(2), BigInt(2)});

    // brute-force oracle: z = sum_{i,j} b_i b_j b_i^*
    FusionRing fib = fibonacci();
    std::vector<BigInt> oracle(2, BigInt(0));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            std::vector<BigInt> bi(2, BigInt(0)), bj(2, BigInt(0)), bid(2, BigInt(0));
            bi[i] = 1;
            bj[j] = 1;
            bid[fib.dual(i)] = 1;
            auto prod = multiply_elements(fib, multiply_elements(fib, bi, bj), bid);
            for (std::size_t k = 0; k < 2; ++k) oracle[k] += prod[k];
        }
    std::vector<BigInt> z = central_element_z(fib);
    CHECK(z == oracle);
    CHECK(z == std::vector<BigInt>{BigInt(3), BigInt(4)});
    for (const auto& v : z) CHECK(v > 0);
}

TEST_CASE("characters of commutative rings") {
    Characters fib = characters(fibonacci());
    REQUIRE(fib.table.size() == 2);
    CHECK(fib.table[0][1].real() == doctest::Approx(-0.6180339887498949));
    CHECK(fib.table[1][1].real() == doctest::Approx(1.6180339887498949));
    CHECK(fib.fp_index == 1);

    Characters z2 = characters(cyclic_group_ring(2, "z2"));
    REQUIRE(z2.table.size() == 2);
    CHECK(z2.table[0][1].real() == doctest::Approx(-1.0));
    CHECK(z2.table[1][1].real() == doctest::Approx(1.0));
    CHECK(z2.fp_index == 1);

    Characters is = characters(ising());
    REQUIRE(is.table.size() == 3);
    CHECK(is.table[is.fp_index][2].real() == doctest::Approx(1.4142135623730951));

    CHECK_THROWS_AS(characters(s3_group_ring()), NotCommutativeError);
}

TEST_CASE("subring and adjoint computations") {
    FusionRing is = ising();
    CHECK(adjoint_subring(is) == std::vector<std::size_t>{0, 1});
    CHECK(adjoint_subring(cyclic_group_ring(4, "z4")) == std::vector<std::size_t>{0});
    CHECK(adjoint_subring(fibonacci()) == std::vector<std::size_t>{0, 1});

    CHECK(subring_generated(is, {1}) == std::vector<std::size_t>{0, 1});
    CHECK(subring_generated(is, {2}) == std::vector<std::size_t>{0, 1, 2});
    CHECK(subring_generated(is, {}) == std::vector<std::size_t>{0});

    // idempotent and monotone
    auto s1 = subring_generated(is, {1});
    CHECK(subring_generated(is, s1) == s1);

    FusionRing sub = subring_restriction(is, {0, 1});
    CHECK(sub.rank() == 2);
    CHECK(sub.same_fusion_rules(cyclic_group_ring(2, "z2")));
    CHECK_THROWS_AS(subring_restriction(is, {2}), NotClosedError);
}

TEST_CASE("universal grading") {
    Grading isg = universal_grading(ising());
    CHECK(isg.group_order == 2);
    CHECK(isg.components[0] == std::vector<std::size_t>{0, 1});
    CHECK(isg.components[1] == std::vector<std::size_t>{2});
    CHECK(isg.group_table == std::vector<std::vector<std::size_t>>{{0, 1}, {1, 0}});

    Grading fg = universal_grading(fibonacci());
    CHECK(fg.group_order == 1);

    Grading z4 = universal_grading(cyclic_group_ring(4, "z4"));
    CHECK(z4.group_order == 4);
    for (const auto& comp : z4.components) CHECK(comp.size() == 1);
}

TEST_CASE("tensor products") {
    FusionRing prod = tensor_product(fibonacci(), fibonacci());
    CHECK(prod.rank() == 4);
    FPData fp = fpdims(prod);
    // (15+5sqrt5)/2 = 10 + 5 z5 + 5 z5^4
    REQUIRE(fp.ring_dim.exact().has_value());
    CyclotomicNumber expected = CyclotomicNumber(10L) +
                                CyclotomicNumber(5L) * CyclotomicNumber::zeta(5, 1) +
                                CyclotomicNumber(5L) * CyclotomicNumber::zeta(5, 4);
    CHECK(*fp.ring_dim.exact() == expected);
    CHECK(fp.ring_dim.to_double() == doctest::Approx(13.090169943749475));

    FusionRing trivial = FusionRing::make("1", {"1"}, 0, {0}, {1});
    CHECK(tensor_product(trivial, fibonacci()).same_fusion_rules(fibonacci()));

    FusionRing klein = tensor_product(cyclic_group_ring(2, "a"), cyclic_group_ring(2, "b"));
    CHECK(klein.rank() == 4);
    CHECK(is_pointed(klein));
}

TEST_CASE("pointedness") {
    CHECK(is_pointed(cyclic_group_ring(5, "z5")));
    CHECK(is_pointed(s3_group_ring()));
    CHECK_FALSE(is_pointed(ising()));
    CHECK_FALSE(is_pointed(fibonacci()));
}
