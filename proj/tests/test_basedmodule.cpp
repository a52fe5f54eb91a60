#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fusionkit/based_module.hpp"

using namespace fusionkit;

namespace {

FusionRing fibonacci() {
    std::vector<std::int64_t> n = {1, 0, 0, 1, 0, 1, 1, 1};
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

FusionRing z2() {
    std::vector<std::int64_t> n = {1, 0, 0, 1, 0, 1, 1, 0};
    return FusionRing::make("z2", {"e", "g"}, 0, {0, 1}, n);
}

// 1 and eps act as identity, sigma acts by [[0,2],[1,0]]
BasedModule ising_two_element_module() {
    std::vector<std::int64_t> m = {
        1, 0, 0, 1,  // 1
        1, 0, 0, 1,  // eps
        0, 2, 1, 0,  // sigma
    };
    return BasedModule::make(ising(), 2, std::move(m));
}

}  // namespace

TEST_CASE("regular modules validate and are indecomposable") {
    for (const FusionRing& ring : {fibonacci(), ising(), z2()}) {
        ModuleValidation v = validate_module(regular_module(ring));
        CHECK(v.violations.empty());
        CHECK(v.indecomposable);
    }
}

TEST_CASE("direct sums are decomposable") {
    BasedModule sum = direct_sum(regular_module(fibonacci()), regular_module(fibonacci()));
    ModuleValidation v = validate_module(sum);
    CHECK(v.violations.empty());
    CHECK_FALSE(v.indecomposable);
    CHECK_THROWS_AS(fp_vector(sum), DecomposableError);
}

TEST_CASE("the two-element ising module validates") {
    ModuleValidation v = validate_module(ising_two_element_module());
    CHECK(v.violations.empty());
    CHECK(v.indecomposable);
}

TEST_CASE("a broken module action is reported") {
    std::vector<std::int64_t> m = {
        1, 0, 0, 1,  // 1
        1, 0, 0, 1,  // eps
        0, 1, 1, 0,  // sigma: sigma^2 would act as I, but N says 1 + eps
    };
    BasedModule bad = BasedModule::make(ising(), 2, std::move(m));
    ModuleValidation v = validate_module(bad);
    CHECK(!v.violations.empty());
    CHECK(v.violations.front().axiom == "module-associativity");
}

TEST_CASE("fp vector of regular modules is the dimension vector") {
    FusionRing fib = fibonacci();
    std::vector<AlgebraicReal> v = fp_vector(regular_module(fib));
    FPData fp = fpdims(fib);
    REQUIRE(v.size() == 2);
    CHECK(v[0].is_rational());
    CHECK(*v[0].rational_value() == 1);
    CHECK(compare(v[1], fp.dims[1]) == 0);

    std::vector<AlgebraicReal> vz = fp_vector(regular_module(z2()));
    for (const auto& e : vz) {
        CHECK(e.is_rational());
        CHECK(*e.rational_value() == 1);
    }

    FusionRing trivial = FusionRing::make("1", {"1"}, 0, {0}, {1});
    std::vector<AlgebraicReal> vt = fp_vector(regular_module(trivial));
    REQUIRE(vt.size() == 1);
    CHECK(*vt[0].rational_value() == 1);
}

TEST_CASE("fp vector of the two-element ising module") {
    std::vector<AlgebraicReal> v = fp_vector(ising_two_element_module());
    REQUIRE(v.size() == 2);
    // (sqrt2, 1) after min-entry normalization
    CHECK(v[1].is_rational());
    CHECK(*v[1].rational_value() == 1);
    CHECK(v[0].to_double() == doctest::Approx(1.4142135623730951));
    REQUIRE(v[0].certified_min_poly().has_value());
    CHECK(*v[0].certified_min_poly() == IntPolynomial{-2, 0, 1});
}
