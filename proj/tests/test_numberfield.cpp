#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fusionkit/algebraic.hpp"
#include "fusionkit/cyclotomic.hpp"
#include "fusionkit/polynomial.hpp"
#include "fusionkit/roots.hpp"

using namespace fusionkit;

namespace {

CyclotomicNumber zeta(unsigned long n, long k = 1) { return CyclotomicNumber::zeta(n, k); }

// (1+sqrt(5))/2 = 1 + z5 + z5^4
CyclotomicNumber golden_ratio() { return CyclotomicNumber(1L) + zeta(5, 1) + zeta(5, 4); }

CyclotomicNumber random_element(std::mt19937_64& rng, unsigned long conductor, bool integral) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<BigRational> coeffs;
    for (unsigned long i = 0; i < euler_phi(conductor); ++i)
        coeffs.push_back(integral ? BigRational(num(rng)) : make_rational(num(rng), den(rng)));
    return CyclotomicNumber::from_coeffs(conductor, std::move(coeffs));
}

}  // namespace

TEST_CASE("cyclotomic arithmetic basics") {
    CHECK(cyclo_arith(zeta(4), zeta(4), CycloOp::mul) == CyclotomicNumber(-1L));
    CHECK(zeta(4).conductor() == 4);

    CyclotomicNumber sum = (zeta(5, 1) + zeta(5, 4)) + (zeta(5, 2) + zeta(5, 3));
    CHECK(sum == CyclotomicNumber(-1L));

    CyclotomicNumber a = CyclotomicNumber(1L) + zeta(3);
    CHECK(cyclo_arith(a, a, CycloOp::div) == CyclotomicNumber(1L));

    CHECK_THROWS_AS(a / CyclotomicNumber::zero(3), DivisionByZeroError);

    // mixed conductors embed into the lcm
    CyclotomicNumber m = zeta(3) * zeta(4);
    CHECK(m.conductor() == 12);
    CHECK(m == zeta(12, 7));
}

TEST_CASE("galois conjugates") {
    auto conj3 = galois_conjugates(zeta(3));
    REQUIRE(conj3.size() == 2);
    CHECK(conj3[0] == zeta(3, 1));
    CHECK(conj3[1] == zeta(3, 2));

    auto conj_rat = galois_conjugates(CyclotomicNumber(7L));
    REQUIRE(conj_rat.size() == 1);
    CHECK(conj_rat[0] == CyclotomicNumber(7L));

    CyclotomicNumber a = zeta(5, 1) + zeta(5, 4);
    auto orbit = distinct_conjugates(a);
    REQUIRE(orbit.size() == 2);
    CHECK(orbit[0] == a);
    CHECK(orbit[1] == zeta(5, 2) + zeta(5, 3));

    // conjugation closure: any sigma_m permutes the conjugate multiset
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 20; ++trial) {
        CyclotomicNumber x = random_element(rng, 12, false);
        auto all = galois_conjugates(x);
        for (unsigned long m : units_mod(12)) {
            for (const auto& c : all) {
                auto mapped = c.galois(m);
                CHECK(std::count(all.begin(), all.end(), mapped) >= 1);
            }
        }
    }
}

TEST_CASE("complex conjugation entry") {
    auto conj = galois_conjugates(zeta(5));
    // entries follow units (1, then 2, 3, 4); m = n-1 is complex conjugation
    CHECK(conj[3] == zeta(5, 4));
    CHECK(conj[3] == zeta(5).conj());
    CHECK((zeta(5) * zeta(5).conj()) == CyclotomicNumber(1L));
}

TEST_CASE("algebraic integer test") {
    CHECK(is_algebraic_integer(golden_ratio()));
    auto mp = min_poly_over_q(golden_ratio());
    REQUIRE(mp.size() == 3);
    CHECK(mp[0] == -1);
    CHECK(mp[1] == -1);
    CHECK(mp[2] == 1);

    CHECK_FALSE(is_algebraic_integer(CyclotomicNumber(make_rational(1, 2))));

    // (3 - sqrt(5))/2 = 1 - z5 - z5^4, min poly x^2 - 3x + 1
    CyclotomicNumber b = CyclotomicNumber(1L) - zeta(5, 1) - zeta(5, 4);
    CHECK(is_algebraic_integer(b));
    auto mpb = min_poly_over_q(b);
    REQUIRE(mpb.size() == 3);
    CHECK(mpb[0] == 1);
    CHECK(mpb[1] == -3);
    CHECK(mpb[2] == 1);

    // closure under products on Z[zeta_n] samples
    std::mt19937_64 rng(777);
    for (unsigned long n : {3ul, 4ul, 5ul, 8ul}) {
        for (int trial = 0; trial < 8; ++trial) {
            CyclotomicNumber x = random_element(rng, n, true);
            CyclotomicNumber y = random_element(rng, n, true);
            CHECK(is_algebraic_integer(x * y));
        }
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(424242);
    const unsigned long conductors[] = {1, 3, 4, 5, 8, 12};
    for (int trial = 0; trial < 60; ++trial) {
        unsigned long n = conductors[trial % 6];
        CyclotomicNumber a = random_element(rng, n, false);
        CyclotomicNumber b = random_element(rng, 12 / std::gcd(12ul, n) * n % 13 == 0 ? n : n, false);
        CyclotomicNumber c = random_element(rng, n, false);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == CyclotomicNumber(1L));
    }
}

TEST_CASE("normalization finds the minimal conductor") {
    CyclotomicNumber z6 = zeta(6);
    CyclotomicNumber reduced = z6.normalized();
    CHECK(reduced.conductor() == 3);
    CHECK(reduced == z6);

    CyclotomicNumber five = zeta(20, 4) + zeta(20, 16);  // z5 + z5^4 embedded at 20
    CHECK(five.normalized().conductor() == 5);

    CHECK(CyclotomicNumber(3L).embedded(8).normalized().conductor() == 1);
}

TEST_CASE("sqrt of integer via Gauss sums") {
    for (long d : {2L, 3L, 5L, 6L, 7L, 10L, 13L, 12L}) {
        CyclotomicNumber r = sqrt_of_integer(BigInt(d));
        CHECK((r * r) == CyclotomicNumber(BigRational(d)));
        CHECK(r.numeric().re.sign() > 0);
        CHECK(r.numeric().im.to_double() == doctest::Approx(0.0).epsilon(1e-30));
    }
    CHECK(sqrt_of_integer(BigInt(4)) == CyclotomicNumber(2L));
}

TEST_CASE("char poly") {
    IntMatrix fib{{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(1)}};
    CHECK(char_poly(fib) == IntPolynomial{-1, -1, 1});

    IntMatrix id3{{BigInt(1), BigInt(0), BigInt(0)},
                  {BigInt(0), BigInt(1), BigInt(0)},
                  {BigInt(0), BigInt(0), BigInt(1)}};
    CHECK(char_poly(id3) == IntPolynomial{-1, 3, -3, 1});

    IntMatrix zero1{{BigInt(0)}};
    CHECK(char_poly(zero1) == IntPolynomial{0, 1});
}

TEST_CASE("char poly of block diagonal is the product of blocks") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> entry(-3, 5);
    for (int trial = 0; trial < 10; ++trial) {
        IntMatrix a(2, std::vector<BigInt>(2)), b(3, std::vector<BigInt>(3));
        for (auto& row : a)
            for (auto& v : row) v = entry(rng);
        for (auto& row : b)
            for (auto& v : row) v = entry(rng);
        IntMatrix block(5, std::vector<BigInt>(5, BigInt(0)));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) block[i][j] = a[i][j];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) block[2 + i][2 + j] = b[i][j];
        CHECK(char_poly(block) == mul(char_poly(a), char_poly(b)));
    }
}

TEST_CASE("perron root of the fibonacci matrix") {
    IntMatrix fib{{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(1)}};
    AlgebraicReal phi = perron_root(fib);
    CHECK(phi.to_double() == doctest::Approx(1.6180339887498949).epsilon(1e-12));
    CHECK(phi.upper() - phi.lower() <= make_rational(1, 1000000000000L));
    REQUIRE(phi.certified_min_poly().has_value());
    CHECK(*phi.certified_min_poly() == IntPolynomial{-1, -1, 1});
    // interval brackets a sign change of the certified factor
    CHECK(sign_at(*phi.certified_min_poly(), phi.lower()) * sign_at(*phi.certified_min_poly(), phi.upper()) < 0);
    REQUIRE(phi.exact().has_value());
    CHECK(*phi.exact() == golden_ratio());
}

TEST_CASE("perron root rational cases") {
    AlgebraicReal two = perron_root(IntMatrix{{BigInt(2)}});
    CHECK(two.is_rational_integer());
    CHECK(*two.rational_value() == 2);

    IntMatrix ones(3, std::vector<BigInt>(3, BigInt(1)));
    AlgebraicReal three = perron_root(ones);
    CHECK(three.is_rational());
    CHECK(*three.rational_value() == 3);

    IntMatrix nil{{BigInt(0), BigInt(1)}, {BigInt(0), BigInt(0)}};
    CHECK_THROWS_AS(perron_root(nil), NilpotentInputError);
}

TEST_CASE("perron root dominates all numeric eigenvalues") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<long> entry(0, 4);
    for (int trial = 0; trial < 12; ++trial) {
        IntMatrix m(4, std::vector<BigInt>(4));
        bool any = false;
        for (auto& row : m)
            for (auto& v : row) {
                v = entry(rng);
                if (v > 0) any = true;
            }
        if (!any) m[0][0] = 1;
        IntPolynomial p = char_poly(m);
        bool nilpotent = true;
        for (int k = 0; k < p.degree(); ++k)
            if (p.coeffs()[k] != 0) nilpotent = false;
        if (nilpotent) continue;
        AlgebraicReal lam = perron_root(m);
        double lv = lam.to_double();
        for (const auto& root : complex_roots(squarefree_part(p)))
            CHECK(lv + 1e-9 >= root.abs().to_double());
    }
}

TEST_CASE("cyclotomic lift") {
    AlgebraicReal phi = perron_root(IntMatrix{{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(1)}});
    auto lifted = cyclotomic_lift(phi, {5});
    REQUIRE(lifted.has_value());
    CHECK(*lifted == golden_ratio());
    CHECK(lifted->conductor() == 5);

    CHECK_FALSE(cyclotomic_lift(phi, {3}).has_value());

    // sqrt(2) as the perron root of [[0,2],[1,0]]
    AlgebraicReal rt2 = perron_root(IntMatrix{{BigInt(0), BigInt(2)}, {BigInt(1), BigInt(0)}});
    auto lifted2 = cyclotomic_lift(rt2, {8});
    REQUIRE(lifted2.has_value());
    CHECK((*lifted2 * *lifted2) == CyclotomicNumber(2L));
    CHECK(*lifted2 == zeta(8, 1) + zeta(8, -1));
}

TEST_CASE("algebraic real comparison") {
    AlgebraicReal phi = perron_root(IntMatrix{{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(1)}});
    AlgebraicReal phi2 = perron_root(IntMatrix{{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(1)}});
    CHECK(phi == phi2);
    CHECK(phi != AlgebraicReal::from_int(2));
    CHECK(phi < AlgebraicReal::from_int(2));
    CHECK(AlgebraicReal::from_int(1) < phi);
    CHECK(phi.compare_rational(make_rational(1618, 1000)) > 0);
    CHECK(phi.compare_rational(make_rational(1619, 1000)) < 0);
    CHECK(phi.compare_rational(make_rational(1617, 1000)) > 0);

    AlgebraicReal rt2 = perron_root(IntMatrix{{BigInt(0), BigInt(2)}, {BigInt(1), BigInt(0)}});
    CHECK(rt2 < phi);
}

TEST_CASE("ratio of algebraic reals") {
    // ((5+sqrt5)/2) / ((1+sqrt5)/2) = sqrt5
    IntMatrix b{{BigInt(2), BigInt(1)}, {BigInt(1), BigInt(3)}};
    AlgebraicReal ring_dim = perron_root(b);
    AlgebraicReal phi = perron_root(IntMatrix{{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(1)}});
    auto r = ratio(ring_dim, phi);
    REQUIRE(r.has_value());
    CHECK(r->to_double() == doctest::Approx(2.2360679774997896).epsilon(1e-10));
    REQUIRE(r->certified_min_poly().has_value());
    CHECK(*r->certified_min_poly() == IntPolynomial{-5, 0, 1});
    CHECK(algebraic_integer_flag(*r) == std::optional<bool>(true));

    auto half = ratio(AlgebraicReal::from_int(1), AlgebraicReal::from_int(2));
    REQUIRE(half.has_value());
    CHECK(algebraic_integer_flag(*half) == std::optional<bool>(false));
}

TEST_CASE("scaled algebraic real") {
    AlgebraicReal phi = perron_root(IntMatrix{{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(1)}});
    AlgebraicReal half_phi = phi.scaled(make_rational(1, 2));
    CHECK(half_phi.to_double() == doctest::Approx(0.80901699437).epsilon(1e-9));
    CHECK(algebraic_integer_flag(half_phi.certified()) == std::optional<bool>(false));
}

TEST_CASE("sturm counting") {
    IntPolynomial p{-1, -1, 1};  // roots (1±sqrt5)/2
    SturmSequence s(p);
    CHECK(s.count_roots(make_rational(-2), make_rational(2)) == 2);
    CHECK(s.count_roots(make_rational(0), make_rational(2)) == 1);
    CHECK(s.count_roots(make_rational(2), make_rational(9)) == 0);
}

TEST_CASE("polynomial utilities") {
    IntPolynomial p{-2, 0, 2};  // 2x^2 - 2
    CHECK(content(p) == 2);
    CHECK(primitive_part(p) == IntPolynomial{-1, 0, 1});
    CHECK(squarefree_part(mul(p, p)) == IntPolynomial{-1, 0, 1});
    CHECK(to_string(IntPolynomial{-1, -1, 1}) == "x^2 - x - 1");
    CHECK(to_string(IntPolynomial{}) == "0");
    auto q = divide_exact(IntPolynomial{-1, 0, 1}, IntPolynomial{1, 1});
    REQUIRE(q.has_value());
    CHECK(*q == IntPolynomial{-1, 1});
    CHECK_FALSE(divide_exact(IntPolynomial{-1, 0, 1}, IntPolynomial{2, 1}).has_value());
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == IntPolynomial{-1, 1});
    CHECK(cyclotomic_polynomial(2) == IntPolynomial{1, 1});
    CHECK(cyclotomic_polynomial(5) == IntPolynomial{1, 1, 1, 1, 1});
    CHECK(cyclotomic_polynomial(8) == IntPolynomial{1, 0, 0, 0, 1});
    CHECK(cyclotomic_polynomial(12) == IntPolynomial{1, 0, -1, 0, 1});
}
