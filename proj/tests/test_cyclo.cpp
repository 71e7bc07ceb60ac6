#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "unispecht/cyclo.hpp"
#include "unispecht/errors.hpp"

using namespace unispecht;
using test::eval_poly;

namespace {

CycloProduct make(std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> factors) {
    CycloProduct p;
    for (auto [d, m] : factors)
        p.mul_phi(d, m);
    return p;
}

} // namespace

TEST_CASE("euler phi and divisors") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(15) == 8);
    CHECK(euler_phi(30) == 8);
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(1) == std::vector<std::uint64_t>{1});
}

TEST_CASE("cyclotomic product arithmetic") {
    CycloProduct p;
    p.mul_xn_minus_one(6);
    CHECK(p == make({{1, 1}, {2, 1}, {3, 1}, {6, 1}}));
    CHECK(p.degree() == 6);
    CHECK(p.str() == "Phi_1 * Phi_2 * Phi_3 * Phi_6");

    CycloProduct q = p;
    q.mul_xn_minus_one(3);
    q.divide_exact(p);
    CHECK(q == make({{1, 1}, {3, 1}}));
    CHECK(make({{1, 1}}).divides(p));
    CHECK_FALSE(make({{4, 1}}).divides(p));
    CHECK_THROWS_AS(q.divide_exact(make({{5, 1}})), internal_error);

    CHECK(CycloProduct{}.is_one());
    CHECK(CycloProduct{}.str() == "1");
    CHECK(make({{1, 2}}).str() == "Phi_1^2");
}

TEST_CASE("cyclotomic coefficients") {
    using V = std::vector<mpz_class>;
    CHECK(cyclotomic_coeffs(1) == V{-1, 1});
    CHECK(cyclotomic_coeffs(2) == V{1, 1});
    CHECK(cyclotomic_coeffs(5) == V{1, 1, 1, 1, 1});
    CHECK(cyclotomic_coeffs(6) == V{1, -1, 1});
    CHECK(cyclotomic_coeffs(12) == V{1, 0, -1, 0, 1});
}

TEST_CASE("expand multiplies the factors out") {
    CycloProduct p;
    p.mul_xn_minus_one(6);
    CHECK(expand(p) == std::vector<mpz_class>{-1, 0, 0, 0, 0, 0, 1});
    CHECK(polynomial_str(expand(p)) == "x^6 - 1");
    CHECK(polynomial_str(expand(CycloProduct{})) == "1");

    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        CycloProduct q;
        for (int i = 0; i < 4; ++i)
            q.mul_phi(rng() % 12 + 1, rng() % 3);
        std::vector<mpz_class> coeffs = expand(q);
        CHECK(mpz_class(coeffs.size() - 1) == q.degree());
        CHECK(coeffs.back() == 1);
    }
}

TEST_CASE("factored and expanded forms evaluate identically") {
    // (x^5-1)(x^3-1)^2(x^2-1) assembled as cyclotomic factors
    CycloProduct p;
    p.mul_xn_minus_one(5);
    p.mul_xn_minus_one(3, 2);
    p.mul_xn_minus_one(2);
    std::vector<mpz_class> coeffs = expand(p);
    for (int x = -3; x <= 3; ++x) {
        mpz_class direct = (mpz_class(x) * x * x * x * x - 1);
        mpz_class cube = mpz_class(x) * x * x - 1;
        direct *= cube * cube;
        direct *= mpz_class(x) * x - 1;
        CHECK(eval_poly(coeffs, x) == direct);
    }
}

TEST_CASE("negate_roots named values") {
    CHECK(negate_roots(make({{1, 1}, {4, 1}})) == make({{2, 1}, {4, 1}}));
    CHECK(negate_roots(make({{3, 1}, {5, 1}, {15, 1}})) == make({{6, 1}, {10, 1}, {30, 1}}));
}

TEST_CASE("negate_roots is the substitution x -> -x up to sign, and an involution") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        CycloProduct p;
        for (int i = 0; i < 4; ++i)
            p.mul_phi(rng() % 15 + 1, rng() % 2 + 1);
        CycloProduct flipped = negate_roots(p);
        CHECK(negate_roots(flipped) == p);
        CHECK(flipped.degree() == p.degree());

        std::vector<mpz_class> pc = expand(p);
        std::vector<mpz_class> fc = expand(flipped);
        // q(x) = +/- p(-x); both are monic, so compare at a few points
        mpz_class sign = (p.degree() % 2 == 0) ? 1 : -1;
        for (int x = -3; x <= 3; ++x)
            CHECK(eval_poly(fc, x) == sign * eval_poly(pc, -x));
    }
}
