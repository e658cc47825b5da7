#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "frobcensus/errors.hpp"
#include "frobcensus/int_poly.hpp"
#include "frobcensus/int_utils.hpp"
#include "frobcensus/quad_elem.hpp"

using namespace frobcensus;

TEST_CASE("QuadElem basic arithmetic is exact") {
    const QuadElem x(5, mpq_class(1, 2), mpq_class(3, 2));
    CHECK(x.trace() == 1);
    CHECK(x.norm() == mpq_class(1, 4) - mpq_class(9, 4) * 5);
    CHECK(x.conjugate().b() == mpq_class(-3, 2));
    CHECK((x * x.conjugate()).is_rational());
    CHECK((x * x.conjugate()).a() == x.norm());
    CHECK((x + (-x)).is_zero());
    CHECK_THROWS_AS(QuadElem(12, 0, 1), invalid_input_error); // 12 not squarefree
    CHECK_THROWS_AS(QuadElem(1, 0, 1), invalid_input_error);
}

TEST_CASE("QuadElem sign under both embeddings") {
    CHECK(QuadElem(5, 2, 1).sign() == 1);
    CHECK(QuadElem(5, -2, -1).sign() == -1);
    CHECK(QuadElem(5, 0, 0).sign() == 0);
    // 3 - sqrt(5) > 0, 2 - sqrt(5) < 0
    CHECK(QuadElem(5, 3, -1).sign() == 1);
    CHECK(QuadElem(5, 2, -1).sign() == -1);
    // -3 + sqrt(5) < 0, -2 + sqrt(5) > 0
    CHECK(QuadElem(5, -3, 1).sign() == -1);
    CHECK(QuadElem(5, -2, 1).sign() == 1);
    CHECK(QuadElem(5, -3, 1).is_totally_negative()); // both -3 +/- sqrt(5) < 0
    CHECK_FALSE(QuadElem(5, -1, -1).is_totally_negative()); // conjugate -1 + sqrt(5) > 0
    CHECK_FALSE(QuadElem(5, 3, -1).is_totally_negative());
}

TEST_CASE("quad_sqrt examples") {
    // (2 + sqrt(5))^2 = 9 + 4 sqrt(5)
    const auto root = quad_sqrt(QuadElem(5, 9, 4));
    REQUIRE(root.has_value());
    CHECK(*root * *root == QuadElem(5, 9, 4));

    const auto r2 = quad_sqrt(QuadElem(5, 4, 0));
    REQUIRE(r2.has_value());
    CHECK(*r2 * *r2 == QuadElem(5, 4, 0));

    CHECK_FALSE(quad_sqrt(QuadElem(5, 0, 1)).has_value()); // N = -5, not a square
    CHECK(quad_sqrt(QuadElem(5, 0, 0)).has_value());

    // 5 = (sqrt 5)^2 is a square in Q(sqrt 5)
    const auto r5 = quad_sqrt(QuadElem(5, 5, 0));
    REQUIRE(r5.has_value());
    CHECK(*r5 == QuadElem(5, 0, 1));
}

TEST_CASE("quad_sqrt finds roots of 10^3 random squares") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 9);
    const long fields[] = {2, 3, 5, 7, 10, 13};
    int found = 0;
    while (found < 1000) {
        const long d = fields[static_cast<size_t>(found) % 6];
        const QuadElem y(d, mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
        if (y.is_zero()) continue;
        ++found;
        const QuadElem sq = y * y;
        const auto root = quad_sqrt(sq);
        REQUIRE(root.has_value());
        CHECK(*root * *root == sq); // exact re-squaring
    }
}

TEST_CASE("quad_sqrt rejects non-squares") {
    // A totally negative element is never a square in a real field.
    CHECK_FALSE(quad_sqrt(QuadElem(5, -3, -1)).has_value());
    CHECK_FALSE(quad_sqrt(QuadElem(2, 1, 1)).has_value()); // N = -1
}

TEST_CASE("power sums examples") {
    // x^2 - 3x + 2, roots 1 and 2
    const auto s = power_sums(IntPoly{2, -3, 1});
    CHECK(s[0] == 3);
    CHECK(s[1] == 5);

    // x - a: s_k = a^k
    const auto sa = power_sums(IntPoly{-7, 1}, 4);
    CHECK(sa[0] == 7);
    CHECK(sa[3] == 2401);

    // The Weil quartic x^4 - t1 x^3 + a2 x^2 - p t1 x + p^2 at (1, 2, 7)
    const auto sw = power_sums(IntPoly{49, -7, 2, -1, 1});
    CHECK(sw[0] == 1);
    CHECK(sw[1] == -3); // s2 = e1 s1 - 2 e2 = 1 - 4
}

TEST_CASE("Newton round-trip: 10^4 random monic polynomials of degree <= 8") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> coeff(-20, 20);
    std::uniform_int_distribution<int> deg(1, 8);
    for (int iter = 0; iter < 10'000; ++iter) {
        const int n = deg(rng);
        std::vector<mpz_class> c;
        for (int i = 0; i < n; ++i) c.emplace_back(coeff(rng));
        c.emplace_back(1);
        const IntPoly f{std::vector<mpz_class>(c)};
        CHECK(poly_from_power_sums(power_sums(f)) == f);
    }
}

TEST_CASE("power sums beyond the degree follow the recurrence") {
    const IntPoly f{2, -3, 1}; // roots 1, 2
    const auto s = power_sums(f, 6);
    CHECK(s[5] == 1 + 64); // 1^6 + 2^6
}

TEST_CASE("resultant and discriminant") {
    // disc(x^5 + 1) = 5^5
    std::vector<mpz_class> c(6, mpz_class(0));
    c[0] = 1;
    c[5] = 1;
    CHECK(discriminant(IntPoly(std::move(c))) == 3125);

    // disc(x^2 + bx + c) = b^2 - 4c
    CHECK(discriminant(IntPoly{3, 5, 1}) == 25 - 12);

    // Common root => resultant 0
    CHECK(resultant(IntPoly{-1, 1}, IntPoly{-1, 0, 1}) == 0);
    CHECK(resultant(IntPoly{-1, 1}, IntPoly{1, 1}) == 2);
}
