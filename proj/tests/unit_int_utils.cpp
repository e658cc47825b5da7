#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "frobcensus/errors.hpp"
#include "frobcensus/int_utils.hpp"

using namespace frobcensus;

TEST_CASE("squarefree_part examples") {
    auto r = squarefree_part(12);
    CHECK(r.s == 3);
    CHECK(r.m == 2);
    r = squarefree_part(1);
    CHECK(r.s == 1);
    CHECK(r.m == 1);
    r = squarefree_part(-48);
    CHECK(r.s == -3);
    CHECK(r.m == 4);
    CHECK_THROWS_AS(squarefree_part(0), invalid_input_error);
}

TEST_CASE("squarefree_part round-trip on 10^4 random values") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> dist(-1'000'000, 1'000'000);
    int done = 0;
    while (done < 10'000) {
        const long n = dist(rng);
        if (n == 0) continue;
        ++done;
        const auto r = squarefree_part(n);
        CHECK(r.s * r.m * r.m == n);
        CHECK(r.m > 0);
        // s has no square factor: check by trial division.
        mpz_class s = abs(r.s);
        for (long d = 2; d * d <= s; ++d) {
            CHECK_FALSE(mpz_divisible_ui_p(s.get_mpz_t(), static_cast<unsigned long>(d * d)));
        }
    }
}

TEST_CASE("squarefree_part capacity") {
    // Two large primes beyond the trial bound cannot be certified.
    const mpz_class big = mpz_class("1000003") * mpz_class("1000033");
    CHECK_THROWS_AS(squarefree_part(big, 1000), capacity_error);
    // A prime square beyond bound^2 also fails ...
    const mpz_class p2 = mpz_class("1000003") * mpz_class("1000003");
    CHECK(squarefree_part(p2, 2000).s == 1); // root < bound^2: certified
    // ... and a single large prime below bound^2 is certified prime.
    CHECK(squarefree_part(mpz_class("999983"), 1000).s == 999983);
}

TEST_CASE("is_perfect_square") {
    mpz_class root;
    CHECK(is_perfect_square(49, &root));
    CHECK(root == 7);
    CHECK(is_perfect_square(0, &root));
    CHECK(root == 0);
    CHECK_FALSE(is_perfect_square(-4));
    CHECK_FALSE(is_perfect_square(2));
}

TEST_CASE("jacobi examples and domain") {
    CHECK(jacobi(2, 15) == 1);
    CHECK(jacobi(123456, 1) == 1);
    CHECK(jacobi(6, 3) == 0);
    CHECK_THROWS_AS(jacobi(3, 4), invalid_input_error);
    CHECK_THROWS_AS(jacobi(3, -5), invalid_input_error);
}

TEST_CASE("jacobi equals residue enumeration for all p <= 200") {
    for (int64_t p : primes_up_to(200)) {
        if (p == 2) continue;
        std::vector<int> residue(static_cast<size_t>(p), -1);
        residue[0] = 0;
        for (int64_t y = 1; y < p; ++y) residue[static_cast<size_t>(y * y % p)] = 1;
        for (int64_t a = 0; a < p; ++a) {
            CHECK(jacobi(a, p) == residue[static_cast<size_t>(a)]);
            CHECK(jacobi(mpz_class(a), mpz_class(p)) == residue[static_cast<size_t>(a)]);
        }
    }
}

TEST_CASE("jacobi multiplicativity in the modulus") {
    const auto primes = primes_up_to(50);
    for (size_t i = 1; i < primes.size(); ++i) {
        for (size_t j = i + 1; j < primes.size(); ++j) {
            const int64_t l = primes[i], q = primes[j];
            for (int64_t a = 0; a < l * q; ++a)
                CHECK(jacobi(a, l * q) == jacobi(a, l) * jacobi(a, q));
        }
    }
}

TEST_CASE("nu") {
    CHECK(nu(12) == 2);
    CHECK(nu(1) == 0);
    CHECK(nu(mpz_class(12), 2) == 1);
    CHECK(nu(-30) == 3);
    CHECK(nu(mpz_class(-30), 2) == 1);
}

TEST_CASE("rational_sqrt") {
    CHECK(*rational_sqrt(mpq_class(9, 4)) == mpq_class(3, 2));
    CHECK(*rational_sqrt(mpq_class(0)) == 0);
    CHECK_FALSE(rational_sqrt(mpq_class(2)).has_value());
    CHECK_FALSE(rational_sqrt(mpq_class(-1)).has_value());
}
