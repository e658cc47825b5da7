#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "frobcensus/curve.hpp"
#include "frobcensus/errors.hpp"
#include "frobcensus/int_utils.hpp"

using namespace frobcensus;

namespace {

CurveModel reference_curve() {
    // y^2 = x^5 - 3x^4 + 2x^3 + 1 (LMFDB 3680.a.29440.1)
    return CurveModel::parse("1,0,0,2,-3,1", "3680.a.29440.1");
}

CurveModel x5_plus_1() { return CurveModel::parse("1,0,0,0,0,1"); }

} // namespace

TEST_CASE("curve validation") {
    CHECK_THROWS_AS(CurveModel::parse("1,0,1"), invalid_input_error);         // degree 2
    CHECK_THROWS_AS(CurveModel::parse("0,0,0,1,2,1"), invalid_input_error);   // x^3 (x+1)^2
    CHECK_THROWS_AS(CurveModel::parse("1,x,0,0,0,1"), invalid_input_error);
    CHECK(reference_curve().degree() == 5);
}

TEST_CASE("reduction type") {
    const auto curve = x5_plus_1();
    CHECK(reduction_type(curve, 3) == Reduction::Good); // disc = 5^5
    CHECK(reduction_type(curve, 2) == Reduction::Bad);
    CHECK(reduction_type(curve, 5) == Reduction::Bad);
    CHECK_THROWS_AS(reduction_type(curve, 6), invalid_input_error);
}

TEST_CASE("bad primes of the reference curve are 2, 5, 23") {
    const auto curve = reference_curve();
    std::vector<int64_t> bad;
    for (int64_t p : primes_up_to(200))
        if (reduction_type(curve, p) == Reduction::Bad) bad.push_back(p);
    CHECK(bad == std::vector<int64_t>{2, 5, 23});
}

TEST_CASE("count_points hand examples") {
    const auto curve = x5_plus_1();
    CHECK(count_points(curve, 3, 1) == 4);
    CHECK(count_points(curve, 3, 2) == count_points_slow(curve, 3, 2));
    CHECK(count_points_slow(curve, 3, 1) == 4);
    CHECK_THROWS_AS(count_points(curve, 5, 1), invalid_input_error); // bad prime
    CHECK_THROWS_AS(count_points(curve, 3, 3), invalid_input_error);
}

TEST_CASE("fast counting agrees with the enumeration oracle") {
    for (const auto& curve : {reference_curve(), x5_plus_1()}) {
        for (int64_t p : primes_up_to(200)) {
            if (reduction_type(curve, p) == Reduction::Bad) continue;
            CHECK(count_points(curve, p, 1) == count_points_slow(curve, p, 1));
            if (p <= 60) CHECK(count_points(curve, p, 2) == count_points_slow(curve, p, 2));
        }
    }
}

TEST_CASE("degree-6 models: points at infinity over F_p and F_p2") {
    // y^2 = 2x^6 + x + 3: lc = 2 is a nonresidue mod 5 but a square in F_25.
    const CurveModel curve = CurveModel::parse("3,1,0,0,0,0,2");
    REQUIRE(reduction_type(curve, 5) == Reduction::Good);
    CHECK(jacobi(2, 5) == -1);
    CHECK(count_points(curve, 5, 1) == count_points_slow(curve, 5, 1));
    CHECK(count_points(curve, 5, 2) == count_points_slow(curve, 5, 2));
    // The k=2 count includes both points at infinity: verify against an
    // affine-only recount.
    const auto chi_square_count = count_points(curve, 5, 2);
    int64_t affine = 0;
    // enumeration oracle already covers this; just check the parity of the
    // infinity contribution by recomputing over F_25 = F_5(t), t^2 = 2.
    const int64_t p = 5, n = 2;
    for (int64_t a = 0; a < p; ++a)
        for (int64_t b = 0; b < p; ++b) {
            // evaluate f at a + b t with f = 2x^6 + x + 3
            int64_t vx = 0, vy = 0;
            const int64_t coeffs[] = {3, 1, 0, 0, 0, 0, 2};
            for (int i = 6; i >= 0; --i) {
                const int64_t nx = (vx * a + n * (vy * b) + coeffs[i]) % p;
                const int64_t ny = (vx * b + vy * a) % p;
                vx = nx;
                vy = ny;
            }
            const int64_t norm = ((vx * vx - n * vy * vy) % p + p) % p;
            affine += (vx == 0 && vy == 0) ? 1 : (jacobi(norm, p) == 1 ? 2 : 0);
        }
    CHECK(chi_square_count == affine + 2);
}

TEST_CASE("quadratic character identity chi_p2(u) = chi_p(norm u)") {
    std::mt19937_64 rng(99);
    for (int64_t p : {5, 13, 97}) {
        std::vector<int64_t> nonres;
        int64_t n = 0;
        for (int64_t x = 2; x < p; ++x)
            if (jacobi(x, p) == -1) { n = x; break; }
        std::uniform_int_distribution<int64_t> dist(0, p - 1);
        for (int iter = 0; iter < 1000; ++iter) {
            const int64_t a = dist(rng), b = dist(rng);
            if (a == 0 && b == 0) continue;
            // u^((p^2-1)/2) by square and multiply in F_p[t]/(t^2 - n)
            int64_t rx = 1, ry = 0, bx = a, by = b;
            int64_t e = (p * p - 1) / 2;
            while (e) {
                if (e & 1) {
                    const int64_t tx = (rx * bx + n * (ry * by)) % p;
                    const int64_t ty = (rx * by + ry * bx) % p;
                    rx = tx;
                    ry = ty;
                }
                const int64_t tx = (bx * bx + n * (by * by)) % p;
                const int64_t ty = (2 * bx * by) % p;
                bx = tx;
                by = ty;
                e >>= 1;
            }
            REQUIRE(ry == 0); // the power lands in F_p
            const int chi_pow = rx == 1 ? 1 : -1;
            const int64_t norm = ((a * a - n * b * b) % p + p) % p;
            CHECK(chi_pow == jacobi(norm, p));
        }
    }
}

TEST_CASE("frobenius_coeffs against the Newton-identity oracle") {
    const auto curve = reference_curve();
    for (int64_t p : {3, 7, 11, 13}) {
        REQUIRE(reduction_type(curve, p) == Reduction::Good);
        int64_t n_k[4];
        for (int k = 1; k <= 4; ++k) n_k[k - 1] = count_points_slow(curve, p, k);

        const FrobCoeffs fc = frobenius_coeffs(p, n_k[0], n_k[1]);

        // Power sums s_k = p^k + 1 - N_k, then Newton back to e_1..e_4.
        mpq_class s[5];
        mpz_class pk = 1;
        for (int k = 1; k <= 4; ++k) {
            pk *= p;
            s[k] = mpq_class(pk) + 1 - n_k[k - 1];
        }
        mpq_class e[5];
        e[0] = 1;
        for (int k = 1; k <= 4; ++k) {
            mpq_class acc = 0;
            int sign = 1;
            for (int i = 1; i <= k; ++i) {
                acc += sign * e[k - i] * s[i];
                sign = -sign;
            }
            e[k] = acc / k;
        }
        // Functional-equation shape forced by the Weil polynomial.
        CHECK(e[3] == mpq_class(p) * e[1]);
        CHECK(e[4] == mpq_class(p) * p);
        // The oracle's t1 and a2.
        CHECK(mpq_class(fc.t1) == e[1]);
        CHECK(mpq_class(fc.a2) == e[2]);
    }
}

TEST_CASE("g=1 sanity: trace from N1 matches direct enumeration") {
    // y^2 = x^3 + 2x + 1 over F_7: count directly and compare p + 1 - N1.
    const int64_t p = 7;
    int64_t n1 = 1; // point at infinity
    for (int64_t x = 0; x < p; ++x) {
        const int64_t v = ((x * x * x + 2 * x + 1) % p + p) % p;
        n1 += v == 0 ? 1 : (jacobi(v, p) == 1 ? 2 : 0);
    }
    const int64_t t = p + 1 - n1;
    CHECK(t * t <= 4 * p); // Hasse
}

TEST_CASE("Weil bounds and N_k reconstruction over a small census") {
    const auto curve = reference_curve();
    for (int64_t p : primes_up_to(500)) {
        if (reduction_type(curve, p) == Reduction::Bad) continue;
        const int64_t n1 = count_points(curve, p, 1);
        const int64_t n2 = count_points(curve, p, 2);
        const FrobCoeffs fc = frobenius_coeffs(p, n1, n2);
        CHECK(fc.t1 * fc.t1 <= 16 * p);
        CHECK(std::abs(fc.a2) <= 6 * p);
        // N_k = p^k + 1 - s_k for the stored polynomial.
        const auto s = power_sums(weil_poly(fc.t1, fc.a2, p), 2);
        CHECK(mpq_class(n1) == p + 1 - s[0]);
        CHECK(mpq_class(n2) == mpq_class(p) * p + 1 - s[1]);
    }
}

TEST_CASE("count_points_slow capacity") {
    CHECK_THROWS_AS(count_points_slow(reference_curve(), 401, 3), capacity_error);
}

TEST_CASE("count_points_slow at k = 3 and 4 stays consistent with Weil data") {
    // For a good prime, N3 and N4 must match the power sums of the quartic
    // recovered from N1, N2.
    const auto curve = reference_curve();
    for (int64_t p : {3, 7, 11, 13}) {
        const int64_t n1 = count_points(curve, p, 1);
        const int64_t n2 = count_points(curve, p, 2);
        const FrobCoeffs fc = frobenius_coeffs(p, n1, n2);
        const auto s = power_sums(weil_poly(fc.t1, fc.a2, p), 4);
        mpz_class p3 = mpz_class(p) * p * p, p4 = p3 * p;
        CHECK(mpq_class(count_points_slow(curve, p, 3)) == mpq_class(p3) + 1 - s[2]);
        CHECK(mpq_class(count_points_slow(curve, p, 4)) == mpq_class(p4) + 1 - s[3]);
    }
}
