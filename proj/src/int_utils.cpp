#include "frobcensus/int_utils.hpp"

#include <cstdlib>

namespace frobcensus {

bool is_perfect_square(const mpz_class& n, mpz_class* root) {
    if (n < 0) return false;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    if (root) mpz_sqrt(root->get_mpz_t(), n.get_mpz_t());
    return true;
}

namespace {

// Divides out every power of d from n, appending (d, e) when e > 0.
void pull_factor(mpz_class& n, unsigned long d, std::vector<std::pair<mpz_class, int>>& out) {
    if (!mpz_divisible_ui_p(n.get_mpz_t(), d)) return;
    int e = 0;
    do {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
        ++e;
    } while (mpz_divisible_ui_p(n.get_mpz_t(), d));
    out.emplace_back(mpz_class(d), e);
}

} // namespace

std::vector<std::pair<mpz_class, int>> factorize(const mpz_class& n, long trial_bound) {
    if (n == 0) throw invalid_input_error("factorize: zero input");
    if (trial_bound < 2) throw invalid_input_error("factorize: trial bound < 2");

    mpz_class rem = abs(n);
    std::vector<std::pair<mpz_class, int>> factors;
    pull_factor(rem, 2, factors);
    pull_factor(rem, 3, factors);
    // 6k +/- 1 wheel; stop once d^2 exceeds the remaining cofactor.
    for (unsigned long d = 5; d <= static_cast<unsigned long>(trial_bound); d += 6) {
        if (rem == 1 || mpz_class(d) * d > rem) break;
        pull_factor(rem, d, factors);
        pull_factor(rem, d + 2, factors);
    }

    if (rem > 1) {
        const mpz_class bound_sq = mpz_class(trial_bound) * trial_bound;
        mpz_class root;
        if (rem <= bound_sq) {
            // Survived all primes <= bound, so any factor would exceed sqrt(rem): prime.
            factors.emplace_back(rem, 1);
        } else if (is_perfect_square(rem, &root) && root <= bound_sq) {
            factors.emplace_back(root, 2);
        } else {
            throw capacity_error("factorize: cofactor " + rem.get_str() +
                                 " exceeds trial-division bound " + std::to_string(trial_bound));
        }
    }
    return factors;
}

SquarefreeResult squarefree_part(const mpz_class& n, long trial_bound) {
    if (n == 0) throw invalid_input_error("squarefree_part: zero input");
    SquarefreeResult r{1, 1};
    for (const auto& [p, e] : factorize(n, trial_bound)) {
        if (e & 1) r.s *= p;
        for (int i = 0; i < e / 2; ++i) r.m *= p;
    }
    if (n < 0) r.s = -r.s;
    return r;
}

int jacobi(int64_t a, int64_t n) {
    if (n <= 0 || n % 2 == 0)
        throw invalid_input_error("jacobi: modulus must be odd and positive");
    a %= n;
    if (a < 0) a += n;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const int64_t r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

int jacobi(const mpz_class& a, const mpz_class& n) {
    if (n <= 0 || mpz_even_p(n.get_mpz_t()))
        throw invalid_input_error("jacobi: modulus must be odd and positive");
    return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

int nu(const mpz_class& d, std::optional<long> cap, long trial_bound) {
    if (d == 0) throw invalid_input_error("nu: zero input");
    if (cap) {
        // Only primes <= cap matter; no capacity concerns.
        mpz_class rem = abs(d);
        int count = 0;
        for (int64_t p : primes_up_to(*cap)) {
            if (mpz_divisible_ui_p(rem.get_mpz_t(), static_cast<unsigned long>(p))) ++count;
        }
        return count;
    }
    return static_cast<int>(factorize(d, trial_bound).size());
}

std::vector<int64_t> primes_up_to(int64_t n) {
    std::vector<int64_t> primes;
    if (n < 2) return primes;
    std::vector<bool> composite(static_cast<size_t>(n) + 1, false);
    for (int64_t i = 2; i <= n; ++i) {
        if (composite[static_cast<size_t>(i)]) continue;
        primes.push_back(i);
        for (int64_t j = i * i; j <= n; j += i) composite[static_cast<size_t>(j)] = true;
    }
    return primes;
}

bool is_prime(int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (int64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (q < 0) return std::nullopt;
    mpq_class canon = q;
    canon.canonicalize(); // callers may pass mpq_class(num, den) verbatim
    mpz_class num_root, den_root;
    if (!is_perfect_square(canon.get_num(), &num_root)) return std::nullopt;
    if (!is_perfect_square(canon.get_den(), &den_root)) return std::nullopt;
    return mpq_class(num_root, den_root);
}

} // namespace frobcensus
