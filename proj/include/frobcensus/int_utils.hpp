#ifndef FROBCENSUS_INT_UTILS_HPP
#define FROBCENSUS_INT_UTILS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "frobcensus/errors.hpp"

namespace frobcensus {

/// Default trial-division ceiling; certifies complete factorization of any
/// |n| <= bound^2 and of many larger inputs (prime or prime-square cofactors).
inline constexpr long kDefaultTrialBound = 1'000'000;

/// True iff n = k^2 for some integer k >= 0; stores k in *root when asked.
bool is_perfect_square(const mpz_class& n, mpz_class* root = nullptr);

struct SquarefreeResult {
    mpz_class s; // squarefree part, same sign as the input
    mpz_class m; // positive cofactor with n = s * m^2
};

/// Sign-preserving squarefree decomposition n = s * m^2.
/// Throws invalid_input_error on n = 0, capacity_error when trial division
/// up to `trial_bound` cannot certify the factorization.
SquarefreeResult squarefree_part(const mpz_class& n, long trial_bound = kDefaultTrialBound);

/// Full factorization of |n| by trial division (pairs (prime, exponent), primes
/// ascending). Same capacity contract as squarefree_part.
std::vector<std::pair<mpz_class, int>> factorize(const mpz_class& n,
                                                 long trial_bound = kDefaultTrialBound);

/// Jacobi symbol (a/n) for odd n >= 1. Zero iff gcd(a, n) > 1.
int jacobi(int64_t a, int64_t n);
int jacobi(const mpz_class& a, const mpz_class& n);

/// nu(d): number of distinct prime divisors of d != 0. With `cap` set, only
/// primes <= cap are counted.
int nu(const mpz_class& d, std::optional<long> cap = std::nullopt,
       long trial_bound = kDefaultTrialBound);

/// Ascending primes <= n (sieve of Eratosthenes).
std::vector<int64_t> primes_up_to(int64_t n);

bool is_prime(int64_t n);

/// Exact square root of a nonnegative rational, when it exists.
std::optional<mpq_class> rational_sqrt(const mpq_class& q);

} // namespace frobcensus

#endif
