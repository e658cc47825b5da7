#ifndef FROBCENSUS_SIEVE_HPP
#define FROBCENSUS_SIEVE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "frobcensus/census.hpp"

namespace frobcensus {

/// Term-by-term evaluation of the square-sieve inequality
///   S(A) <= #A/#P + max_{l != q} |sum_a (a/lq)| + (2/#P) sum_a w(a)
///           + (1/#P^2) sum_a w(a)^2,   w(a) = #{l in P : l | a}.
struct SieveReport {
    size_t n_a = 0, n_p = 0;
    mpq_class term_main, term_char, term_ram1, term_ram2;
    int64_t argmax_l = 0, argmax_q = 0; // pair achieving term_char (lex-least)
    int64_t s_exact = 0;                // exact number of squares in A

    mpq_class rhs() const { return term_main + term_char + term_ram1 + term_ram2; }
    bool inequality_holds() const { return mpq_class(s_exact) <= rhs(); }
    std::string to_json() const;
};

/// Evaluates every sieve term exactly. A must be nonzero integers; P distinct
/// odd primes (at least one). Throws internal_error if the inequality fails.
SieveReport sieve_terms(const std::vector<mpz_class>& a_seq, const std::vector<int64_t>& p_set);

/// The fixed-real-field sieve sequence (d * delta_p) over ordinary simple p <= X.
std::vector<mpz_class> delta_sequence(const CensusReport& report, long d);

/// The fixed-CM-field sieve sequence (gamma_p * d).
std::vector<mpz_class> gamma_sequence(const CensusReport& report, long d);

/// Primes in (z, 2z] excluding divisors of `exclude`. When fewer than
/// `min_count` survive, z doubles (desk-scale escape: the asymptotic z-choices
/// land below the first odd primes for small X); `z_used` reports the final z.
std::vector<int64_t> sieve_prime_set(double z, const mpz_class& exclude, size_t min_count = 2,
                                     double* z_used = nullptr);

/// sum_{x mod l} (ax^2+bx+c / l), brute force and closed form:
///   l | a, l | b: l * chi(c);  l | a, b nonzero: 0;
///   otherwise: (l-1) chi(a) if l | b^2-4ac, else -chi(a).
int64_t quad_char_sum_brute(int64_t a, int64_t b, int64_t c, int64_t l);
int64_t quad_char_sum(int64_t a, int64_t b, int64_t c, int64_t l);

/// Projective point count of y^2 = a x^2 + b x + c over F_l (direct count).
/// Equals l + 1 whenever l does not divide a(b^2 - 4ac).
int64_t conic_count(int64_t a, int64_t b, int64_t c, int64_t l);

} // namespace frobcensus

#endif
