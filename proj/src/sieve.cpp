#include "frobcensus/sieve.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "frobcensus/errors.hpp"
#include "frobcensus/int_utils.hpp"

namespace frobcensus {

std::string SieveReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["n_A"] = n_a;
    j["n_P"] = n_p;
    j["s_exact"] = s_exact;
    j["term_main"] = term_main.get_str();
    j["term_char"] = term_char.get_str();
    j["term_char_argmax"] = {argmax_l, argmax_q};
    j["term_ram1"] = term_ram1.get_str();
    j["term_ram2"] = term_ram2.get_str();
    j["rhs"] = rhs().get_str();
    j["inequality_holds"] = inequality_holds();
    return j.dump(2);
}

SieveReport sieve_terms(const std::vector<mpz_class>& a_seq, const std::vector<int64_t>& p_input) {
    if (a_seq.empty()) throw invalid_input_error("sieve_terms: empty sequence");
    if (p_input.empty()) throw invalid_input_error("sieve_terms: empty sieve set");
    for (const auto& alpha : a_seq)
        if (alpha == 0) throw invalid_input_error("sieve_terms: zero element in A");
    // Sorted sieve set: the terms are order-independent and the reported
    // argmax pair becomes the lexicographically least one on ties.
    std::vector<int64_t> p_set = p_input;
    std::sort(p_set.begin(), p_set.end());
    for (size_t i = 0; i < p_set.size(); ++i) {
        if (p_set[i] % 2 == 0 || !is_prime(p_set[i]))
            throw invalid_input_error("sieve_terms: sieve set must contain odd primes");
        if (i > 0 && p_set[i] == p_set[i - 1])
            throw invalid_input_error("sieve_terms: repeated prime");
    }

    SieveReport rep;
    rep.n_a = a_seq.size();
    rep.n_p = p_set.size();
    rep.term_main = mpq_class(static_cast<long>(a_seq.size()), static_cast<long>(p_set.size()));
    rep.term_main.canonicalize();

    // jac[i][j] = (a_i / p_j), cached for the pair scan.
    std::vector<std::vector<int8_t>> jac(a_seq.size(), std::vector<int8_t>(p_set.size()));
    std::vector<int64_t> weight(a_seq.size(), 0); // #{l in P : l | alpha}
    for (size_t i = 0; i < a_seq.size(); ++i) {
        for (size_t j = 0; j < p_set.size(); ++j) {
            jac[i][j] = static_cast<int8_t>(jacobi(a_seq[i], mpz_class(p_set[j])));
            if (jac[i][j] == 0) ++weight[i];
        }
    }

    mpz_class best = -1;
    for (size_t j1 = 0; j1 < p_set.size(); ++j1) {
        for (size_t j2 = j1 + 1; j2 < p_set.size(); ++j2) {
            int64_t sum = 0;
            for (size_t i = 0; i < a_seq.size(); ++i)
                sum += static_cast<int64_t>(jac[i][j1]) * jac[i][j2];
            const mpz_class mag = abs(mpz_class(sum));
            if (mag > best) { // strict: ties keep the lex-least (l, q)
                best = mag;
                rep.argmax_l = p_set[j1];
                rep.argmax_q = p_set[j2];
            }
        }
    }
    rep.term_char = p_set.size() >= 2 ? mpq_class(best) : mpq_class(0);

    mpz_class w_sum = 0, w2_sum = 0;
    for (int64_t w : weight) {
        w_sum += w;
        w2_sum += mpz_class(w) * w;
    }
    rep.term_ram1 = mpq_class(2 * w_sum, static_cast<long>(p_set.size()));
    rep.term_ram1.canonicalize();
    rep.term_ram2 = mpq_class(w2_sum, mpz_class(static_cast<long>(p_set.size())) *
                                          static_cast<long>(p_set.size()));
    rep.term_ram2.canonicalize();

    for (const auto& alpha : a_seq)
        if (is_perfect_square(alpha)) ++rep.s_exact;

    if (!rep.inequality_holds())
        throw internal_error("sieve_terms: square-sieve inequality violated");
    return rep;
}

std::vector<mpz_class> delta_sequence(const CensusReport& report, long d) {
    if (d <= 1) throw invalid_input_error("delta_sequence: d must be > 1");
    std::vector<mpz_class> seq;
    for (const auto& rec : report.records)
        if (rec.cls == ReductionClass::OrdinarySimple) seq.push_back(mpz_class(d) * *rec.delta);
    return seq;
}

std::vector<mpz_class> gamma_sequence(const CensusReport& report, long d) {
    if (d <= 1) throw invalid_input_error("gamma_sequence: d must be > 1");
    std::vector<mpz_class> seq;
    for (const auto& rec : report.records)
        if (rec.cls == ReductionClass::OrdinarySimple) seq.push_back(mpz_class(d) * *rec.gamma);
    return seq;
}

std::vector<int64_t> sieve_prime_set(double z, const mpz_class& exclude, size_t min_count,
                                     double* z_used) {
    if (z <= 0) throw invalid_input_error("sieve_prime_set: z must be positive");
    for (;;) {
        std::vector<int64_t> out;
        const int64_t hi = static_cast<int64_t>(std::floor(2 * z));
        for (int64_t p : primes_up_to(hi)) {
            if (static_cast<double>(p) <= z) continue;
            if (p == 2) continue;
            if (mpz_divisible_ui_p(exclude.get_mpz_t(), static_cast<unsigned long>(p))) continue;
            out.push_back(p);
        }
        if (out.size() >= min_count) {
            if (z_used) *z_used = z;
            return out;
        }
        z *= 2;
        if (z > 1e15) throw capacity_error("sieve_prime_set: z escalation overflow");
    }
}

int64_t quad_char_sum_brute(int64_t a, int64_t b, int64_t c, int64_t l) {
    if (l < 3 || !is_prime(l)) throw invalid_input_error("quad_char_sum: l must be an odd prime");
    int64_t sum = 0;
    for (int64_t x = 0; x < l; ++x) {
        const int64_t v = ((a * x % l) * x + b * x + c) % l;
        sum += jacobi(v, l);
    }
    return sum;
}

int64_t quad_char_sum(int64_t a, int64_t b, int64_t c, int64_t l) {
    if (l < 3 || !is_prime(l)) throw invalid_input_error("quad_char_sum: l must be an odd prime");
    if (a % l == 0) {
        if (b % l == 0) return l * jacobi(c, l);
        return 0; // full period of a linear character sum
    }
    const int64_t disc = (b % l) * (b % l) % l - (4 * (a % l) % l) * (c % l) % l;
    const int chi_a = jacobi(a, l);
    if (disc % l == 0) return (l - 1) * chi_a;
    return -chi_a;
}

int64_t conic_count(int64_t a, int64_t b, int64_t c, int64_t l) {
    if (l < 3 || !is_prime(l)) throw invalid_input_error("conic_count: l must be an odd prime");
    // Affine chart: sum over x of #{y : y^2 = q(x)}.
    int64_t count = 0;
    for (int64_t x = 0; x < l; ++x) {
        int64_t v = ((a * x % l) * x + b * x + c) % l;
        if (v < 0) v += l;
        count += (v == 0) ? 1 : (jacobi(v, l) == 1 ? 2 : 0);
    }
    // Points at infinity of Y^2 = a X^2 + b X Z + c Z^2: Z = 0 forces Y^2 = a X^2.
    const int64_t am = ((a % l) + l) % l;
    if (am == 0) count += 1;          // [1 : 0 : 0]
    else if (jacobi(am, l) == 1) count += 2;
    return count;
}

} // namespace frobcensus
