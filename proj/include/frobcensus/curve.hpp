#ifndef FROBCENSUS_CURVE_HPP
#define FROBCENSUS_CURVE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "frobcensus/int_poly.hpp"

namespace frobcensus {

/// Genus-2 hyperelliptic model y^2 = f(x) with integer coefficients,
/// deg f in {5, 6} and disc(f) != 0.
class CurveModel {
public:
    explicit CurveModel(std::vector<mpz_class> f_coeffs, std::string label = "");

    const IntPoly& f() const { return f_; }
    int degree() const { return f_.degree(); }
    const std::string& label() const { return label_; }
    const mpz_class& disc() const { return disc_; }

    /// Parses "c0,c1,...,c5" (lowest degree first).
    static CurveModel parse(const std::string& coeff_list, std::string label = "");

private:
    IntPoly f_;
    std::string label_;
    mpz_class disc_;
};

enum class Reduction { Good, Bad };

/// Bad iff p = 2 or p | lc(f) or p | disc(f). A conductor proxy: differs from
/// the true bad set at finitely many primes and only ever shrinks the census.
Reduction reduction_type(const CurveModel& c, int64_t p);

/// #C(F_{p^k}) on the smooth projective model, k in {1, 2}. k = 1 runs in
/// O(p) from a Legendre table; k = 2 in O(p^2) cheap ops via the norm
/// character identity chi_{p^2}(u) = chi_p(N(u)).
int64_t count_points(const CurveModel& c, int64_t p, int k);

/// Independent oracle: direct enumeration of F_{p^k} as polynomial residues,
/// k <= 4, p^k <= 10^7. Test use only.
int64_t count_points_slow(const CurveModel& c, int64_t p, int k);

struct FrobCoeffs {
    int64_t t1; // trace of Frobenius, sum of the Weil roots = p + 1 - N1
    int64_t a2; // middle coefficient of the Weil polynomial
};

/// Recovers (t1, a2) from N1, N2. a2 = p + (N2 + N1(N1-2p-2))/2, the
/// Newton-identity-consistent form (see the census docs for the sign and
/// formula conventions). Throws internal_error on a Weil-bound violation.
FrobCoeffs frobenius_coeffs(int64_t p, int64_t n1, int64_t n2);

/// Weil polynomial x^4 - t1 x^3 + a2 x^2 - p t1 x + p^2.
IntPoly weil_poly(int64_t t1, int64_t a2, int64_t p);

} // namespace frobcensus

#endif
