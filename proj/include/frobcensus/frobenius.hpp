#ifndef FROBCENSUS_FROBENIUS_HPP
#define FROBCENSUS_FROBENIUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "frobcensus/int_poly.hpp"
#include "frobcensus/multipoly.hpp"
#include "frobcensus/quad_elem.hpp"

namespace frobcensus {

enum class ReductionClass { Bad, NonOrdinary, NotSimple, OrdinarySimple };

std::string to_string(ReductionClass c);

/// NonOrdinary iff p | a2; else NotSimple iff the Weil quartic is reducible
/// over Q; else OrdinarySimple (char poly = minimal poly for ordinary Weil
/// numbers, so irreducibility is the simplicity test).
ReductionClass classify(int64_t t1, int64_t a2, int64_t p);

struct RealSubfield {
    mpz_class delta; // t1^2 - 4 a2 + 8p, the discriminant of the minimal poly of beta
    long d0;         // squarefree part: real subfield is Q(sqrt(d0))
    mpz_class m;     // delta = d0 * m^2
};

/// Real quadratic subfield data for an ordinary simple record. Q(sqrt(d)) is
/// the real subfield iff d * delta is a perfect square. Throws internal_error
/// when delta <= 0 or delta is a perfect square (misclassified input).
RealSubfield real_subfield(int64_t t1, int64_t a2, int64_t p);

/// Isomorphism-class key for the quartic CM field K0(sqrt(r)), K0 = Q(sqrt(d0)).
struct CmFieldKey {
    long d0;
    QuadElem r; // totally negative, not a square in K0
};

struct CmFieldData {
    CmFieldKey key;
    QuadElem beta; // (t1 + m sqrt(d0))/2, a root of x^2 - t1 x + (a2 - 2p)
};

CmFieldData cm_field_key(int64_t t1, int64_t a2, int64_t p);

/// Kummer-theory identity test: K0(sqrt(r)) and K0(sqrt(r')) are isomorphic
/// iff d0 matches and r r' or r sigma(r') is a square in K0.
bool same_cm_field(const CmFieldKey& k1, const CmFieldKey& k2);

/// The monic degree-g integer polynomial annihilating beta = x + p/x in the
/// quotient algebra Q[x]/(charpoly). Input must have Weil shape (coefficient
/// symmetry coeff[g-i] = p^i coeff[g+i]).
IntPoly real_weil_poly(const IntPoly& charpoly, const mpz_class& p);

/// Characteristic polynomial of beta^2 from that of beta, via power-sum
/// doubling s_k(roots^2) = s_2k(roots).
IntPoly charpoly_of_square(const IntPoly& h);

/// gamma_p = (-1)^g charpoly_{beta^2}(4p) = N_{K0/Q}(beta^2 - 4p).
mpz_class gamma_value(const IntPoly& charpoly, const mpz_class& p);
mpz_class gamma_g2(int64_t t1, int64_t a2, int64_t p);

/// gamma_p as a polynomial in a_1..a_g, p (variables 0..g-1 are a_1..a_g,
/// variable g is p). Integer coefficients, at worst quadratic in each a_i.
MultiPoly gamma_symbolic(int g);

/// Coefficients C_1..C_g of charpoly_{beta^2}(y) = y^g + C_1 y^(g-1) + ... + C_g
/// as polynomials in a_1..a_g, p.
std::vector<MultiPoly> beta_square_charpoly_symbolic(int g);

/// Triangle-inequality bound |gamma_p| <= psi_g(sqrt(p)) = psi_constant(g) * p^g,
/// with |a_i| <= C(2g,i) p^(i/2). For g <= 2 the bound is applied termwise to the
/// expanded gamma polynomial; for g >= 3 termwise to the nested (4p)-adic form
/// (4p)^g + C_1 (4p)^(g-1) + ... + C_g. These reproduce 128 p^2 and 5072 p^3.
mpz_class psi_constant(int g);
mpz_class psi_bound(int g, const mpz_class& p);

} // namespace frobcensus

#endif
