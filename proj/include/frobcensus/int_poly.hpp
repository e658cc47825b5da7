#ifndef FROBCENSUS_INT_POLY_HPP
#define FROBCENSUS_INT_POLY_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace frobcensus {

/// Dense integer polynomial, coefficients stored lowest degree first.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    /// Degree, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    const mpz_class& operator[](size_t i) const { return coeffs_[i]; }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    const mpz_class& leading() const { return coeffs_.back(); }

    mpz_class eval(const mpz_class& x) const;
    mpq_class eval(const mpq_class& x) const;

    IntPoly derivative() const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-() const;
    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

    std::string to_string() const;

private:
    std::vector<mpz_class> coeffs_; // empty == zero, last element nonzero otherwise
};

/// Power sums s_1..s_upto of the roots of a monic polynomial, computed by
/// Newton's identities (exact rational intermediates). `upto` defaults to the
/// degree; values beyond the degree use the linear recurrence.
std::vector<mpq_class> power_sums(const IntPoly& f, int upto = -1);

/// Inverse direction of Newton's identities: the monic polynomial of degree
/// s.size() whose roots have the given power sums. Throws when the resulting
/// coefficients are not integers.
IntPoly poly_from_power_sums(const std::vector<mpq_class>& s);

/// Resultant of two integer polynomials (exact).
mpz_class resultant(const IntPoly& a, const IntPoly& b);

/// disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f).
mpz_class discriminant(const IntPoly& f);

} // namespace frobcensus

#endif
