#ifndef FROBCENSUS_MULTIPOLY_HPP
#define FROBCENSUS_MULTIPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace frobcensus {

/// Sparse multivariate polynomial with exact rational coefficients over a
/// fixed number of variables. Small-scale symbolic engine for the gamma / psi
/// machinery; not built for big polynomials.
class MultiPoly {
public:
    using Monomial = std::vector<unsigned>; // exponent per variable

    explicit MultiPoly(int nvars) : nvars_(nvars) {}
    static MultiPoly constant(int nvars, const mpq_class& c);
    static MultiPoly var(int nvars, int index, unsigned exp = 1);

    int nvars() const { return nvars_; }
    const std::map<Monomial, mpq_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const mpq_class& c) const;
    MultiPoly operator-() const;
    MultiPoly pow(unsigned e) const;
    bool operator==(const MultiPoly& o) const;

    int degree_in(int var) const;
    bool integer_coefficients() const;
    mpq_class eval(const std::vector<mpq_class>& values) const;

    std::string to_string(const std::vector<std::string>& names) const;

    void add_term(const Monomial& m, const mpq_class& c);

private:
    int nvars_;
    std::map<Monomial, mpq_class> terms_; // zero coefficients are never stored
};

} // namespace frobcensus

#endif
