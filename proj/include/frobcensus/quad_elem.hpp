#ifndef FROBCENSUS_QUAD_ELEM_HPP
#define FROBCENSUS_QUAD_ELEM_HPP

#include <optional>
#include <string>

#include <gmpxx.h>

namespace frobcensus {

/// Exact element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)),
/// d squarefree > 1. Immutable value type; all arithmetic is exact.
class QuadElem {
public:
    QuadElem(long d, mpq_class a, mpq_class b); // validates d
    static QuadElem from_rational(long d, mpq_class a) { return QuadElem(d, std::move(a), 0); }

    long d() const { return d_; }
    const mpq_class& a() const { return a_; }
    const mpq_class& b() const { return b_; }

    QuadElem conjugate() const;           // b -> -b
    mpq_class norm() const;               // a^2 - b^2 d
    mpq_class trace() const;              // 2a
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    /// Sign of the real number a + b*sqrt(d) under the embedding sqrt(d) > 0.
    int sign() const;
    bool is_totally_negative() const;

    QuadElem operator-() const;
    QuadElem operator+(const QuadElem& o) const;
    QuadElem operator-(const QuadElem& o) const;
    QuadElem operator*(const QuadElem& o) const;
    QuadElem operator*(const mpq_class& c) const;
    QuadElem operator-(const mpq_class& c) const;
    bool operator==(const QuadElem& o) const;

    std::string to_string() const;

private:
    long d_;
    mpq_class a_, b_;
};

/// Exact square root in Q(sqrt(d)) when one exists. x = a + b sqrt(d) is a
/// square iff N(x) is a rational square n^2 and (b != 0) one of (a +/- n)/2 is
/// a nonzero rational square, or (b = 0) a or a*d is a rational square.
std::optional<QuadElem> quad_sqrt(const QuadElem& x);

inline bool quad_is_square(const QuadElem& x) { return quad_sqrt(x).has_value(); }

} // namespace frobcensus

#endif
