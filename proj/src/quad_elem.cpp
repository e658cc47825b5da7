#include "frobcensus/quad_elem.hpp"

#include "frobcensus/errors.hpp"
#include "frobcensus/int_utils.hpp"

namespace frobcensus {

QuadElem::QuadElem(long d, mpq_class a, mpq_class b)
    : d_(d), a_(std::move(a)), b_(std::move(b)) {
    if (d < 2) throw invalid_input_error("QuadElem: field label d must be > 1");
    const auto sf = squarefree_part(mpz_class(d));
    if (sf.m != 1) throw invalid_input_error("QuadElem: d = " + std::to_string(d) + " is not squarefree");
    // mpq_class(num, den) does not canonicalize; exact comparison needs it.
    a_.canonicalize();
    b_.canonicalize();
}

QuadElem QuadElem::conjugate() const { return QuadElem(d_, a_, -b_); }

mpq_class QuadElem::norm() const { return a_ * a_ - b_ * b_ * d_; }

mpq_class QuadElem::trace() const { return 2 * a_; }

int QuadElem::sign() const {
    const int sa = sgn(a_), sb = sgn(b_);
    if (sa == 0 && sb == 0) return 0;
    if (sa >= 0 && sb >= 0) return 1;
    if (sa <= 0 && sb <= 0) return -1;
    // Mixed signs: compare a^2 against b^2 d. a + b sqrt(d) > 0 iff the
    // positive summand dominates in squares.
    const int cmp = sgn(a_ * a_ - b_ * b_ * d_);
    return sa > 0 ? cmp : -cmp;
}

bool QuadElem::is_totally_negative() const { return sign() < 0 && conjugate().sign() < 0; }

QuadElem QuadElem::operator-() const { return QuadElem(d_, -a_, -b_); }

QuadElem QuadElem::operator+(const QuadElem& o) const {
    if (d_ != o.d_) throw invalid_input_error("QuadElem: mixed fields");
    return QuadElem(d_, a_ + o.a_, b_ + o.b_);
}

QuadElem QuadElem::operator-(const QuadElem& o) const {
    if (d_ != o.d_) throw invalid_input_error("QuadElem: mixed fields");
    return QuadElem(d_, a_ - o.a_, b_ - o.b_);
}

QuadElem QuadElem::operator*(const QuadElem& o) const {
    if (d_ != o.d_) throw invalid_input_error("QuadElem: mixed fields");
    return QuadElem(d_, a_ * o.a_ + b_ * o.b_ * d_, a_ * o.b_ + b_ * o.a_);
}

QuadElem QuadElem::operator*(const mpq_class& c) const { return QuadElem(d_, a_ * c, b_ * c); }

QuadElem QuadElem::operator-(const mpq_class& c) const { return QuadElem(d_, a_ - c, b_); }

bool QuadElem::operator==(const QuadElem& o) const {
    return d_ == o.d_ && a_ == o.a_ && b_ == o.b_;
}

std::string QuadElem::to_string() const {
    return a_.get_str() + " + " + b_.get_str() + "*sqrt(" + std::to_string(d_) + ")";
}

std::optional<QuadElem> quad_sqrt(const QuadElem& x) {
    const long d = x.d();
    if (x.is_zero()) return QuadElem(d, 0, 0);

    if (x.is_rational()) {
        if (auto u = rational_sqrt(x.a())) return QuadElem(d, *u, 0);
        // a = (v sqrt(d))^2 = v^2 d  <=>  a/d is a rational square.
        if (auto v = rational_sqrt(x.a() / d)) return QuadElem(d, 0, *v);
        return std::nullopt;
    }

    const auto n = rational_sqrt(x.norm());
    if (!n) return std::nullopt;
    for (const mpq_class& s : {*n, mpq_class(-*n)}) {
        const mpq_class half = (x.a() + s) / 2;
        if (half == 0) continue;
        if (auto u = rational_sqrt(half)) {
            if (*u == 0) continue;
            QuadElem y(d, *u, x.b() / (2 * *u));
            if (y * y == x) return y;
        }
    }
    return std::nullopt;
}

} // namespace frobcensus
