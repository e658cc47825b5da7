#include "frobcensus/int_poly.hpp"

#include <sstream>

#include "frobcensus/errors.hpp"

namespace frobcensus {

namespace {

void strip_leading_zeros(std::vector<mpz_class>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

} // namespace

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    strip_leading_zeros(coeffs_);
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    strip_leading_zeros(coeffs_);
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

mpq_class IntPoly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::derivative() const {
    std::vector<mpz_class> d;
    for (size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long>(i));
    return IntPoly(std::move(d));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<mpz_class> c(coeffs_.size() + o.coeffs_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<mpz_class> c(std::max(coeffs_.size(), o.coeffs_.size()), mpz_class(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-() const {
    std::vector<mpz_class> c = coeffs_;
    for (auto& x : c) x = -x;
    return IntPoly(std::move(c));
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = coeffs_[static_cast<size_t>(i)];
        if (c == 0) continue;
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        first = false;
        const mpz_class a = abs(c);
        if (a != 1 || i == 0) out << a.get_str();
        if (i > 0) out << "x";
        if (i > 1) out << "^" << i;
    }
    return out.str();
}

std::vector<mpq_class> power_sums(const IntPoly& f, int upto) {
    if (!f.is_monic()) throw invalid_input_error("power_sums: polynomial must be monic");
    const int n = f.degree();
    if (upto < 0) upto = n;
    // c[i] = coefficient of x^(n-i), c[0] = 1.
    auto c = [&](int i) -> mpz_class { return f[static_cast<size_t>(n - i)]; };
    std::vector<mpq_class> s(static_cast<size_t>(upto) + 1);
    s[0] = n;
    // s_k + c_1 s_{k-1} + ... + c_{k-1} s_1 + k c_k = 0 for k <= n;
    // beyond the degree the plain linear recurrence applies.
    for (int k = 1; k <= upto; ++k) {
        mpq_class acc = 0;
        for (int i = 1; i < k && i <= n; ++i) acc += c(i) * s[static_cast<size_t>(k - i)];
        if (k <= n) acc += mpq_class(k) * c(k);
        s[static_cast<size_t>(k)] = -acc;
    }
    s.erase(s.begin()); // drop s_0
    return s;
}

IntPoly poly_from_power_sums(const std::vector<mpq_class>& s) {
    const int n = static_cast<int>(s.size());
    // e_k via Newton: k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} s_i.
    std::vector<mpq_class> e(static_cast<size_t>(n) + 1);
    e[0] = 1;
    for (int k = 1; k <= n; ++k) {
        mpq_class acc = 0;
        int sign = 1;
        for (int i = 1; i <= k; ++i) {
            acc += sign * e[static_cast<size_t>(k - i)] * s[static_cast<size_t>(i - 1)];
            sign = -sign;
        }
        e[static_cast<size_t>(k)] = acc / k;
    }
    std::vector<mpz_class> coeffs(static_cast<size_t>(n) + 1);
    coeffs[static_cast<size_t>(n)] = 1;
    int sign = -1;
    for (int k = 1; k <= n; ++k) {
        mpq_class c = sign * e[static_cast<size_t>(k)];
        if (c.get_den() != 1)
            throw invalid_input_error("poly_from_power_sums: non-integer coefficient " + c.get_str());
        coeffs[static_cast<size_t>(n - k)] = c.get_num();
        sign = -sign;
    }
    return IntPoly(std::move(coeffs));
}

namespace {

using QPoly = std::vector<mpq_class>; // lowest degree first, no leading zeros

void qstrip(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qmod(const QPoly& a, const QPoly& b) {
    QPoly r = a;
    qstrip(r);
    while (r.size() >= b.size()) {
        const mpq_class q = r.back() / b.back();
        const size_t shift = r.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= q * b[i];
        qstrip(r);
        if (r.empty()) break;
    }
    return r;
}

// Classical recursive resultant over Q.
mpq_class qresultant(QPoly a, QPoly b) {
    qstrip(a);
    qstrip(b);
    if (a.empty() || b.empty()) return 0;
    if (b.size() == 1) {
        mpq_class r = 1;
        for (size_t i = 1; i < a.size(); ++i) r *= b[0];
        return r;
    }
    const QPoly r = qmod(a, b);
    if (r.empty()) return 0;
    const int da = static_cast<int>(a.size()) - 1;
    const int db = static_cast<int>(b.size()) - 1;
    const int dr = static_cast<int>(r.size()) - 1;
    mpq_class lead_pow = 1;
    for (int i = 0; i < da - dr; ++i) lead_pow *= b.back();
    mpq_class res = qresultant(b, r) * lead_pow;
    if ((da % 2) && (db % 2)) res = -res;
    return res;
}

} // namespace

mpz_class resultant(const IntPoly& a, const IntPoly& b) {
    QPoly qa, qb;
    for (const auto& c : a.coeffs()) qa.emplace_back(c);
    for (const auto& c : b.coeffs()) qb.emplace_back(c);
    mpq_class r = qresultant(qa, qb);
    if (r.get_den() != 1) throw internal_error("resultant: non-integer result");
    return r.get_num();
}

mpz_class discriminant(const IntPoly& f) {
    const int d = f.degree();
    if (d < 1) throw invalid_input_error("discriminant: degree must be >= 1");
    mpz_class res = resultant(f, f.derivative());
    mpz_class disc;
    mpz_divexact(disc.get_mpz_t(), res.get_mpz_t(), f.leading().get_mpz_t());
    if ((d * (d - 1) / 2) % 2) disc = -disc;
    return disc;
}

} // namespace frobcensus
