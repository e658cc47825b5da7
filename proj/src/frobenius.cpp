#include "frobcensus/frobenius.hpp"

#include "frobcensus/curve.hpp"
#include "frobcensus/errors.hpp"
#include "frobcensus/int_utils.hpp"

namespace frobcensus {

std::string to_string(ReductionClass c) {
    switch (c) {
        case ReductionClass::Bad: return "bad";
        case ReductionClass::NonOrdinary: return "nonordinary";
        case ReductionClass::NotSimple: return "notsimple";
        case ReductionClass::OrdinarySimple: return "ordinarysimple";
    }
    return "?";
}

namespace {

// Searches for a factorization of the monic integer quartic
// x^4 + c3 x^3 + c2 x^2 + c1 x + c0 into two monic integer quadratics
// (x^2 + A x + B)(x^2 + G x + D). By Gauss's lemma this plus the rational
// root test decides reducibility over Q.
bool has_quadratic_split(const mpz_class& c3, const mpz_class& c2, const mpz_class& c1,
                         const mpz_class& c0, const std::vector<mpz_class>& divisors) {
    for (const mpz_class& b_abs : divisors) {
        if (!mpz_divisible_p(c0.get_mpz_t(), b_abs.get_mpz_t())) continue;
        for (int sign = 0; sign < 2; ++sign) {
            const mpz_class B = sign ? -b_abs : b_abs;
            const mpz_class D = c0 / B;
            if (B != D) {
                // A(D - B) = c1 - B*c3
                const mpz_class num = c1 - B * c3;
                const mpz_class den = D - B;
                if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) continue;
                const mpz_class A = num / den;
                const mpz_class G = c3 - A;
                if (B + D + A * G == c2 && A * D + B * G == c1) return true;
            } else {
                // A + G = c3, A*G = c2 - 2B; also A*D + B*G = B*c3 must equal c1.
                if (B * c3 != c1) continue;
                const mpz_class disc = c3 * c3 - 4 * (c2 - 2 * B);
                mpz_class k;
                if (!is_perfect_square(disc, &k)) continue;
                if (mpz_odd_p(mpz_class(c3 + k).get_mpz_t())) continue;
                return true;
            }
        }
    }
    return false;
}

} // namespace

ReductionClass classify(int64_t t1, int64_t a2, int64_t p) {
    if (a2 % p == 0) return ReductionClass::NonOrdinary;

    const IntPoly f = weil_poly(t1, a2, p);
    const mpz_class c3 = f[3], c2 = f[2], c1 = f[1], c0 = f[0];

    // Rational roots divide p^2.
    const mpz_class P(p);
    const std::vector<mpz_class> divisors{mpz_class(1), P, mpz_class(P * P)};
    for (const mpz_class& r_abs : divisors) {
        if (f.eval(r_abs) == 0 || f.eval(mpz_class(-r_abs)) == 0) return ReductionClass::NotSimple;
    }
    if (has_quadratic_split(c3, c2, c1, c0, divisors)) return ReductionClass::NotSimple;
    return ReductionClass::OrdinarySimple;
}

RealSubfield real_subfield(int64_t t1, int64_t a2, int64_t p) {
    const mpz_class delta = mpz_class(t1) * t1 - 4 * mpz_class(a2) + 8 * mpz_class(p);
    if (delta <= 0)
        throw internal_error("real_subfield: delta <= 0 at p = " + std::to_string(p) +
                             " (record is not ordinary simple)");
    if (is_perfect_square(delta))
        throw internal_error("real_subfield: delta = " + delta.get_str() +
                             " is a perfect square; beta would be rational");
    const auto sf = squarefree_part(delta);
    return RealSubfield{delta, static_cast<long>(sf.s.get_si()), sf.m};
}

CmFieldData cm_field_key(int64_t t1, int64_t a2, int64_t p) {
    const RealSubfield rs = real_subfield(t1, a2, p);
    const QuadElem beta(rs.d0, mpq_class(t1, 2), mpq_class(rs.m, 2));

    // beta^2 - t1 beta + (a2 - 2p) = 0, the (sign-adjusted) minimal polynomial.
    const QuadElem check = beta * beta - beta * mpq_class(t1) - mpq_class(2 * p - a2);
    if (!check.is_zero())
        throw internal_error("cm_field_key: beta fails its minimal polynomial at p = " +
                             std::to_string(p));

    const QuadElem r = beta * beta - mpq_class(4 * p);
    if (!r.is_totally_negative())
        throw internal_error("cm_field_key: r not totally negative at p = " + std::to_string(p) +
                             " (non-ordinary leak)");
    if (quad_is_square(r))
        throw internal_error("cm_field_key: r is a square in K0 at p = " + std::to_string(p));
    return CmFieldData{CmFieldKey{rs.d0, r}, beta};
}

bool same_cm_field(const CmFieldKey& k1, const CmFieldKey& k2) {
    if (k1.d0 != k2.d0) return false;
    return quad_is_square(k1.r * k2.r) || quad_is_square(k1.r * k2.r.conjugate());
}

namespace {

using QVec = std::vector<mpq_class>;

// Multiplication in Q[x]/(F) for monic F, vectors of length deg F.
QVec quotient_mul(const QVec& a, const QVec& b, const IntPoly& f) {
    const size_t n = a.size();
    QVec prod(2 * n - 1, mpq_class(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) prod[i + j] += a[i] * b[j];
    for (size_t i = 2 * n - 2; i >= n; --i) {
        const mpq_class c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (size_t j = 0; j < n; ++j) prod[i - n + j] -= c * f[j];
        if (i == n) break;
    }
    prod.resize(n);
    return prod;
}

} // namespace

IntPoly real_weil_poly(const IntPoly& charpoly, const mpz_class& p) {
    const int deg = charpoly.degree();
    if (deg < 2 || deg % 2 != 0 || !charpoly.is_monic())
        throw invalid_input_error("real_weil_poly: need a monic even-degree polynomial");
    const int g = deg / 2;
    for (int i = 1; i <= g; ++i) {
        mpz_class pi = 1;
        for (int k = 0; k < i; ++k) pi *= p;
        if (charpoly[static_cast<size_t>(g - i)] != pi * charpoly[static_cast<size_t>(g + i)])
            throw invalid_input_error("real_weil_poly: input is not Weil-shaped");
    }

    const size_t n = static_cast<size_t>(deg);
    // x^{-1} = -(1/F_0) * (F_1 + F_2 x + ... + F_{2g} x^{2g-1})
    QVec xinv(n, mpq_class(0));
    for (size_t i = 0; i < n; ++i) xinv[i] = mpq_class(-charpoly[i + 1]) / mpq_class(charpoly[0]);
    QVec beta(n, mpq_class(0));
    beta[1] = 1;
    for (size_t i = 0; i < n; ++i) beta[i] += p * xinv[i];

    // Powers beta^0 .. beta^g.
    std::vector<QVec> pw;
    QVec cur(n, mpq_class(0));
    cur[0] = 1;
    pw.push_back(cur);
    for (int k = 1; k <= g; ++k) {
        cur = quotient_mul(cur, beta, charpoly);
        pw.push_back(cur);
    }

    // Solve sum_{i<g} u_i beta^i = -beta^g by Gaussian elimination
    // (2g equations, g unknowns; consistent for Weil-shaped input).
    const int rows = deg, cols = g;
    std::vector<QVec> m(static_cast<size_t>(rows), QVec(static_cast<size_t>(cols) + 1, mpq_class(0)));
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) m[static_cast<size_t>(r)][static_cast<size_t>(c)] = pw[static_cast<size_t>(c)][static_cast<size_t>(r)];
        m[static_cast<size_t>(r)][static_cast<size_t>(cols)] = -pw[static_cast<size_t>(g)][static_cast<size_t>(r)];
    }
    std::vector<int> pivot_col(static_cast<size_t>(rows), -1);
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pr = -1;
        for (int r = rank; r < rows; ++r)
            if (m[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(m[static_cast<size_t>(pr)], m[static_cast<size_t>(rank)]);
        const mpq_class inv = 1 / m[static_cast<size_t>(rank)][static_cast<size_t>(c)];
        for (auto& v : m[static_cast<size_t>(rank)]) v *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            const mpq_class factor = m[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (factor == 0) continue;
            for (int cc = c; cc <= cols; ++cc)
                m[static_cast<size_t>(r)][static_cast<size_t>(cc)] -=
                    factor * m[static_cast<size_t>(rank)][static_cast<size_t>(cc)];
        }
        pivot_col[static_cast<size_t>(rank)] = c;
        ++rank;
    }
    for (int r = rank; r < rows; ++r)
        if (m[static_cast<size_t>(r)][static_cast<size_t>(cols)] != 0)
            throw internal_error("real_weil_poly: inconsistent annihilator system");

    QVec u(static_cast<size_t>(cols), mpq_class(0)); // free variables get 0
    for (int r = 0; r < rank; ++r)
        u[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] =
            m[static_cast<size_t>(r)][static_cast<size_t>(cols)];

    std::vector<mpz_class> h(static_cast<size_t>(g) + 1);
    h[static_cast<size_t>(g)] = 1;
    for (int i = 0; i < g; ++i) {
        if (u[static_cast<size_t>(i)].get_den() != 1)
            throw internal_error("real_weil_poly: non-integer coefficient");
        h[static_cast<size_t>(i)] = u[static_cast<size_t>(i)].get_num();
    }
    IntPoly result(std::move(h));

    // h(beta) = 0 in the quotient algebra, asserted independently of the solve.
    QVec acc(n, mpq_class(0));
    for (int k = 0; k <= g; ++k)
        for (size_t i = 0; i < n; ++i) acc[i] += mpq_class(result[static_cast<size_t>(k)]) * pw[static_cast<size_t>(k)][i];
    for (const auto& v : acc)
        if (v != 0) throw internal_error("real_weil_poly: h(beta) != 0");
    return result;
}

IntPoly charpoly_of_square(const IntPoly& h) {
    if (!h.is_monic()) throw invalid_input_error("charpoly_of_square: h must be monic");
    const int g = h.degree();
    const auto s = power_sums(h, 2 * g);
    std::vector<mpq_class> sigma(static_cast<size_t>(g));
    for (int k = 1; k <= g; ++k) sigma[static_cast<size_t>(k - 1)] = s[static_cast<size_t>(2 * k - 1)];
    return poly_from_power_sums(sigma);
}

mpz_class gamma_value(const IntPoly& charpoly, const mpz_class& p) {
    const int g = charpoly.degree() / 2;
    const IntPoly h2 = charpoly_of_square(real_weil_poly(charpoly, p));
    mpz_class v = h2.eval(mpz_class(4 * p));
    return (g % 2) ? mpz_class(-v) : v;
}

mpz_class gamma_g2(int64_t t1, int64_t a2, int64_t p) {
    return gamma_value(weil_poly(t1, a2, p), mpz_class(p));
}

namespace {

mpz_class binom(int n, int k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// Power sums s_1..s_2g of the generic Weil-shaped characteristic
// polynomial, then the even "folded" sums
//   S_m = sum_i beta_i^m = sum_{i < m/2} C(m,i) p^i s_{m-2i} + C(m,m/2) p^{m/2} g,
// using the root symmetry lambda <-> p/lambda.
struct SymbolicEngine {
    int g;
    int nv;               // a_1..a_g then p
    MultiPoly p;

    explicit SymbolicEngine(int g_) : g(g_), nv(g_ + 1), p(MultiPoly::var(g_ + 1, g_)) {}

    MultiPoly a(int i) const { // a_0 = 1
        return i == 0 ? MultiPoly::constant(nv, 1) : MultiPoly::var(nv, i - 1);
    }

    std::vector<MultiPoly> char_coeffs() const { // c_1..c_2g
        std::vector<MultiPoly> c;
        for (int j = 1; j <= g; ++j) c.push_back(a(j));
        for (int i = 1; i <= g; ++i) c.push_back(p.pow(static_cast<unsigned>(i)) * a(g - i));
        return c;
    }

    std::vector<MultiPoly> power_sums_sym(int upto) const {
        const auto c = char_coeffs();
        std::vector<MultiPoly> s(static_cast<size_t>(upto) + 1, MultiPoly(nv));
        for (int k = 1; k <= upto; ++k) {
            MultiPoly acc = c[static_cast<size_t>(k - 1)] * mpq_class(k);
            for (int i = 1; i < k; ++i) acc = acc + c[static_cast<size_t>(i - 1)] * s[static_cast<size_t>(k - i)];
            s[static_cast<size_t>(k)] = -acc;
        }
        return s;
    }

    MultiPoly folded_sum(int m, const std::vector<MultiPoly>& s) const {
        MultiPoly acc(nv);
        for (int i = 0; i < m / 2; ++i)
            acc = acc + s[static_cast<size_t>(m - 2 * i)] * p.pow(static_cast<unsigned>(i)) * mpq_class(binom(m, i));
        if (m % 2 == 0)
            acc = acc + p.pow(static_cast<unsigned>(m / 2)) * mpq_class(binom(m, m / 2) * g);
        return acc;
    }
};

} // namespace

std::vector<MultiPoly> beta_square_charpoly_symbolic(int g) {
    if (g < 1 || g > 8) throw invalid_input_error("beta_square_charpoly_symbolic: g must be in 1..8");
    SymbolicEngine eng(g);
    const auto s = eng.power_sums_sym(2 * g);
    std::vector<MultiPoly> sigma;
    for (int k = 1; k <= g; ++k) sigma.push_back(eng.folded_sum(2 * k, s));

    // Inverse Newton: k E_k = sum_{i=1..k} (-1)^(i-1) E_{k-i} sigma_i; C_j = (-1)^j E_j.
    std::vector<MultiPoly> e{MultiPoly::constant(eng.nv, 1)};
    for (int k = 1; k <= g; ++k) {
        MultiPoly acc(eng.nv);
        int sign = 1;
        for (int i = 1; i <= k; ++i) {
            acc = acc + e[static_cast<size_t>(k - i)] * sigma[static_cast<size_t>(i - 1)] * mpq_class(sign);
            sign = -sign;
        }
        e.push_back(acc * mpq_class(1, k));
    }
    std::vector<MultiPoly> c;
    for (int j = 1; j <= g; ++j) {
        MultiPoly cj = (j % 2) ? -e[static_cast<size_t>(j)] : e[static_cast<size_t>(j)];
        if (!cj.integer_coefficients())
            throw internal_error("beta_square_charpoly_symbolic: non-integer coefficients");
        c.push_back(cj);
    }
    return c;
}

MultiPoly gamma_symbolic(int g) {
    const auto c = beta_square_charpoly_symbolic(g);
    const int nv = g + 1;
    const MultiPoly four_p = MultiPoly::var(nv, g) * mpq_class(4);
    MultiPoly acc = four_p.pow(static_cast<unsigned>(g));
    for (int j = 1; j <= g; ++j)
        acc = acc + c[static_cast<size_t>(j - 1)] * four_p.pow(static_cast<unsigned>(g - j));
    if (g % 2) acc = -acc;
    for (int i = 0; i < g; ++i) {
        if (acc.degree_in(i) > 2)
            throw internal_error("gamma_symbolic: degree in a_" + std::to_string(i + 1) + " exceeds 2");
    }
    return acc;
}

namespace {

// Termwise triangle-inequality constant: each monomial coeff * prod a_i^{e_i} * p^{e_p}
// contributes |coeff| * prod C(2g,i)^{e_i} at sqrt(p)-weight sum(i e_i) + 2 e_p.
// Requires the polynomial to be weight-homogeneous; returns (constant, weight/2).
mpz_class termwise_constant(const MultiPoly& poly, int g, int expected_weight) {
    mpz_class total = 0;
    for (const auto& [mono, coeff] : poly.terms()) {
        int weight = 0;
        mpz_class factor = abs(mpq_class(coeff).get_num());
        if (coeff.get_den() != 1) throw internal_error("termwise_constant: non-integer coefficient");
        for (int i = 0; i < g; ++i) {
            const unsigned e = mono[static_cast<size_t>(i)];
            weight += (i + 1) * static_cast<int>(e);
            for (unsigned k = 0; k < e; ++k) factor *= binom(2 * g, i + 1);
        }
        weight += 2 * static_cast<int>(mono[static_cast<size_t>(g)]);
        if (weight != expected_weight)
            throw internal_error("termwise_constant: gamma polynomial not weight-homogeneous");
        total += factor;
    }
    return total;
}

} // namespace

mpz_class psi_constant(int g) {
    if (g < 1 || g > 8) throw invalid_input_error("psi_constant: g must be in 1..8");
    if (g <= 2) return termwise_constant(gamma_symbolic(g), g, 2 * g);
    const auto c = beta_square_charpoly_symbolic(g);
    mpz_class four_pow = 1;
    for (int i = 0; i < g; ++i) four_pow *= 4;
    mpz_class total = four_pow; // the (4p)^g term
    for (int j = 1; j <= g; ++j) {
        mpz_class f = 1;
        for (int i = 0; i < g - j; ++i) f *= 4;
        total += termwise_constant(c[static_cast<size_t>(j - 1)], g, 2 * j) * f;
    }
    return total;
}

mpz_class psi_bound(int g, const mpz_class& p) {
    mpz_class pk = 1;
    for (int i = 0; i < g; ++i) pk *= p;
    return psi_constant(g) * pk;
}

} // namespace frobcensus
