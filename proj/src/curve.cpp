#include "frobcensus/curve.hpp"

#include <sstream>

#include "frobcensus/errors.hpp"
#include "frobcensus/int_utils.hpp"

namespace frobcensus {

CurveModel::CurveModel(std::vector<mpz_class> f_coeffs, std::string label)
    : f_(std::move(f_coeffs)), label_(std::move(label)) {
    if (f_.degree() != 5 && f_.degree() != 6)
        throw invalid_input_error("CurveModel: deg f must be 5 or 6, got " +
                                  std::to_string(f_.degree()));
    disc_ = discriminant(f_);
    if (disc_ == 0) throw invalid_input_error("CurveModel: f must be squarefree (disc != 0)");
}

CurveModel CurveModel::parse(const std::string& coeff_list, std::string label) {
    std::vector<mpz_class> coeffs;
    std::stringstream ss(coeff_list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            coeffs.emplace_back(tok);
        } catch (const std::invalid_argument&) {
            throw invalid_input_error("CurveModel: bad coefficient '" + tok + "'");
        }
    }
    return CurveModel(std::move(coeffs), std::move(label));
}

Reduction reduction_type(const CurveModel& c, int64_t p) {
    if (!is_prime(p)) throw invalid_input_error("reduction_type: p must be prime");
    if (p == 2) return Reduction::Bad;
    const unsigned long up = static_cast<unsigned long>(p);
    if (mpz_divisible_ui_p(c.f().leading().get_mpz_t(), up)) return Reduction::Bad;
    if (mpz_divisible_ui_p(c.disc().get_mpz_t(), up)) return Reduction::Bad;
    return Reduction::Good;
}

namespace {

// f's coefficients reduced into [0, p), lowest degree first, padded to length deg+1.
std::vector<uint32_t> reduce_coeffs(const CurveModel& c, int64_t p) {
    std::vector<uint32_t> out(static_cast<size_t>(c.degree()) + 1);
    for (size_t i = 0; i < out.size(); ++i) {
        mpz_class r = c.f()[i] % p;
        if (r < 0) r += p;
        out[i] = static_cast<uint32_t>(r.get_ui());
    }
    return out;
}

// Legendre character table: chi[0] = 0, chi[x] = +/-1.
std::vector<int8_t> legendre_table(uint32_t p) {
    std::vector<int8_t> chi(p, -1);
    chi[0] = 0;
    for (uint64_t x = 1; x < p; ++x) chi[(x * x) % p] = 1;
    return chi;
}

uint32_t smallest_nonresidue(const std::vector<int8_t>& chi) {
    for (uint32_t x = 2; x < chi.size(); ++x)
        if (chi[x] == -1) return x;
    throw internal_error("no quadratic nonresidue found"); // impossible for odd prime p
}

struct Fp2 {
    uint32_t x, y; // x + y*theta, theta^2 = n
};

int64_t count_k1(const CurveModel& c, int64_t p64, int64_t* roots_out,
                 const std::vector<int8_t>& chi) {
    const uint32_t p = static_cast<uint32_t>(p64);
    const auto f = reduce_coeffs(c, p64);
    int64_t acc = 0, roots = 0;
    for (uint64_t x = 0; x < p; ++x) {
        uint64_t v = 0;
        for (size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % p;
        acc += chi[v];
        roots += (v == 0);
    }
    if (roots_out) *roots_out = roots;
    int64_t infinity = 1; // one smooth-model point above infinity for deg 5
    if (c.degree() == 6) infinity = (chi[f.back()] == 1) ? 2 : 0;
    return p64 + acc + infinity;
}

// Sum of chi_{p^2}(f(a + b*theta)) over a in F_p for fixed b, via a forward
// difference table in F_{p^2} (f has degree <= 6, so the 7th difference
// vanishes and each step costs deg many F_{p^2} additions).
int64_t char_sum_row(const std::vector<uint32_t>& f, uint32_t p, uint32_t n, uint32_t b,
                     const std::vector<int8_t>& chi) {
    const size_t d = f.size() - 1;
    std::vector<Fp2> diff(d + 1);
    // f(a + b*theta) for a = 0..d by Horner in F_{p^2}.
    for (uint32_t a = 0; a <= d; ++a) {
        uint64_t vx = 0, vy = 0;
        for (size_t i = f.size(); i-- > 0;) {
            const uint64_t nx = (vx * a + n * ((vy * b) % p) + f[i]) % p;
            const uint64_t ny = (vx * b + vy * a) % p;
            vx = nx;
            vy = ny;
        }
        diff[a] = {static_cast<uint32_t>(vx), static_cast<uint32_t>(vy)};
    }
    for (size_t r = 1; r <= d; ++r) {
        for (size_t i = d; i >= r; --i) {
            diff[i].x = (diff[i].x + p - diff[i - 1].x) % p;
            diff[i].y = (diff[i].y + p - diff[i - 1].y) % p;
        }
    }

    int64_t acc = 0;
    for (uint32_t a = 0; a < p; ++a) {
        const uint64_t vx = diff[0].x, vy = diff[0].y;
        // chi_{p^2}(v) = chi_p(N(v)), N(x + y*theta) = x^2 - n y^2.
        const uint64_t norm = (vx * vx % p + p - n * (vy * vy % p) % p) % p;
        acc += chi[norm];
        for (size_t j = 0; j < d; ++j) {
            uint32_t sx = diff[j].x + diff[j + 1].x;
            uint32_t sy = diff[j].y + diff[j + 1].y;
            diff[j].x = sx >= p ? sx - p : sx;
            diff[j].y = sy >= p ? sy - p : sy;
        }
    }
    return acc;
}

int64_t count_k2(const CurveModel& c, int64_t p64, const std::vector<int8_t>& chi) {
    const uint32_t p = static_cast<uint32_t>(p64);
    const uint32_t n = smallest_nonresidue(chi);
    const auto f = reduce_coeffs(c, p64);

    int64_t roots_fp = 0;
    count_k1(c, p64, &roots_fp, chi);

    // u in F_p: f(u) is an F_p element, always a square in F_{p^2} unless zero.
    int64_t acc = p64 - roots_fp;
    // Frobenius symmetry: f(a - b*theta) = f(a + b*theta)^p has the same
    // character value, so rows b and p-b agree.
    for (uint32_t b = 1; b <= (p - 1) / 2; ++b) acc += 2 * char_sum_row(f, p, n, b, chi);

    // Every element of F_p^x is a square in F_{p^2}, so a degree-6 model always
    // has both points at infinity over F_{p^2}.
    const int64_t infinity = (c.degree() == 6) ? 2 : 1;
    return p64 * p64 + acc + infinity;
}

} // namespace

int64_t count_points(const CurveModel& c, int64_t p, int k) {
    if (reduction_type(c, p) != Reduction::Good)
        throw invalid_input_error("count_points: p = " + std::to_string(p) + " is a bad prime");
    if (k != 1 && k != 2) throw invalid_input_error("count_points: k must be 1 or 2");
    const auto chi = legendre_table(static_cast<uint32_t>(p));
    return k == 1 ? count_k1(c, p, nullptr, chi) : count_k2(c, p, chi);
}

namespace {

// Arithmetic in F_{p^k} = F_p[t]/(m), elements as coefficient vectors.
struct FieldExt {
    uint32_t p;
    int k;
    std::vector<uint32_t> m; // monic modulus, length k+1

    std::vector<uint32_t> mul(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) const {
        std::vector<uint64_t> prod(static_cast<size_t>(2 * k - 1), 0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                prod[static_cast<size_t>(i + j)] += static_cast<uint64_t>(a[static_cast<size_t>(i)]) * b[static_cast<size_t>(j)];
        for (auto& v : prod) v %= p;
        for (int i = 2 * k - 2; i >= k; --i) {
            const uint64_t c = prod[static_cast<size_t>(i)];
            if (c == 0) continue;
            prod[static_cast<size_t>(i)] = 0;
            for (int j = 0; j < k; ++j) {
                // t^i = t^(i-k) * (t^k) = -t^(i-k) * (m - t^k)
                prod[static_cast<size_t>(i - k + j)] =
                    (prod[static_cast<size_t>(i - k + j)] + c * (p - m[static_cast<size_t>(j)])) % p;
            }
        }
        return std::vector<uint32_t>(prod.begin(), prod.begin() + k);
    }

    size_t encode(const std::vector<uint32_t>& a) const {
        size_t idx = 0;
        for (int i = k - 1; i >= 0; --i) idx = idx * p + a[static_cast<size_t>(i)];
        return idx;
    }

    std::vector<uint32_t> decode(size_t idx) const {
        std::vector<uint32_t> a(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) {
            a[static_cast<size_t>(i)] = static_cast<uint32_t>(idx % p);
            idx /= p;
        }
        return a;
    }
};

bool has_root(const std::vector<uint32_t>& poly, uint32_t p) {
    for (uint64_t x = 0; x < p; ++x) {
        uint64_t v = 0;
        for (size_t i = poly.size(); i-- > 0;) v = (v * x + poly[i]) % p;
        if (v == 0) return true;
    }
    return false;
}

// Remainder of a monic quartic modulo a monic quadratic, both over F_p.
bool divisible_by_quadratic(const std::vector<uint32_t>& quartic, uint32_t u, uint32_t v, uint32_t p) {
    std::vector<uint64_t> r(quartic.begin(), quartic.end());
    for (int i = 4; i >= 2; --i) {
        const uint64_t c = r[static_cast<size_t>(i)] % p;
        if (c == 0) continue;
        r[static_cast<size_t>(i)] = 0;
        r[static_cast<size_t>(i - 1)] += c * (p - u);
        r[static_cast<size_t>(i - 2)] += c * (p - v);
        r[static_cast<size_t>(i - 1)] %= p;
        r[static_cast<size_t>(i - 2)] %= p;
    }
    return r[0] % p == 0 && r[1] % p == 0;
}

std::vector<uint32_t> find_irreducible(uint32_t p, int k, const std::vector<int8_t>& chi) {
    if (k == 2) {
        uint32_t n = smallest_nonresidue(chi);
        return {p - n, 0, 1}; // t^2 - n
    }
    if (k == 3) {
        // A cubic over F_p with no roots is irreducible.
        for (uint32_t c = 0; c < p; ++c)
            for (uint32_t d = 1; d < p; ++d) {
                std::vector<uint32_t> m{d, c, 0, 1};
                if (!has_root(m, p)) return m;
            }
        throw internal_error("no irreducible cubic found");
    }
    // k == 4: no roots and no monic irreducible quadratic factor.
    for (uint32_t c2 = 0; c2 < p; ++c2)
        for (uint32_t c1 = 0; c1 < p; ++c1)
            for (uint32_t c0 = 1; c0 < p; ++c0) {
                std::vector<uint32_t> m{c0, c1, c2, 0, 1};
                if (has_root(m, p)) continue;
                bool composite = false;
                for (uint32_t u = 0; u < p && !composite; ++u)
                    for (uint32_t v = 0; v < p && !composite; ++v) {
                        const uint32_t disc = ((uint64_t)u * u % p + p - 4 * (uint64_t)v % p) % p;
                        if (disc != 0 && chi[disc] != -1) continue; // reducible quadratic
                        if (disc == 0) continue;
                        if (divisible_by_quadratic(m, u, v, p)) composite = true;
                    }
                if (!composite) return m;
            }
    throw internal_error("no irreducible quartic found");
}

} // namespace

int64_t count_points_slow(const CurveModel& c, int64_t p, int k) {
    if (reduction_type(c, p) != Reduction::Good)
        throw invalid_input_error("count_points_slow: bad prime");
    if (k < 1 || k > 4) throw invalid_input_error("count_points_slow: k must be in 1..4");
    double size = 1;
    for (int i = 0; i < k; ++i) size *= static_cast<double>(p);
    if (size > 1e7) throw capacity_error("count_points_slow: p^k exceeds 10^7");

    const uint32_t up = static_cast<uint32_t>(p);
    const auto chi = legendre_table(up);
    const auto f = reduce_coeffs(c, p);

    if (k == 1) {
        int64_t affine = 0;
        for (uint64_t x = 0; x < up; ++x) {
            uint64_t v = 0;
            for (size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % up;
            affine += (v == 0) ? 1 : (chi[v] == 1 ? 2 : 0);
        }
        const int64_t infinity = c.degree() == 5 ? 1 : (chi[f.back()] == 1 ? 2 : 0);
        return affine + infinity;
    }

    FieldExt field{up, k, find_irreducible(up, k, chi)};
    const size_t q = static_cast<size_t>(size);

    std::vector<bool> is_square(q, false);
    for (size_t idx = 0; idx < q; ++idx) {
        const auto e = field.decode(idx);
        is_square[field.encode(field.mul(e, e))] = true;
    }

    int64_t affine = 0;
    const std::vector<uint32_t> zero(static_cast<size_t>(k), 0);
    for (size_t idx = 0; idx < q; ++idx) {
        const auto u = field.decode(idx);
        std::vector<uint32_t> v = zero;
        for (size_t i = f.size(); i-- > 0;) {
            v = field.mul(v, u);
            v[0] = (v[0] + f[i]) % up;
        }
        const size_t ve = field.encode(v);
        affine += (ve == 0) ? 1 : (is_square[ve] ? 2 : 0);
    }
    int64_t infinity = 1;
    if (c.degree() == 6) {
        std::vector<uint32_t> lc = zero;
        lc[0] = f.back();
        infinity = is_square[field.encode(lc)] ? 2 : 0;
    }
    return affine + infinity;
}

FrobCoeffs frobenius_coeffs(int64_t p, int64_t n1, int64_t n2) {
    const int64_t t1 = p + 1 - n1;
    const int64_t num = n2 + n1 * (n1 - 2 * p - 2);
    if (num % 2 != 0)
        throw internal_error("frobenius_coeffs: odd a2 numerator at p = " + std::to_string(p));
    const int64_t a2 = p + num / 2;
    if (t1 * t1 > 16 * p || a2 > 6 * p || a2 < -6 * p)
        throw internal_error("frobenius_coeffs: Weil bound violated at p = " + std::to_string(p) +
                             " (t1 = " + std::to_string(t1) + ", a2 = " + std::to_string(a2) + ")");
    return {t1, a2};
}

IntPoly weil_poly(int64_t t1, int64_t a2, int64_t p) {
    return IntPoly(std::vector<mpz_class>{mpz_class(p) * p, mpz_class(-t1) * p, mpz_class(a2),
                                          mpz_class(-t1), mpz_class(1)});
}

} // namespace frobcensus
