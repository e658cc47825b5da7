#include "frobcensus/gsp.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "frobcensus/errors.hpp"
#include "frobcensus/int_utils.hpp"

namespace frobcensus {

mpz_class group_order(int g, int64_t l, GroupKind kind) {
    if (g < 1) throw invalid_input_error("group_order: g must be >= 1");
    if (!is_prime(l)) throw invalid_input_error("group_order: l must be prime");
    mpz_class order = 1;
    for (int i = 0; i < g * g; ++i) order *= l;
    mpz_class lp = 1;
    for (int i = 1; i <= g; ++i) {
        lp = 1;
        for (int k = 0; k < 2 * i; ++k) lp *= l;
        order *= lp - 1;
    }
    if (kind == GroupKind::GSp) order *= l - 1;
    return order;
}

MatDomain::MatDomain(int g, uint32_t mod) : g_(g), mod_(mod) {
    if (g != 1 && g != 2) throw invalid_input_error("MatDomain: g must be 1 or 2");
    if (mod < 2 || mod > 15)
        throw capacity_error("MatDomain: modulus must be <= 15 (4-bit packing)");
}

uint64_t MatDomain::identity() const {
    uint64_t w = 0;
    for (int i = 0; i < dim(); ++i) w = set(w, i, i, 1);
    return w;
}

uint64_t MatDomain::from_entries(const std::vector<uint32_t>& e) const {
    uint64_t w = 0;
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) w = set(w, i, j, e[static_cast<size_t>(i * dim() + j)] % mod_);
    return w;
}

std::vector<uint32_t> MatDomain::entries(uint64_t w) const {
    std::vector<uint32_t> e(static_cast<size_t>(dim() * dim()));
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) e[static_cast<size_t>(i * dim() + j)] = get(w, i, j);
    return e;
}

uint64_t MatDomain::mul(uint64_t a, uint64_t b) const {
    const int n = dim();
    uint32_t A[16], B[16];
    for (int i = 0; i < n * n; ++i) {
        A[i] = static_cast<uint32_t>((a >> (4 * i)) & 0xF);
        B[i] = static_cast<uint32_t>((b >> (4 * i)) & 0xF);
    }
    uint64_t w = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            uint32_t acc = 0;
            for (int k = 0; k < n; ++k) acc += A[i * n + k] * B[k * n + j];
            w |= uint64_t(acc % mod_) << (4 * (i * n + j));
        }
    }
    return w;
}

namespace {

uint32_t mod_inverse(uint32_t a, uint32_t m) {
    int64_t t = 0, newt = 1, r = m, newr = a % m;
    while (newr != 0) {
        const int64_t q = r / newr;
        const int64_t t2 = t - q * newt;
        t = newt;
        newt = t2;
        const int64_t r2 = r - q * newr;
        r = newr;
        newr = r2;
    }
    if (r != 1) throw invalid_input_error("mod_inverse: not a unit");
    return static_cast<uint32_t>(t < 0 ? t + m : t);
}

} // namespace

uint64_t MatDomain::inverse(uint64_t a) const {
    const int n = dim();
    const uint32_t m = mod_;
    if (n == 2) {
        // Adjugate over det; works for composite moduli when det is a unit.
        const uint32_t a00 = get(a, 0, 0), a01 = get(a, 0, 1), a10 = get(a, 1, 0), a11 = get(a, 1, 1);
        const uint32_t det = (a00 * a11 % m + m * m - a01 * a10 % m) % m;
        const uint32_t dinv = mod_inverse(det, m);
        uint64_t w = 0;
        w = set(w, 0, 0, a11 * dinv % m);
        w = set(w, 0, 1, (m - a01 % m) % m * dinv % m);
        w = set(w, 1, 0, (m - a10 % m) % m * dinv % m);
        w = set(w, 1, 1, a00 * dinv % m);
        return w;
    }
    // Gauss-Jordan; requires a prime modulus.
    if (!is_prime(static_cast<int64_t>(m)))
        throw invalid_input_error("MatDomain::inverse: 4x4 inverse needs a prime modulus");
    uint32_t mat[4][8] = {};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) mat[i][j] = get(a, i, j);
        mat[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (mat[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) throw invalid_input_error("MatDomain::inverse: singular matrix");
        if (pivot != col)
            for (int j = 0; j < 2 * n; ++j) std::swap(mat[pivot][j], mat[col][j]);
        const uint32_t inv = mod_inverse(mat[col][col], m);
        for (int j = 0; j < 2 * n; ++j) mat[col][j] = mat[col][j] * inv % m;
        for (int r = 0; r < n; ++r) {
            if (r == col || mat[r][col] == 0) continue;
            const uint32_t f = mat[r][col];
            for (int j = 0; j < 2 * n; ++j) mat[r][j] = (mat[r][j] + (m - f) * mat[col][j]) % m;
        }
    }
    uint64_t w = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w = set(w, i, j, mat[i][n + j]);
    return w;
}

namespace {

// <u, v> = sum_{k<g} (u_k v_{k+g} - u_{k+g} v_k) mod m, the standard form for
// J = (0 I_g; -I_g 0).
uint32_t symplectic_pair(const uint32_t* u, const uint32_t* v, int gg, uint32_t m) {
    uint32_t acc = 0;
    for (int k = 0; k < gg; ++k) {
        acc += u[k] * v[k + gg] % m;
        acc += m - (u[k + gg] * v[k] % m);
    }
    return acc % m;
}

} // namespace

std::optional<uint32_t> MatDomain::multiplicator(uint64_t w) const {
    const int n = dim();
    uint32_t rows[4][4];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[i][j] = get(w, i, j);

    std::optional<uint32_t> mu;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const uint32_t v = symplectic_pair(rows[i], rows[j], g_, mod_);
            const bool is_pair = (j == i + g_); // J entry 1 at (i, i+g)
            if (is_pair) {
                if (mu && *mu != v) return std::nullopt;
                mu = v;
            } else if (v != 0) {
                return std::nullopt;
            }
        }
    }
    if (!mu) return std::nullopt;
    // mu must be a unit.
    uint32_t a = *mu, b = mod_;
    while (b) { const uint32_t t = a % b; a = b; b = t; }
    if (a != 1) return std::nullopt;
    return mu;
}

std::vector<uint32_t> MatDomain::charpoly(uint64_t w) const {
    const int n = dim();
    const uint32_t m = mod_;
    uint32_t a[4][4];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = get(w, i, j);

    auto neg = [&](uint32_t x) { return (m - x % m) % m; };
    if (n == 2) {
        const uint32_t tr = (a[0][0] + a[1][1]) % m;
        const uint32_t det = (a[0][0] * a[1][1] % m + neg(a[0][1] * a[1][0] % m)) % m;
        return {neg(tr), det};
    }
    // char(x) = x^4 - E1 x^3 + E2 x^2 - E3 x + E4 with E_k the sums of
    // principal k x k minors.
    auto det2 = [&](int r1, int r2, int c1, int c2) {
        return (a[r1][c1] * a[r2][c2] % m + neg(a[r1][c2] * a[r2][c1] % m)) % m;
    };
    auto det3 = [&](int r1, int r2, int r3) {
        uint32_t acc = a[r1][r1] * det2(r2, r3, r2, r3) % m;
        acc = (acc + neg(a[r1][r2] * ((a[r2][r1] * a[r3][r3] % m + neg(a[r2][r3] * a[r3][r1] % m)) % m) % m)) % m;
        acc = (acc + a[r1][r3] * ((a[r2][r1] * a[r3][r2] % m + neg(a[r2][r2] * a[r3][r1] % m)) % m)) % m;
        return acc;
    };
    const uint32_t e1 = (a[0][0] + a[1][1] + a[2][2] + a[3][3]) % m;
    uint32_t e2 = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) e2 = (e2 + det2(i, j, i, j)) % m;
    uint32_t e3 = 0;
    e3 = (e3 + det3(0, 1, 2)) % m;
    e3 = (e3 + det3(0, 1, 3)) % m;
    e3 = (e3 + det3(0, 2, 3)) % m;
    e3 = (e3 + det3(1, 2, 3)) % m;
    // E4 = det, by expansion along row 0 (columns only shift inside det3-like terms);
    // use cofactor expansion with explicit 3x3 dets on rows 1..3.
    auto det3_cols = [&](int c1, int c2, int c3) {
        uint32_t acc = a[1][c1] * det2(2, 3, c2, c3) % m;
        acc = (acc + neg(a[1][c2] * det2(2, 3, c1, c3) % m)) % m;
        acc = (acc + a[1][c3] * det2(2, 3, c1, c2) % m) % m;
        return acc;
    };
    uint32_t e4 = 0;
    e4 = (e4 + a[0][0] * det3_cols(1, 2, 3) % m) % m;
    e4 = (e4 + neg(a[0][1] * det3_cols(0, 2, 3) % m)) % m;
    e4 = (e4 + a[0][2] * det3_cols(0, 1, 3) % m) % m;
    e4 = (e4 + neg(a[0][3] * det3_cols(0, 1, 2) % m)) % m;

    return {neg(e1), e2, neg(e3), e4};
}

std::vector<uint64_t> MatDomain::generators(GroupKind kind) const {
    const int n = dim();
    const uint32_t m = mod_;
    // Transvection T_v: x -> x + <x, v> v, as a matrix: column j = e_j + <e_j, v> v.
    auto transvection = [&](const std::vector<uint32_t>& v) {
        uint64_t w = 0;
        for (int j = 0; j < n; ++j) {
            uint32_t ej[4] = {0, 0, 0, 0};
            ej[j] = 1;
            const uint32_t pair = symplectic_pair(ej, v.data(), g_, m);
            for (int i = 0; i < n; ++i) {
                uint32_t entry = ((i == j) ? 1u : 0u) + pair * v[static_cast<size_t>(i)];
                w = set(w, i, j, entry % m);
            }
        }
        return w;
    };

    std::vector<std::vector<uint32_t>> vs;
    for (int i = 0; i < n; ++i) {
        std::vector<uint32_t> v(static_cast<size_t>(n), 0);
        v[static_cast<size_t>(i)] = 1;
        vs.push_back(v);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<uint32_t> v(static_cast<size_t>(n), 0);
            v[static_cast<size_t>(i)] = 1;
            v[static_cast<size_t>(j)] = 1;
            vs.push_back(v);
            if (m > 2) {
                v[static_cast<size_t>(j)] = m - 1; // e_i - e_j
                vs.push_back(v);
            }
        }

    std::vector<uint64_t> gens;
    for (const auto& v : vs) gens.push_back(transvection(v));

    if (kind == GroupKind::GSp && m > 2) {
        // Smallest primitive root as the similitude factor.
        uint32_t root = 0;
        for (uint32_t cand = 2; cand < m; ++cand) {
            uint32_t x = 1;
            int ord = 0;
            do {
                x = x * cand % m;
                ++ord;
            } while (x != 1);
            if (static_cast<uint32_t>(ord) == m - 1) { root = cand; break; }
        }
        uint64_t d = 0;
        for (int i = 0; i < g_; ++i) d = set(d, i, i, root);
        for (int i = g_; i < n; ++i) d = set(d, i, i, 1);
        gens.push_back(d);
    }
    return gens;
}

std::string MatDomain::to_string(uint64_t w) const {
    std::ostringstream out;
    for (int i = 0; i < dim(); ++i) {
        out << (i ? "; " : "[");
        for (int j = 0; j < dim(); ++j) out << (j ? " " : "") << get(w, i, j);
    }
    out << "]";
    return out.str();
}

namespace {

// Brute-force scan of all mod^(dim^2) candidate words on [begin, end).
std::vector<uint64_t> brute_scan(const MatDomain& dom, GroupKind kind, uint64_t begin,
                                 uint64_t end) {
    const int n = dom.dim();
    const int cells = n * n;
    const uint32_t m = dom.mod();
    const int gg = dom.g();

    std::vector<uint32_t> digit(static_cast<size_t>(cells), 0);
    uint64_t idx = begin;
    for (int i = 0; i < cells; ++i) {
        digit[static_cast<size_t>(i)] = static_cast<uint32_t>(idx % m);
        idx /= m;
    }

    std::vector<uint64_t> found;
    for (uint64_t it = begin; it < end; ++it) {
        const uint32_t* row = digit.data();
        // digits are laid out as entries (i,j) at index i*n+j
        bool ok = true;
        std::optional<uint32_t> mu;
        for (int i = 0; i < n && ok; ++i) {
            for (int j = i + 1; j < n && ok; ++j) {
                const uint32_t v = symplectic_pair(row + i * n, row + j * n, gg, m);
                if (j == i + gg) {
                    if (mu && *mu != v) ok = false;
                    mu = v;
                } else if (v != 0) {
                    ok = false;
                }
            }
        }
        if (ok && mu) {
            uint32_t a = *mu, b = m;
            while (b) { const uint32_t t = a % b; a = b; b = t; }
            if (a == 1 && (kind == GroupKind::GSp || *mu == 1)) {
                uint64_t w = 0;
                for (int c = 0; c < cells; ++c) w |= uint64_t(digit[static_cast<size_t>(c)]) << (4 * c);
                found.push_back(w);
            }
        }
        // odometer increment
        for (int c = 0; c < cells; ++c) {
            if (++digit[static_cast<size_t>(c)] < m) break;
            digit[static_cast<size_t>(c)] = 0;
        }
    }
    return found;
}

std::vector<uint64_t> enumerate_brute(const MatDomain& dom, GroupKind kind, uint64_t space,
                                      int threads) {
    threads = std::max(1, threads);
    if (threads == 1) return brute_scan(dom, kind, 0, space);
    std::vector<std::vector<uint64_t>> parts(static_cast<size_t>(threads));
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        const uint64_t lo = space * static_cast<uint64_t>(t) / static_cast<uint64_t>(threads);
        const uint64_t hi = space * static_cast<uint64_t>(t + 1) / static_cast<uint64_t>(threads);
        pool.emplace_back([&, t, lo, hi]() { parts[static_cast<size_t>(t)] = brute_scan(dom, kind, lo, hi); });
    }
    for (auto& th : pool) th.join();
    std::vector<uint64_t> all;
    for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    return all;
}

// Open-addressing hash set for packed words. Entries never equal the empty
// sentinel because 4-bit cells hold values < 15.
class WordSet {
public:
    explicit WordSet(size_t expected) {
        size_t cap = 16;
        while (cap < expected * 2) cap <<= 1;
        slots_.assign(cap, kEmpty);
        mask_ = cap - 1;
    }
    bool insert(uint64_t w) {
        size_t i = hash(w) & mask_;
        for (;;) {
            if (slots_[i] == kEmpty) {
                slots_[i] = w;
                ++size_;
                return true;
            }
            if (slots_[i] == w) return false;
            i = (i + 1) & mask_;
        }
    }
    size_t size() const { return size_; }

private:
    static constexpr uint64_t kEmpty = ~uint64_t(0);
    static size_t hash(uint64_t w) {
        w ^= w >> 33;
        w *= 0xff51afd7ed558ccdULL;
        w ^= w >> 33;
        w *= 0xc4ceb9fe1a85ec53ULL;
        w ^= w >> 33;
        return static_cast<size_t>(w);
    }
    std::vector<uint64_t> slots_;
    size_t mask_ = 0;
    size_t size_ = 0;
};

std::vector<uint64_t> enumerate_closure(const MatDomain& dom, GroupKind kind,
                                        const mpz_class& expected) {
    const auto gens = dom.generators(kind);
    WordSet seen(expected.get_ui());
    std::vector<uint64_t> frontier;
    frontier.reserve(expected.get_ui());
    frontier.push_back(dom.identity());
    seen.insert(frontier[0]);
    for (size_t head = 0; head < frontier.size(); ++head) {
        const uint64_t x = frontier[head];
        for (const uint64_t gen : gens) {
            const uint64_t y = dom.mul(x, gen);
            if (seen.insert(y)) frontier.push_back(y);
        }
    }
    return frontier;
}

} // namespace

std::vector<uint64_t> enumerate_group(int g, int64_t l, GroupKind kind, int threads) {
    const MatDomain dom(g, static_cast<uint32_t>(l));
    if (!is_prime(l)) throw invalid_input_error("enumerate_group: l must be prime");
    const mpz_class order = group_order(g, l, kind);
    if (order > 50'000'000)
        throw capacity_error("enumerate_group: order " + order.get_str() + " exceeds capacity");

    const int cells = dom.dim() * dom.dim();
    double space_d = 1;
    for (int i = 0; i < cells; ++i) space_d *= static_cast<double>(l);

    std::vector<uint64_t> elems;
    if (space_d <= 5e7) {
        elems = enumerate_brute(dom, kind, static_cast<uint64_t>(space_d), threads);
        std::sort(elems.begin(), elems.end());
    } else {
        elems = enumerate_closure(dom, kind, order);
        std::sort(elems.begin(), elems.end());
    }
    if (mpz_class(static_cast<unsigned long>(elems.size())) != order)
        throw internal_error("enumerate_group: enumeration total " + std::to_string(elems.size()) +
                             " != closed form " + order.get_str());
    return elems;
}

uint32_t encode_charpoly(const std::vector<uint32_t>& coeffs, uint32_t mod) {
    uint32_t key = 0;
    for (size_t i = coeffs.size(); i-- > 0;) key = key * mod + coeffs[i];
    return key;
}

std::vector<uint32_t> decode_charpoly(uint32_t key, uint32_t mod, int count) {
    std::vector<uint32_t> coeffs(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        coeffs[static_cast<size_t>(i)] = key % mod;
        key /= mod;
    }
    return coeffs;
}

GspCensus census_from_elements(int g, int64_t l, GroupKind kind,
                               const std::vector<uint64_t>& elems) {
    const MatDomain dom(g, static_cast<uint32_t>(l));
    GspCensus census;
    census.g = g;
    census.l = l;
    census.kind = kind;
    census.order_formula = group_order(g, l, kind);
    census.total = elems.size();

    const uint32_t m = dom.mod();
    for (const uint64_t w : elems) {
        const auto mu = dom.multiplicator(w);
        if (!mu) throw internal_error("census_from_elements: non-GSp element enumerated");
        const auto cp = dom.charpoly(w);
        // Weil-style functional equation with p replaced by mu:
        // coeff[g-i] = mu^i coeff[g+i], i.e. c_{g+i} = mu^i c_{g-i} (c_0 = 1).
        uint32_t mupow = 1;
        for (int i = 1; i <= g; ++i) {
            mupow = mupow * *mu % m;
            const uint32_t lhs = cp[static_cast<size_t>(g + i - 1)];
            const uint32_t rhs = (i == g) ? mupow : mupow * cp[static_cast<size_t>(g - i - 1)] % m;
            if (lhs != rhs) ++census.shape_violations;
        }
        ++census.buckets[encode_charpoly(cp, m)];
    }

    uint64_t total = 0;
    for (const auto& [k, c] : census.buckets) total += c;
    if (total != census.total)
        throw internal_error("census_from_elements: bucket counts do not sum to the total");
    return census;
}

mpq_class charpoly_bucket_lower(int g, int64_t l) {
    mpz_class num = 1;
    for (int i = 0; i < 2 * g * g; ++i) num *= l;
    mpz_class den = l - 1;
    for (int i = 0; i < 2 * g * g + g; ++i) den *= l + 1;
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

mpq_class charpoly_bucket_upper(int g, int64_t l) {
    mpz_class num = 1;
    for (int i = 0; i < 2 * g * g; ++i) num *= l;
    mpz_class den = l - 1;
    for (int i = 0; i < 2 * g * g + g; ++i) den *= l - 1;
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

std::vector<std::string> verify_charpoly_bounds(const GspCensus& census) {
    if (census.kind != GroupKind::GSp)
        throw invalid_input_error("verify_charpoly_bounds: bounds apply to GSp censuses");
    const mpq_class lower = charpoly_bucket_lower(census.g, census.l);
    const mpq_class upper = charpoly_bucket_upper(census.g, census.l);
    const mpq_class qc_max = upper - lower;
    std::vector<std::string> violations;
    for (const auto& [key, count] : census.buckets) {
        mpq_class ratio(static_cast<unsigned long>(count),
                        static_cast<unsigned long>(census.total));
        ratio.canonicalize();
        const mpq_class q_c = ratio - lower;
        if (ratio < lower || ratio > upper || q_c < 0 || q_c > qc_max) {
            violations.push_back("bucket " + std::to_string(key) + " ratio " + ratio.get_str() +
                                 " outside [" + lower.get_str() + ", " + upper.get_str() + "]");
        }
    }
    return violations;
}

size_t conjugacy_class_count(const MatDomain& dom, const std::vector<uint64_t>& elems,
                             const std::vector<uint64_t>& gens) {
    std::vector<uint64_t> sorted = elems;
    std::sort(sorted.begin(), sorted.end());
    auto index_of = [&](uint64_t w) -> size_t {
        const auto it = std::lower_bound(sorted.begin(), sorted.end(), w);
        if (it == sorted.end() || *it != w)
            throw internal_error("conjugacy_class_count: conjugate escaped the element set");
        return static_cast<size_t>(it - sorted.begin());
    };
    std::vector<uint64_t> gen_inv;
    for (uint64_t gen : gens) gen_inv.push_back(dom.inverse(gen));

    std::vector<bool> visited(sorted.size(), false);
    std::vector<uint64_t> queue;
    size_t classes = 0;
    for (size_t seed = 0; seed < sorted.size(); ++seed) {
        if (visited[seed]) continue;
        ++classes;
        visited[seed] = true;
        queue.clear();
        queue.push_back(sorted[seed]);
        for (size_t head = 0; head < queue.size(); ++head) {
            const uint64_t x = queue[head];
            for (size_t gi = 0; gi < gens.size(); ++gi) {
                const uint64_t y = dom.mul(dom.mul(gens[gi], x), gen_inv[gi]);
                const size_t idx = index_of(y);
                if (!visited[idx]) {
                    visited[idx] = true;
                    queue.push_back(sorted[idx]);
                }
            }
        }
    }
    return classes;
}

size_t conjugacy_class_count_burnside(const MatDomain& dom, const std::vector<uint64_t>& elems) {
    if (elems.size() > 5000)
        throw capacity_error("conjugacy_class_count_burnside: group too large for O(n^2) count");
    uint64_t commuting = 0;
    for (const uint64_t a : elems)
        for (const uint64_t b : elems)
            if (dom.mul(a, b) == dom.mul(b, a)) ++commuting;
    if (commuting % elems.size() != 0)
        throw internal_error("conjugacy_class_count_burnside: count not divisible by |G|");
    return static_cast<size_t>(commuting / elems.size());
}

std::vector<uint64_t> enumerate_gl2(uint32_t mod) {
    const MatDomain dom(1, mod);
    std::vector<uint64_t> out;
    for (uint32_t a = 0; a < mod; ++a)
        for (uint32_t b = 0; b < mod; ++b)
            for (uint32_t c = 0; c < mod; ++c)
                for (uint32_t d = 0; d < mod; ++d) {
                    const uint32_t det = (a * d % mod + mod * mod - b * c % mod) % mod;
                    uint32_t x = det, y = mod;
                    while (y) { const uint32_t t = x % y; x = y; y = t; }
                    if (x != 1) continue;
                    out.push_back(dom.from_entries({a, b, c, d}));
                }
    return out;
}

std::vector<uint64_t> gl2_generators(uint32_t mod) {
    const MatDomain dom(1, mod);
    std::vector<uint64_t> gens{dom.from_entries({1, 1, 0, 1}), dom.from_entries({1, 0, 1, 1})};
    for (uint32_t u = 2; u < mod; ++u) {
        uint32_t x = u, y = mod;
        while (y) { const uint32_t t = x % y; x = y; y = t; }
        if (x == 1) gens.push_back(dom.from_entries({u, 0, 0, 1}));
    }
    return gens;
}

std::string GspCensus::to_json(std::optional<size_t> class_count) const {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["g"] = g;
    j["l"] = l;
    j["kind"] = kind == GroupKind::Sp ? "sp" : "gsp";
    j["order_formula"] = order_formula.get_str();
    j["total"] = total;
    j["bucket_count"] = buckets.size();
    j["shape_violations"] = shape_violations;

    uint64_t bmin = UINT64_MAX, bmax = 0;
    for (const auto& [k, c] : buckets) {
        bmin = std::min(bmin, c);
        bmax = std::max(bmax, c);
    }
    j["bucket_min"] = buckets.empty() ? 0 : bmin;
    j["bucket_max"] = buckets.empty() ? 0 : bmax;

    // Top-k buckets only; the full histogram can be huge.
    std::vector<std::pair<uint64_t, uint32_t>> by_count;
    for (const auto& [k, c] : buckets) by_count.emplace_back(c, k);
    std::sort(by_count.rbegin(), by_count.rend());
    nlohmann::ordered_json top = nlohmann::ordered_json::array();
    for (size_t i = 0; i < std::min<size_t>(8, by_count.size()); ++i) {
        nlohmann::ordered_json row;
        row["charpoly_coeffs"] = decode_charpoly(by_count[i].second, static_cast<uint32_t>(l), 2 * g);
        row["count"] = by_count[i].first;
        top.push_back(row);
    }
    j["top_buckets"] = top;
    if (class_count) j["class_count"] = *class_count;
    return j.dump(2);
}

} // namespace frobcensus
