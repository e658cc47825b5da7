#ifndef FROBCENSUS_GSP_HPP
#define FROBCENSUS_GSP_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace frobcensus {

enum class GroupKind { Sp, GSp };

/// #Sp_{2g}(F_l) = l^{g^2} prod_{i=1..g} (l^{2i} - 1); GSp multiplies by (l-1).
mpz_class group_order(int g, int64_t l, GroupKind kind);

/// 2g x 2g matrices over Z/m packed 4 bits per entry into one 64-bit word,
/// row-major. m <= 15 (prime for group enumeration; composite moduli are
/// allowed for the CRT cross-checks on GL_2).
class MatDomain {
public:
    MatDomain(int g, uint32_t mod);

    int g() const { return g_; }
    int dim() const { return 2 * g_; }
    uint32_t mod() const { return mod_; }

    uint32_t get(uint64_t w, int i, int j) const {
        return static_cast<uint32_t>((w >> (4 * (i * dim() + j))) & 0xF);
    }
    uint64_t set(uint64_t w, int i, int j, uint32_t v) const {
        const int s = 4 * (i * dim() + j);
        return (w & ~(uint64_t(0xF) << s)) | (uint64_t(v) << s);
    }
    uint64_t identity() const;
    uint64_t mul(uint64_t a, uint64_t b) const;
    uint64_t inverse(uint64_t a) const; // throws when not invertible
    uint64_t from_entries(const std::vector<uint32_t>& e) const;
    std::vector<uint32_t> entries(uint64_t w) const;

    /// mu with M J M^t = mu J (a unit), or nullopt when M is not in GSp.
    std::optional<uint32_t> multiplicator(uint64_t m) const;

    /// Coefficients c_1..c_2g of det(xI - M) = x^2g + c_1 x^(2g-1) + ... + c_2g.
    std::vector<uint32_t> charpoly(uint64_t m) const;

    /// Symplectic transvections for a small spanning set plus (for GSp) a
    /// similitude scalar matrix; closure totals are always validated against
    /// the closed-form order, so generation failures cannot pass silently.
    std::vector<uint64_t> generators(GroupKind kind) const;

    std::string to_string(uint64_t w) const;

private:
    int g_;
    uint32_t mod_;
};

struct GspCensus {
    int g = 0;
    int64_t l = 0;
    GroupKind kind = GroupKind::Sp;
    mpz_class order_formula;
    uint64_t total = 0;
    std::map<uint32_t, uint64_t> buckets; // charpoly key (base-mod digits) -> count
    uint64_t shape_violations = 0;        // functional-equation failures; must be 0

    std::string to_json(std::optional<size_t> class_count = std::nullopt) const;
};

uint32_t encode_charpoly(const std::vector<uint32_t>& coeffs, uint32_t mod);
std::vector<uint32_t> decode_charpoly(uint32_t key, uint32_t mod, int count);

/// Enumerates Sp or GSp over F_l: brute force over all mod^(4g^2) words when
/// that count is <= 5*10^7, generator closure otherwise. The total is hard-
/// checked against group_order. Throws capacity_error beyond ~5*10^7 elements.
std::vector<uint64_t> enumerate_group(int g, int64_t l, GroupKind kind, int threads = 1);

/// Builds the census (bucket histogram + shape check) for an enumerated group.
GspCensus census_from_elements(int g, int64_t l, GroupKind kind,
                               const std::vector<uint64_t>& elems);

/// Characteristic-polynomial bucket bounds for a GSp census:
///   l^{2g^2} / ((l-1)(l+1)^(2g^2+g)) <= #C/#GSp <= l^{2g^2} / ((l-1)(l-1)^(2g^2+g)).
/// Returns a description of each violated bucket (empty on success).
std::vector<std::string> verify_charpoly_bounds(const GspCensus& census);
mpq_class charpoly_bucket_lower(int g, int64_t l);
mpq_class charpoly_bucket_upper(int g, int64_t l);

/// Conjugacy classes by orbit BFS under a generating set (orbits under the
/// generated group are exactly the classes).
size_t conjugacy_class_count(const MatDomain& dom, const std::vector<uint64_t>& elems,
                             const std::vector<uint64_t>& gens);

/// Independent small-group cross-check: #classes = #{(a,b): ab = ba} / |G|.
size_t conjugacy_class_count_burnside(const MatDomain& dom, const std::vector<uint64_t>& elems);

/// Full enumeration of GL_2(Z/m) = GSp_2(Z/m) for small (possibly composite) m,
/// used to verify the CRT product rule for class counts.
std::vector<uint64_t> enumerate_gl2(uint32_t mod);
std::vector<uint64_t> gl2_generators(uint32_t mod);

} // namespace frobcensus

#endif
