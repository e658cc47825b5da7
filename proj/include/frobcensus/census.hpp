#ifndef FROBCENSUS_CENSUS_HPP
#define FROBCENSUS_CENSUS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "frobcensus/curve.hpp"
#include "frobcensus/frobenius.hpp"

namespace frobcensus {

/// Per-prime census row. Counting fields are present for good primes,
/// field-theoretic fields only for ordinary simple ones.
struct FrobeniusRecord {
    int64_t p = 0;
    ReductionClass cls = ReductionClass::Bad;
    std::optional<int64_t> n1, n2, t1, a2;
    std::optional<mpz_class> delta;
    std::optional<long> d0;
    std::optional<mpz_class> gamma, sf_gamma;
    std::optional<QuadElem> r;
    int field_class = -1; // index into CensusReport::field_classes
};

struct CensusCounts {
    int64_t bad = 0, good = 0, nonordinary = 0, notsimple = 0, ordinarysimple = 0;
};

struct CensusConfig {
    int64_t x_max = 10'000;
    int threads = 1;
    long trial_bound = 0;     // 0: sized automatically from x_max
    bool extended = false;    // raises the x cap from 10^4 to 10^5
};

struct FieldClass {
    CmFieldKey key;       // representative (first prime seen)
    int64_t multiplicity; // = Pi(A, K) for this isomorphism class
};

struct CensusReport {
    CurveModel curve;
    int64_t x_max;
    std::vector<FrobeniusRecord> records; // strictly increasing p, every prime <= X
    CensusCounts counts;
    std::vector<FieldClass> field_classes;   // ordered by first occurrence
    std::map<long, int64_t> d0_multiplicities;
    bool ordinary_density_flag = false; // set when observed density <= 0.9 (soft check)
};

/// Runs the per-prime census over all p <= X. Deterministic: the report (and
/// its serializations) are identical for any thread count.
CensusReport run_census(const CurveModel& curve, const CensusConfig& cfg);

/// Pi(A, F)(X) for F = Q(sqrt(d)): ordinary simple records with d*delta a square.
int64_t pi_F(const CensusReport& report, long d);

/// Pi(A, K)(X): total multiplicity of the class same_cm_field-equal to key.
int64_t pi_K(const CensusReport& report, const CmFieldKey& key);

struct FieldCensus {
    std::set<long> d0_set;     // distinct real subfields, each d0 <= 48X
    size_t field_count;        // distinct CM-field classes, each sf(gamma) <= psi_2(sqrt(X))
};

FieldCensus field_census(const CensusReport& report);

/// count(ordinarysimple) / max multiplicity; #fields >= this exactly.
mpq_class pigeonhole_bound(const CensusReport& report);

/// JSONL: one record per line; CSV: p,class,t1,a2,d0,sf_gamma.
void write_jsonl(const CensusReport& report, std::ostream& out);
void write_csv(const CensusReport& report, std::ostream& out);
std::string summary_json(const CensusReport& report);

} // namespace frobcensus

#endif
