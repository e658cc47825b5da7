#include "frobcensus/census.hpp"

#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "frobcensus/errors.hpp"
#include "frobcensus/int_utils.hpp"

namespace frobcensus {

namespace {

struct WorkerOutput {
    FrobeniusRecord rec;
    std::optional<CmFieldKey> key;
};

WorkerOutput census_prime(const CurveModel& curve, int64_t p, long trial_bound) {
    WorkerOutput out;
    out.rec.p = p;
    if (reduction_type(curve, p) == Reduction::Bad) {
        out.rec.cls = ReductionClass::Bad;
        return out;
    }
    const int64_t n1 = count_points(curve, p, 1);
    const int64_t n2 = count_points(curve, p, 2);
    const FrobCoeffs fc = frobenius_coeffs(p, n1, n2);
    out.rec.n1 = n1;
    out.rec.n2 = n2;
    out.rec.t1 = fc.t1;
    out.rec.a2 = fc.a2;
    out.rec.cls = classify(fc.t1, fc.a2, p);
    if (out.rec.cls != ReductionClass::OrdinarySimple) return out;

    const CmFieldData cm = cm_field_key(fc.t1, fc.a2, p);
    const RealSubfield rs = real_subfield(fc.t1, fc.a2, p);
    out.rec.delta = rs.delta;
    out.rec.d0 = rs.d0;

    const mpz_class gamma = gamma_g2(fc.t1, fc.a2, p);
    // Independent route: gamma = N_{K0/Q}(beta^2 - 4p), via exact K0 arithmetic.
    const mpq_class norm_r = cm.key.r.norm();
    if (norm_r.get_den() != 1 || norm_r.get_num() != gamma)
        throw internal_error("census: gamma != N(beta^2 - 4p) at p = " + std::to_string(p));
    if (gamma <= 0)
        throw internal_error("census: gamma <= 0 at p = " + std::to_string(p));

    out.rec.gamma = gamma;
    out.rec.sf_gamma = squarefree_part(gamma, trial_bound).s;
    out.rec.r = cm.key.r;
    out.key = cm.key;
    return out;
}

} // namespace

CensusReport run_census(const CurveModel& curve, const CensusConfig& cfg) {
    const int64_t cap = cfg.extended ? 100'000 : 10'000;
    if (cfg.x_max < 2) throw invalid_input_error("run_census: X must be >= 2");
    if (cfg.x_max > cap)
        throw capacity_error("run_census: X = " + std::to_string(cfg.x_max) + " exceeds cap " +
                             std::to_string(cap) + (cfg.extended ? "" : " (use extended mode)"));

    long trial_bound = cfg.trial_bound;
    if (trial_bound <= 0) {
        // gamma <= 128 X^2, so primes up to ~sqrt(128) X certify its factorization.
        trial_bound = std::max<long>(kDefaultTrialBound, 12L * static_cast<long>(cfg.x_max));
    }

    const auto primes = primes_up_to(cfg.x_max);
    std::vector<WorkerOutput> results(primes.size());

    const int threads = std::max(1, cfg.threads);
    std::atomic<size_t> next{0};
    std::exception_ptr worker_error;
    std::mutex error_mutex;
    auto work = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= primes.size()) return;
            try {
                results[i] = census_prime(curve, primes[i], trial_bound);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!worker_error) worker_error = std::current_exception();
                return;
            }
        }
    };
    if (threads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (worker_error) std::rethrow_exception(worker_error);

    CensusReport report{curve, cfg.x_max, {}, {}, {}, {}, false};
    report.records.reserve(primes.size());

    // Merge in ascending p; field classes are grouped in first-seen order so
    // the result is independent of scheduling.
    for (auto& out : results) {
        FrobeniusRecord rec = std::move(out.rec);
        switch (rec.cls) {
            case ReductionClass::Bad: ++report.counts.bad; break;
            case ReductionClass::NonOrdinary: ++report.counts.nonordinary; break;
            case ReductionClass::NotSimple: ++report.counts.notsimple; break;
            case ReductionClass::OrdinarySimple: ++report.counts.ordinarysimple; break;
        }
        if (rec.cls != ReductionClass::Bad) ++report.counts.good;
        if (out.key) {
            int idx = -1;
            for (size_t i = 0; i < report.field_classes.size(); ++i) {
                if (same_cm_field(report.field_classes[i].key, *out.key)) {
                    idx = static_cast<int>(i);
                    break;
                }
            }
            if (idx < 0) {
                report.field_classes.push_back(FieldClass{*out.key, 0});
                idx = static_cast<int>(report.field_classes.size()) - 1;
            }
            ++report.field_classes[static_cast<size_t>(idx)].multiplicity;
            rec.field_class = idx;
            ++report.d0_multiplicities[*rec.d0];
        }
        report.records.push_back(std::move(rec));
    }

    int64_t class_total = 0;
    for (const auto& fc : report.field_classes) class_total += fc.multiplicity;
    if (class_total != report.counts.ordinarysimple)
        throw internal_error("run_census: field multiplicities do not sum to the ordinary-simple count");

    if (report.counts.good > 0) {
        const double density =
            static_cast<double>(report.counts.good - report.counts.nonordinary) /
            static_cast<double>(report.counts.good);
        report.ordinary_density_flag = density <= 0.9;
    }
    return report;
}

int64_t pi_F(const CensusReport& report, long d) {
    if (d <= 1) throw invalid_input_error("pi_F: d must be a squarefree integer > 1");
    if (squarefree_part(mpz_class(d)).m != 1) throw invalid_input_error("pi_F: d not squarefree");
    int64_t count = 0;
    for (const auto& rec : report.records) {
        if (rec.cls != ReductionClass::OrdinarySimple) continue;
        if (is_perfect_square(mpz_class(d) * *rec.delta)) ++count;
    }
    return count;
}

int64_t pi_K(const CensusReport& report, const CmFieldKey& key) {
    int64_t count = 0;
    for (const auto& fc : report.field_classes)
        if (same_cm_field(fc.key, key)) count += fc.multiplicity;
    return count;
}

FieldCensus field_census(const CensusReport& report) {
    FieldCensus fc;
    const mpz_class psi_x = psi_bound(2, mpz_class(report.x_max));
    for (const auto& rec : report.records) {
        if (rec.cls != ReductionClass::OrdinarySimple) continue;
        if (*rec.delta > 48 * mpz_class(rec.p))
            throw internal_error("field_census: delta > 48p at p = " + std::to_string(rec.p));
        if (abs(*rec.sf_gamma) > psi_x)
            throw internal_error("field_census: sf(gamma) exceeds psi_2(sqrt(X)) at p = " +
                                 std::to_string(rec.p));
        fc.d0_set.insert(*rec.d0);
    }
    fc.field_count = report.field_classes.size();
    if (fc.field_count < fc.d0_set.size())
        throw internal_error("field_census: fewer field classes than real subfields");
    return fc;
}

mpq_class pigeonhole_bound(const CensusReport& report) {
    if (report.counts.ordinarysimple == 0)
        throw invalid_input_error("pigeonhole_bound: census has no ordinary simple records");
    int64_t max_mult = 0;
    for (const auto& fc : report.field_classes) max_mult = std::max(max_mult, fc.multiplicity);
    mpq_class bound(report.counts.ordinarysimple, max_mult);
    bound.canonicalize();
    if (mpq_class(static_cast<long>(report.field_classes.size())) < bound)
        throw internal_error("pigeonhole_bound: pigeonhole identity violated");
    return bound;
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json record_json(const FrobeniusRecord& rec) {
    ordered_json j;
    j["p"] = rec.p;
    j["class"] = to_string(rec.cls);
    auto put_i64 = [&](const char* name, const std::optional<int64_t>& v) {
        if (v) j[name] = *v; else j[name] = nullptr;
    };
    put_i64("N1", rec.n1);
    put_i64("N2", rec.n2);
    put_i64("t1", rec.t1);
    put_i64("a2", rec.a2);
    auto put_z = [&](const char* name, const std::optional<mpz_class>& v) {
        if (v) {
            if (!v->fits_slong_p()) throw capacity_error("census record field overflows int64");
            j[name] = static_cast<int64_t>(v->get_si());
        } else j[name] = nullptr;
    };
    put_z("delta", rec.delta);
    if (rec.d0) j["d0"] = *rec.d0; else j["d0"] = nullptr;
    put_z("gamma", rec.gamma);
    put_z("sf_gamma", rec.sf_gamma);
    if (rec.r) {
        j["r"] = ordered_json::array({static_cast<int64_t>(rec.r->a().get_num().get_si()),
                                      static_cast<int64_t>(rec.r->a().get_den().get_si()),
                                      static_cast<int64_t>(rec.r->b().get_num().get_si()),
                                      static_cast<int64_t>(rec.r->b().get_den().get_si())});
    } else {
        j["r"] = nullptr;
    }
    return j;
}

} // namespace

void write_jsonl(const CensusReport& report, std::ostream& out) {
    for (const auto& rec : report.records) out << record_json(rec).dump() << "\n";
}

void write_csv(const CensusReport& report, std::ostream& out) {
    out << "p,class,t1,a2,d0,sf_gamma\n";
    for (const auto& rec : report.records) {
        out << rec.p << "," << to_string(rec.cls) << ",";
        if (rec.t1) out << *rec.t1;
        out << ",";
        if (rec.a2) out << *rec.a2;
        out << ",";
        if (rec.d0) out << *rec.d0;
        out << ",";
        if (rec.sf_gamma) out << rec.sf_gamma->get_str();
        out << "\n";
    }
}

std::string summary_json(const CensusReport& report) {
    ordered_json j;
    j["schema"] = 1;
    ordered_json curve;
    std::vector<int64_t> coeffs;
    for (const auto& c : report.curve.f().coeffs()) coeffs.push_back(static_cast<int64_t>(c.get_si()));
    curve["f"] = coeffs;
    if (!report.curve.label().empty()) curve["label"] = report.curve.label();
    j["curve"] = curve;
    j["x"] = report.x_max;
    ordered_json counts;
    counts["bad"] = report.counts.bad;
    counts["good"] = report.counts.good;
    counts["nonordinary"] = report.counts.nonordinary;
    counts["notsimple"] = report.counts.notsimple;
    counts["ordinarysimple"] = report.counts.ordinarysimple;
    j["counts"] = counts;

    int64_t max_mult = 0;
    for (const auto& fc : report.field_classes) max_mult = std::max(max_mult, fc.multiplicity);
    j["max_pi_K"] = max_mult;
    if (report.counts.ordinarysimple > 0) {
        const FieldCensus fc = field_census(report);
        j["d0_count"] = fc.d0_set.size();
        j["field_count"] = fc.field_count;
        j["pigeonhole_bound"] = pigeonhole_bound(report).get_str();
    } else {
        j["d0_count"] = 0;
        j["field_count"] = 0;
        j["pigeonhole_bound"] = nullptr;
    }
    j["ordinary_density_flag"] = report.ordinary_density_flag;
    return j.dump(2);
}

} // namespace frobcensus
