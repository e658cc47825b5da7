// frobcensus: census of Frobenius fields of a genus-2 Jacobian mod p, plus the
// square-sieve / GSp / exponent verification commands.

#include <iostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "frobcensus/asymptotics.hpp"
#include "frobcensus/census.hpp"
#include "frobcensus/commands.hpp"
#include "frobcensus/errors.hpp"
#include "frobcensus/gsp.hpp"
#include "frobcensus/int_poly.hpp"
#include "frobcensus/int_utils.hpp"
#include "frobcensus/sieve.hpp"

namespace {

using namespace frobcensus;

int run_census_cmd(const std::string& curve, const std::string& label, int64_t x, int threads,
                   bool extended, long factor_bound, const std::string& jsonl,
                   const std::string& csv, const std::string& summary) {
    CensusCommandConfig cfg;
    cfg.curve_coeffs = curve;
    cfg.label = label;
    cfg.x_max = x;
    cfg.threads = threads;
    cfg.extended = extended;
    cfg.trial_bound = factor_bound;
    cfg.jsonl_path = jsonl;
    cfg.csv_path = csv;
    cfg.summary_path = summary;
    const CensusReport report = cmd_census(cfg);
    if (summary.empty()) std::cout << summary_json(report) << "\n";
    return 0;
}

int run_sieve_cmd(const std::string& curve, int64_t x, double z, long d, int threads,
                  int64_t random_n, uint64_t seed) {
    if (random_n > 0) {
        // Fuzz mode: a random instance of the sieve inequality.
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int64_t> val(-1'000'000, 1'000'000);
        std::vector<mpz_class> a_seq;
        while (static_cast<int64_t>(a_seq.size()) < random_n) {
            const int64_t v = val(rng);
            if (v != 0) a_seq.emplace_back(v);
        }
        const auto odd_primes = primes_up_to(200);
        std::vector<int64_t> p_set;
        std::uniform_int_distribution<size_t> pick(1, odd_primes.size() - 1);
        while (p_set.size() < 6) {
            const int64_t p = odd_primes[pick(rng)];
            if (std::find(p_set.begin(), p_set.end(), p) == p_set.end()) p_set.push_back(p);
        }
        std::cout << sieve_terms(a_seq, p_set).to_json() << "\n";
        return 0;
    }

    CensusCommandConfig cfg;
    cfg.curve_coeffs = curve;
    cfg.x_max = x;
    cfg.threads = threads;
    const CensusReport report = cmd_census(cfg);
    if (report.counts.ordinarysimple == 0)
        throw invalid_input_error("sieve: census has no ordinary simple records");
    if (d <= 0) d = report.d0_multiplicities.begin()->first; // smallest observed d0
    if (z <= 0) z = std::pow(static_cast<double>(x), 1.0 / 46.0);

    const auto a_seq = delta_sequence(report, d);
    double z_used = 0;
    const auto p_set =
        sieve_prime_set(z, 2 * mpz_class(d) * report.curve.disc(), 2, &z_used);
    const SieveReport sieve = sieve_terms(a_seq, p_set);

    nlohmann::ordered_json j = nlohmann::ordered_json::parse(sieve.to_json());
    j["d"] = d;
    j["z_requested"] = z;
    j["z_used"] = z_used;
    j["pi_F"] = pi_F(report, d);
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_gsp_cmd(int g, int64_t l, const std::string& which, bool classes, int threads) {
    const GroupKind kind = which == "sp" ? GroupKind::Sp : GroupKind::GSp;
    const auto elems = enumerate_group(g, l, kind, threads);
    const GspCensus census = census_from_elements(g, l, kind, elems);
    std::optional<size_t> class_count;
    if (classes) {
        const MatDomain dom(g, static_cast<uint32_t>(l));
        class_count = conjugacy_class_count(dom, elems, dom.generators(kind));
    }
    std::cout << census.to_json(class_count) << "\n";
    if (census.shape_violations != 0)
        throw internal_error("gsp: functional-equation violations in census");
    return 0;
}

int run_charsum_cmd(int64_t a, int64_t b, int64_t c, int64_t l) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["a"] = a;
    j["b"] = b;
    j["c"] = c;
    j["l"] = l;
    j["sum"] = quad_char_sum_brute(a, b, c, l);
    j["closed_form"] = quad_char_sum(a, b, c, l);
    j["conic_count"] = conic_count(a, b, c, l);
    const int64_t disc = ((b * b - 4 * a * c) % l + l) % l;
    j["smooth_irreducible"] = (a % l != 0) && (disc != 0);
    std::cout << j.dump(2) << "\n";
    if (j["sum"] != j["closed_form"])
        throw internal_error("charsum: closed form disagrees with enumeration");
    return 0;
}

int run_selftest_cmd(uint64_t seed) {
    std::mt19937_64 rng(seed);

    // Jacobi vs residue enumeration for small primes.
    for (int64_t p : primes_up_to(50)) {
        if (p == 2) continue;
        for (int64_t a = 0; a < p; ++a) {
            int brute = 0;
            for (int64_t y = 1; y < p && brute == 0; ++y)
                if (y * y % p == a) brute = 1;
            const int expected = a == 0 ? 0 : (brute ? 1 : -1);
            if (jacobi(a, p) != expected) throw internal_error("selftest: jacobi mismatch");
        }
    }

    // Newton round-trip on random monic polynomials.
    std::uniform_int_distribution<long> coeff(-20, 20);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<mpz_class> c;
        for (int i = 0; i < 4; ++i) c.emplace_back(coeff(rng));
        c.emplace_back(1);
        const IntPoly f{std::vector<mpz_class>(c)};
        if (!(poly_from_power_sums(power_sums(f)) == f))
            throw internal_error("selftest: Newton round-trip failed");
    }

    // Square-sieve inequality on random instances.
    std::uniform_int_distribution<int64_t> val(-10'000, 10'000);
    const auto primes = primes_up_to(100);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<mpz_class> a_seq;
        for (int i = 0; i < 40; ++i) {
            int64_t v = val(rng);
            if (v == 0) v = 1;
            a_seq.emplace_back(v);
        }
        std::vector<int64_t> p_set{3, 5, 7, 11};
        sieve_terms(a_seq, p_set); // throws if the inequality fails
    }

    // Character-sum closed form, exhaustive for small l.
    for (int64_t l : {3, 5, 7, 11, 13}) {
        for (int64_t a = 0; a < l; ++a)
            for (int64_t b = 0; b < l; ++b)
                for (int64_t c = 0; c < l; ++c)
                    if (quad_char_sum(a, b, c, l) != quad_char_sum_brute(a, b, c, l))
                        throw internal_error("selftest: quad_char_sum mismatch");
    }

    std::cout << "selftest: OK\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frobenius-field census and sieve verification toolkit"};
    app.require_subcommand(1);

    std::string curve = "1,0,0,2,-3,1"; // y^2 = x^5 - 3x^4 + 2x^3 + 1
    std::string label;
    int64_t x = 10'000;
    std::optional<int> threads_flag;
    bool extended = false;
    long factor_bound = 0;
    std::string jsonl, csv, summary;
    uint64_t seed = 1;

    auto* census = app.add_subcommand("census", "per-prime Frobenius census up to X");
    census->add_option("--curve", curve, "f coefficients, lowest degree first");
    census->add_option("--label", label, "optional curve label");
    census->add_option("--x", x, "census bound X");
    census->add_option("--threads", threads_flag, "worker threads");
    census->add_flag("--extended", extended, "raise the X cap to 10^5");
    census->add_option("--factor-bound", factor_bound, "trial-division bound override");
    census->add_option("--jsonl", jsonl, "JSONL output path");
    census->add_option("--csv", csv, "CSV output path");
    census->add_option("--summary", summary, "summary JSON path (default: stdout)");

    double sieve_z = 0;
    long sieve_d = 0;
    int64_t random_n = 0;
    auto* sieve = app.add_subcommand("sieve", "square-sieve report on the census sequence");
    sieve->add_option("--curve", curve, "f coefficients, lowest degree first");
    sieve->add_option("--x", x, "census bound X");
    sieve->add_option("--z", sieve_z, "sieve-set parameter (default X^(1/46))");
    sieve->add_option("--d", sieve_d, "real-field label d (default: smallest observed d0)");
    sieve->add_option("--threads", threads_flag, "worker threads");
    sieve->add_option("--random", random_n, "fuzz mode: random sequence of this length");
    sieve->add_option("--seed", seed, "random seed");

    int gsp_g = 2;
    int64_t gsp_l = 3;
    std::string gsp_which = "sp";
    bool gsp_classes = false;
    auto* gsp = app.add_subcommand("gsp", "enumerate Sp/GSp over F_l and report statistics");
    gsp->add_option("--g", gsp_g, "dimension parameter (1 or 2)");
    gsp->add_option("--l", gsp_l, "prime modulus");
    gsp->add_option("--which", gsp_which, "sp or gsp")->check(CLI::IsMember({"sp", "gsp"}));
    gsp->add_flag("--classes", gsp_classes, "also count conjugacy classes");
    gsp->add_option("--threads", threads_flag, "worker threads");

    int exp_g = 2;
    auto* exponents = app.add_subcommand("exponents", "sieve-exponent balancing table");
    exponents->add_option("--g", exp_g, "dimension");

    int64_t cs_a = 1, cs_b = 0, cs_c = 1, cs_l = 5;
    auto* charsum = app.add_subcommand("charsum", "quadratic character sum and conic count");
    charsum->add_option("--a", cs_a);
    charsum->add_option("--b", cs_b);
    charsum->add_option("--c", cs_c);
    charsum->add_option("--l", cs_l, "odd prime modulus");

    auto* selftest = app.add_subcommand("selftest", "quick internal consistency checks");
    selftest->add_option("--seed", seed, "random seed");

    CLI11_PARSE(app, argc, argv);

    try {
        const int threads = frobcensus::resolve_threads(threads_flag);
        if (census->parsed())
            return run_census_cmd(curve, label, x, threads, extended, factor_bound, jsonl, csv,
                                  summary);
        if (sieve->parsed()) return run_sieve_cmd(curve, x, sieve_z, sieve_d, threads, random_n, seed);
        if (gsp->parsed()) return run_gsp_cmd(gsp_g, gsp_l, gsp_which, gsp_classes, threads);
        if (exponents->parsed()) {
            std::cout << frobcensus::exponents_json(exp_g) << "\n";
            return 0;
        }
        if (charsum->parsed()) return run_charsum_cmd(cs_a, cs_b, cs_c, cs_l);
        if (selftest->parsed()) return run_selftest_cmd(seed);
    } catch (const frobcensus::invalid_input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const frobcensus::capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 3;
    } catch (const frobcensus::internal_error& e) {
        std::cerr << "internal consistency error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
