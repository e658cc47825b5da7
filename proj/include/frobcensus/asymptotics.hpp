#ifndef FROBCENSUS_ASYMPTOTICS_HPP
#define FROBCENSUS_ASYMPTOTICS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace frobcensus {

enum class Regime { GRH, GRH_AHC, GRH_AHC_PCC, UNCONDITIONAL };

std::string to_string(Regime r);

/// Shape data of a Galois extension L/Q needed by the explicit Chebotarev
/// error formulas. Degrees and class counts are carried in log space so that
/// division-field-sized groups (and beyond) stay representable.
struct ChebotarevProfile {
    double log_nL = 0;        // log [L:Q] = log #G
    double log_C = 0;         // log #C
    double log_C_classes = 0; // log #C-tilde
    double log_G_classes = 0; // log #G-tilde
    std::vector<int64_t> ramified;

    static ChebotarevProfile from_counts(const mpz_class& n_l, const mpz_class& c_size,
                                         const mpz_class& c_classes, const mpz_class& g_classes,
                                         std::vector<int64_t> ramified);
};

struct DiscBounds {
    double lo, hi; // bounds on log|d_L|
};

/// lo = (n_L/2) sum log p <= log|d_L| <= (n_L-1) sum log p + n_L log n_L = hi.
DiscBounds disc_bounds(const ChebotarevProfile& profile);

struct AsymConstants {
    double a = 1, b = 1, b_prime = 1, c_prime = 1;
};

struct ErrorBound {
    double log_value = 0;  // log R_C(X), implied constants = 1
    bool gate_checked = false;
    bool gate_ok = true;
    double gate_lhs_log = 0; // log(log X)
    double gate_rhs_log = 0; // log(B' #G (log|d_L|)^2)
};

/// Evaluates the regime's R_C(X) bound in log space; log|d_L| is taken at the
/// upper disc bound. The unconditional branch also reports the validity gate
/// log X >= B' (#G)(log|d_L|)^2.
ErrorBound chebotarev_error(Regime regime, const ChebotarevProfile& profile, double log_x,
                            const AsymConstants& consts = {});

struct ExponentProfile {
    int g = 0;
    Regime regime = Regime::GRH;
    mpq_class theta;          // z = X^theta
    mpq_class final_exponent; // bound = X^final_exponent * log X
    mpq_class reference_theta;
    bool matches_reference = true;
    std::string note;
};

/// Balances X log z / z against z^(2g+2) R(z, X) with the per-regime error
/// exponent (GRH: z^(4g^2), AHC: z^(2g^2), PCC: z^(g^2)); exact rationals.
ExponentProfile optimal_theta(Regime regime, int g);

struct UnconditionalProfile {
    int g = 0;
    // z = c' (log X)^z_log_power / (log log X)^z_loglog_power
    mpq_class z_log_power, z_loglog_power;
    // bound = X (log log X)^loglog_exp / (log X)^log_exp (times 1 + nu(d))
    mpq_class loglog_exp, log_exp;
    mpq_class reference_loglog_exp, reference_log_exp;
    bool matches_reference = true;
    std::string note;
};

UnconditionalProfile unconditional_profile(int g);

struct GateCheck {
    double z = 0;
    double lhs_log = 0; // log(log X)
    double rhs_log = 0; // log(B' z^(12g^2+6g+6) (log z)^2)
    bool ok = false;
};

/// Checks the unconditional validity gate at the derived z-choice, log space.
GateCheck unconditional_gate(int g, double log_x, const AsymConstants& consts = {});

/// log of X (log log X)^(1+2 theta1) / (log X)^(1+theta1) at the derived powers.
double unconditional_bound_log(int g, double log_x);

/// Logarithmic integral int_2^x dt / log t; relative error <= 1e-9.
double li(double x);

double log_mpz(const mpz_class& n);

} // namespace frobcensus

#endif
