#pragma once

#include <cstdint>
#include <optional>

#include "savetx/bound_report.hpp"
#include "savetx/dmc_spec.hpp"
#include "savetx/energy_process.hpp"

namespace savetx {

// ---------------------------------------------------------------------------
// AWGN first- and second-order quantities (all in nats).
// ---------------------------------------------------------------------------

// (1/2) log(1 + P).
double awgn_capacity(double power);

// Gaussian dispersion P(P+2)/(2(P+1)^2), the comparator's variance term.
double awgn_dispersion(double power);

// Variance of the per-symbol information density under i.i.d. Gaussian
// inputs of variance P: P/(P+1). This is the variance that enters the
// Chebyshev penalty of the save-and-transmit bound; it differs from the
// dispersion above, which conditions on the input.
double awgn_info_density_variance(double power);

// E[X^4 exp(lambda X^2)] for X ~ Normal(0, P): 3 P^2 (1 - 2 lambda P)^{-5/2}.
// Requires 0 <= lambda < 1/(2P); the integral diverges beyond.
double gaussian_tilted_fourth_moment(double power, double lambda);

// ---------------------------------------------------------------------------
// Concentration constants and the saving phase.
// ---------------------------------------------------------------------------

struct ConcentrationConstants {
    double a;
    double lambda;
};

// lambda = 1/(4P), a = max{E[E1^2], 12 sqrt(2) P^2}. The process mean must
// equal `power`.
ConcentrationConstants awgn_concentration(const EnergyProcess& energy, double power);

// a = max{E[E1^2], max_x c(x)^2 e^{c(x)}}.
double dmc_concentration(const EnergyProcess& energy, const DmcSpec& spec);

// Saving-phase length m = ceil(6 sqrt(a n log n) / P). Requires n >= 3.
std::size_t saving_phase_length(double a, double power, std::size_t n);

// ---------------------------------------------------------------------------
// Outage probability bound.
// ---------------------------------------------------------------------------

enum class OutageModel { awgn, dmc };

struct OutageBoundValue {
    double raw;           // (e^{0.4}/log n) exp(2 log n - (mP/2) sqrt(log n/(a n)))
    double value;         // raw clamped to <= 1 for reporting
    bool conditions_met;  // blocklength hypothesis of the bound
};

// Chernoff-type bound on the probability that some transmission-phase prefix
// energy exceeds the shifted cumulative arrivals. `lambda` is only consulted
// for the AWGN hypothesis n/log n >= max{a/P^2, 1/(a lambda^2)}; pass 0 to use
// the default 1/(4P). With `tightened_prefactor` the e^{0.4} constant is
// replaced by e^{log n / n}.
OutageBoundValue outage_bound(std::size_t m, std::size_t n, double a, double power,
                              OutageModel model, double lambda = 0.0,
                              bool tightened_prefactor = false);

// Pieces of the bound's derivation, exposed for property checks.
double outage_gamma(double a, std::size_t n);  // log n / (a n)
double outage_prefix_term(std::size_t k, std::size_t m, std::size_t n, double a,
                          double power);  // exp(k a gamma - (mP/2) sqrt(gamma))

// Exponential envelopes behind the concentration argument, valid for x >= 0.
double exp_lower(double x);      // 1 + x
double exp_upper(double x);      // 1 + x + x^2 e^x / 2
double exp_neg_lower(double x);  // 1 - x
double exp_neg_upper(double x);  // 1 - x + x^2 / 2

// ---------------------------------------------------------------------------
// Achievable log codebook sizes.
// ---------------------------------------------------------------------------

// (n/2) log(1+P) - sqrt((2+eps) n P / (eps (P+1))) - n^{1/4} - 1.
// May be negative; callers flag infeasibility instead of treating it as an
// error.
double achievable_log_m_awgn(std::size_t n, double eps, double power);

// Same bound re-expressed over the total blocklength n* = n + m, with the
// saving-phase penalty explicit. Requires n_star >= 4.
double achievable_log_m_awgn_total(std::size_t n_star, double eps, double power,
                                   double a);

// DMC analogue over the total blocklength:
// n* C - 6 C sqrt(a n* log n*)/P - sqrt((2+eps) n* V / eps) - (n*)^{1/4} - C - 1.
double achievable_log_m_dmc_total(std::size_t n_star, double eps, double power,
                                  double a, double capacity, double dispersion);

// Large-n hypotheses of the AWGN bound:
//   concentration: n/log n >= max{E[E1^2]/P^2, 12 sqrt(2)}
//   union_bound:   n >= (log((2+eps)/eps^2))^4
//   outage_margin: n log n >= e^{0.4} (2+eps)/eps
ValidityFlags awgn_conditions(std::size_t n, double eps, double second_moment,
                              double power);

// DMC analogue; the concentration condition becomes n/log n >= a/P^2.
ValidityFlags dmc_conditions(std::size_t n, double eps, double a, double power);

// ---------------------------------------------------------------------------
// Rates.
// ---------------------------------------------------------------------------

// Save-and-transmit rate: achievable_log_m_awgn(n) / (n + m) with m from
// saving_phase_length, clamped at 0 when the numerator is negative.
double eh_rate(std::size_t n, double eps, double power, double a);

struct NormalApproxReport {
    double capacity;    // nats per use
    double dispersion;  // nats^2 per use
    double rate;        // nats per use at the given (n, eps)
};

// Peak-power comparator C + sqrt(V/n) Phi^{-1}(eps) + log n/(2n).
NormalApproxReport no_eh_rate(std::size_t n, double eps, double power);

// ---------------------------------------------------------------------------
// Codebook-size selection.
// ---------------------------------------------------------------------------

// Right-hand side of the selection rule:
//   n C - sqrt((2+eps) n V / eps) - n^{1/4}.
double codebook_exponent(std::size_t n, double eps, double capacity,
                         double info_variance);

struct CodebookSize {
    double log_m;   // log of the selected size (meaningful when feasible)
    bool feasible;  // false when the rule selects M = 0
    std::optional<std::uint64_t> exact;  // materialized when small enough
};

// Unique integer M with log(M+1) >= exponent > log M, i.e. ceil(e^rhs) - 1.
// M = 0 is reported as infeasible.
CodebookSize select_codebook_size(std::size_t n, double eps, double capacity,
                                  double info_variance);

// ---------------------------------------------------------------------------
// Assembled reports.
// ---------------------------------------------------------------------------

// Transmission-phase form: log_m_lower from achievable_log_m_awgn, rate over
// n + m. The saving phase enters through the denominator, so its component is
// reported as 0 here.
BoundReport awgn_report(std::size_t n, std::size_t m, double eps, double power,
                        double second_moment, double a);

// Total-blocklength form with the explicit saving-phase component.
BoundReport awgn_report_total(std::size_t n, std::size_t m, double eps, double power,
                              double second_moment, double a);

BoundReport dmc_report(std::size_t n, std::size_t m, double eps, double power,
                       double a, double capacity, double dispersion);

}  // namespace savetx
