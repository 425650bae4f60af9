#include "savetx/analytic_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "savetx/normal.hpp"

namespace savetx {

namespace {
constexpr double kTwelveSqrt2 = 16.970562748477140585620264690516;  // 12 sqrt(2)
}

double awgn_capacity(double power) {
    if (!(power >= 0.0)) throw std::invalid_argument("power must be nonnegative");
    return 0.5 * std::log1p(power);
}

double awgn_dispersion(double power) {
    if (!(power >= 0.0)) throw std::invalid_argument("power must be nonnegative");
    const double p1 = power + 1.0;
    return power * (power + 2.0) / (2.0 * p1 * p1);
}

double awgn_info_density_variance(double power) {
    if (!(power >= 0.0)) throw std::invalid_argument("power must be nonnegative");
    return power / (power + 1.0);
}

double gaussian_tilted_fourth_moment(double power, double lambda) {
    if (!(power >= 0.0)) throw std::invalid_argument("power must be nonnegative");
    if (!(lambda >= 0.0)) throw std::invalid_argument("lambda must be nonnegative");
    if (power > 0.0 && !(lambda < 0.5 / power)) {
        throw std::invalid_argument("tilted moment diverges for lambda >= 1/(2P)");
    }
    return 3.0 * power * power * std::pow(1.0 - 2.0 * lambda * power, -2.5);
}

ConcentrationConstants awgn_concentration(const EnergyProcess& energy, double power) {
    if (!(power > 0.0)) throw std::invalid_argument("power must be positive");
    const double tol = 1e-9 * std::max(1.0, power);
    if (std::abs(energy.mean - power) > tol) {
        throw std::invalid_argument("energy process mean " + std::to_string(energy.mean) +
                                    " does not match power " + std::to_string(power));
    }
    return {std::max(energy.second_moment, kTwelveSqrt2 * power * power),
            0.25 / power};
}

double dmc_concentration(const EnergyProcess& energy, const DmcSpec& spec) {
    if (!(energy.mean > 0.0)) throw std::invalid_argument("energy mean must be positive");
    double cost_term = 0.0;
    for (double c : spec.cost) {
        cost_term = std::max(cost_term, c * c * std::exp(c));
    }
    return std::max(energy.second_moment, cost_term);
}

std::size_t saving_phase_length(double a, double power, std::size_t n) {
    if (n < 3) throw std::invalid_argument("saving phase needs n >= 3");
    if (!(a > 0.0) || !(power > 0.0)) {
        throw std::invalid_argument("saving phase needs a > 0 and power > 0");
    }
    const double nd = static_cast<double>(n);
    return static_cast<std::size_t>(std::ceil(6.0 * std::sqrt(a * nd * std::log(nd)) / power));
}

double outage_gamma(double a, std::size_t n) {
    const double nd = static_cast<double>(n);
    return std::log(nd) / (a * nd);
}

double outage_prefix_term(std::size_t k, std::size_t m, std::size_t n, double a,
                          double power) {
    const double g = outage_gamma(a, n);
    return std::exp(static_cast<double>(k) * a * g -
                    0.5 * static_cast<double>(m) * power * std::sqrt(g));
}

OutageBoundValue outage_bound(std::size_t m, std::size_t n, double a, double power,
                              OutageModel model, double lambda, bool tightened_prefactor) {
    if (!(a > 0.0) || !(power > 0.0)) {
        throw std::invalid_argument("outage bound needs a > 0 and power > 0");
    }
    const double nd = static_cast<double>(n);
    const double logn = std::log(nd);
    const double prefactor =
        (tightened_prefactor ? std::exp(logn / nd) : std::exp(0.4)) / logn;
    const double exponent =
        2.0 * logn - 0.5 * static_cast<double>(m) * power * std::sqrt(logn / (a * nd));
    const double raw = prefactor * std::exp(exponent);

    double requirement = a / (power * power);
    if (model == OutageModel::awgn) {
        const double lam = lambda > 0.0 ? lambda : 0.25 / power;
        requirement = std::max(requirement, 1.0 / (a * lam * lam));
    }
    const bool ok = n >= 3 && nd / logn >= requirement;
    return {raw, std::min(raw, 1.0), ok};
}

double exp_lower(double x) { return 1.0 + x; }
double exp_upper(double x) { return 1.0 + x + 0.5 * x * x * std::exp(x); }
double exp_neg_lower(double x) { return 1.0 - x; }
double exp_neg_upper(double x) { return 1.0 - x + 0.5 * x * x; }

namespace {

void check_eps(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) {
        throw std::invalid_argument("eps must lie in (0, 1)");
    }
}

}  // namespace

double achievable_log_m_awgn(std::size_t n, double eps, double power) {
    check_eps(eps);
    if (n < 3) throw std::invalid_argument("bound needs n >= 3");
    const double nd = static_cast<double>(n);
    return 0.5 * nd * std::log1p(power) -
           std::sqrt((2.0 + eps) * nd * power / (eps * (power + 1.0))) -
           std::pow(nd, 0.25) - 1.0;
}

double achievable_log_m_awgn_total(std::size_t n_star, double eps, double power,
                                   double a) {
    check_eps(eps);
    if (n_star < 4) throw std::invalid_argument("total-blocklength bound needs n* >= 4");
    const double nd = static_cast<double>(n_star);
    const double log1p_p = std::log1p(power);
    return 0.5 * nd * log1p_p -
           3.0 * log1p_p * std::sqrt(a * nd * std::log(nd)) / power -
           std::sqrt((2.0 + eps) * nd * power / (eps * (power + 1.0))) -
           std::pow(nd, 0.25) - 0.5 * log1p_p - 1.0;
}

double achievable_log_m_dmc_total(std::size_t n_star, double eps, double power,
                                  double a, double capacity, double dispersion) {
    check_eps(eps);
    if (n_star < 4) throw std::invalid_argument("total-blocklength bound needs n* >= 4");
    const double nd = static_cast<double>(n_star);
    return nd * capacity - 6.0 * capacity * std::sqrt(a * nd * std::log(nd)) / power -
           std::sqrt((2.0 + eps) * nd * dispersion / eps) - std::pow(nd, 0.25) -
           capacity - 1.0;
}

namespace {

ValidityFlags conditions_impl(std::size_t n, double eps, double concentration_ratio) {
    const double nd = static_cast<double>(n);
    const double logn = std::log(nd);
    ValidityFlags flags;
    flags.concentration = n >= 3 && nd / logn >= concentration_ratio;
    const double t = std::log((2.0 + eps) / (eps * eps));
    flags.union_bound = nd >= t * t * t * t;
    flags.outage_margin = nd * logn >= std::exp(0.4) * (2.0 + eps) / eps;
    return flags;
}

}  // namespace

ValidityFlags awgn_conditions(std::size_t n, double eps, double second_moment,
                              double power) {
    check_eps(eps);
    return conditions_impl(
        n, eps, std::max(second_moment / (power * power), kTwelveSqrt2));
}

ValidityFlags dmc_conditions(std::size_t n, double eps, double a, double power) {
    check_eps(eps);
    return conditions_impl(n, eps, a / (power * power));
}

double eh_rate(std::size_t n, double eps, double power, double a) {
    const double log_m = achievable_log_m_awgn(n, eps, power);
    const std::size_t m = saving_phase_length(a, power, n);
    return std::max(log_m, 0.0) / static_cast<double>(n + m);
}

NormalApproxReport no_eh_rate(std::size_t n, double eps, double power) {
    if (n < 1) throw std::invalid_argument("blocklength must be >= 1");
    NormalApproxReport r;
    r.capacity = awgn_capacity(power);
    r.dispersion = awgn_dispersion(power);
    const double nd = static_cast<double>(n);
    r.rate = r.capacity + std::sqrt(r.dispersion / nd) * normal_quantile(eps) +
             std::log(nd) / (2.0 * nd);
    return r;
}

double codebook_exponent(std::size_t n, double eps, double capacity,
                         double info_variance) {
    check_eps(eps);
    const double nd = static_cast<double>(n);
    return nd * capacity - std::sqrt((2.0 + eps) * nd * info_variance / eps) -
           std::pow(nd, 0.25);
}

CodebookSize select_codebook_size(std::size_t n, double eps, double capacity,
                                  double info_variance) {
    const double rhs = codebook_exponent(n, eps, capacity, info_variance);
    CodebookSize size;
    if (rhs <= 0.0) {
        // The unique integer with log(M+1) >= rhs > log M is M = 0: no valid
        // codebook.
        size.log_m = rhs;
        size.feasible = false;
        return size;
    }
    size.feasible = true;
    if (rhs < 36.0) {  // e^36 ~ 4.3e15 < 2^53, safe to materialize
        const auto m = static_cast<std::uint64_t>(std::ceil(std::exp(rhs))) - 1;
        if (m == 0) {
            size.feasible = false;
            size.log_m = rhs;
            return size;
        }
        size.exact = m;
        size.log_m = std::log(static_cast<double>(m));
    } else {
        size.log_m = rhs;  // indistinguishable from log(ceil(e^rhs) - 1) here
    }
    return size;
}

namespace {

BoundReport finish_report(double log_m, std::size_t n_total, ValidityFlags flags,
                          BoundComponents parts) {
    BoundReport r;
    r.log_m_lower = log_m;
    r.feasible = log_m > 0.0;
    r.rate_per_use = std::max(log_m, 0.0) / static_cast<double>(n_total);
    r.validity = flags;
    r.components = parts;
    return r;
}

}  // namespace

BoundReport awgn_report(std::size_t n, std::size_t m, double eps, double power,
                        double second_moment, double a) {
    const double nd = static_cast<double>(n);
    BoundComponents parts;
    parts.first_order = 0.5 * nd * std::log1p(power);
    parts.saving_phase_penalty = 0.0;  // enters through the n + m denominator
    parts.chebyshev_penalty =
        std::sqrt((2.0 + eps) * nd * power / (eps * (power + 1.0)));
    parts.threshold_penalty = std::pow(nd, 0.25) + 1.0;
    const double log_m = achievable_log_m_awgn(n, eps, power);
    (void)a;
    return finish_report(log_m, n + m, awgn_conditions(n, eps, second_moment, power),
                         parts);
}

BoundReport awgn_report_total(std::size_t n, std::size_t m, double eps, double power,
                              double second_moment, double a) {
    const std::size_t n_star = n + m;
    const double nd = static_cast<double>(n_star);
    const double log1p_p = std::log1p(power);
    BoundComponents parts;
    parts.first_order = 0.5 * nd * log1p_p;
    parts.saving_phase_penalty =
        3.0 * log1p_p * std::sqrt(a * nd * std::log(nd)) / power;
    parts.chebyshev_penalty =
        std::sqrt((2.0 + eps) * nd * power / (eps * (power + 1.0)));
    parts.threshold_penalty = std::pow(nd, 0.25) + 0.5 * log1p_p + 1.0;
    const double log_m = achievable_log_m_awgn_total(n_star, eps, power, a);
    return finish_report(log_m, n_star, awgn_conditions(n, eps, second_moment, power),
                         parts);
}

BoundReport dmc_report(std::size_t n, std::size_t m, double eps, double power,
                       double a, double capacity, double dispersion) {
    const std::size_t n_star = n + m;
    const double nd = static_cast<double>(n_star);
    BoundComponents parts;
    parts.first_order = nd * capacity;
    parts.saving_phase_penalty =
        6.0 * capacity * std::sqrt(a * nd * std::log(nd)) / power;
    parts.chebyshev_penalty = std::sqrt((2.0 + eps) * nd * dispersion / eps);
    parts.threshold_penalty = std::pow(nd, 0.25) + capacity + 1.0;
    const double log_m =
        achievable_log_m_dmc_total(n_star, eps, power, a, capacity, dispersion);
    return finish_report(log_m, n_star, dmc_conditions(n, eps, a, power), parts);
}

}  // namespace savetx
