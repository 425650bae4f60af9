#include "savetx/energy_process.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "savetx/normal.hpp"

namespace savetx {

std::string_view to_string(ArrivalKind kind) {
    switch (kind) {
        case ArrivalKind::constant: return "constant";
        case ArrivalKind::exponential: return "exponential";
        case ArrivalKind::scaled_bernoulli: return "scaled-bernoulli";
        case ArrivalKind::two_point: return "two-point";
        case ArrivalKind::truncated_gaussian: return "truncated-gaussian";
    }
    throw std::logic_error("unknown ArrivalKind");
}

ArrivalKind arrival_kind_from_string(std::string_view name) {
    if (name == "constant") return ArrivalKind::constant;
    if (name == "exponential") return ArrivalKind::exponential;
    if (name == "scaled-bernoulli") return ArrivalKind::scaled_bernoulli;
    if (name == "two-point") return ArrivalKind::two_point;
    if (name == "truncated-gaussian") return ArrivalKind::truncated_gaussian;
    throw std::invalid_argument("unknown arrival law: " + std::string(name));
}

namespace {

void expect_param_count(std::span<const double> params, std::size_t want,
                        const char* law) {
    if (params.size() != want) {
        throw std::invalid_argument(std::string(law) + " expects " +
                                    std::to_string(want) + " parameter(s), got " +
                                    std::to_string(params.size()));
    }
}

}  // namespace

EnergyProcess make_energy_process(ArrivalKind kind, double mean,
                                  std::span<const double> params) {
    if (!(mean >= 0.0) || !std::isfinite(mean)) {
        throw std::invalid_argument("arrival mean must be a finite nonnegative real");
    }
    EnergyProcess p;
    p.kind = kind;
    switch (kind) {
        case ArrivalKind::constant: {
            expect_param_count(params, 0, "constant");
            p.mean = mean;
            p.second_moment = mean * mean;
            break;
        }
        case ArrivalKind::exponential: {
            expect_param_count(params, 0, "exponential");
            p.mean = mean;
            p.second_moment = 2.0 * mean * mean;
            break;
        }
        case ArrivalKind::scaled_bernoulli: {
            expect_param_count(params, 1, "scaled-bernoulli");
            const double q = params[0];
            if (!(q > 0.0 && q <= 1.0)) {
                throw std::invalid_argument(
                    "scaled-bernoulli success probability must lie in (0, 1]");
            }
            p.mean = mean;
            p.second_moment = mean * mean / q;  // q * (mean/q)^2
            p.params = {q};
            break;
        }
        case ArrivalKind::two_point: {
            expect_param_count(params, 2, "two-point");
            const double low = params[0];
            const double high = params[1];
            if (!(low >= 0.0)) {
                throw std::invalid_argument("two-point support must be nonnegative");
            }
            if (!(low < high)) {
                throw std::invalid_argument("two-point requires low < high");
            }
            if (!(low <= mean && mean <= high)) {
                throw std::invalid_argument("two-point mean must lie in [low, high]");
            }
            const double ph = (mean - low) / (high - low);
            p.mean = mean;
            p.second_moment = (1.0 - ph) * low * low + ph * high * high;
            p.params = {low, high};
            break;
        }
        case ArrivalKind::truncated_gaussian: {
            expect_param_count(params, 1, "truncated-gaussian");
            const double mu = mean;  // location of the parent normal
            const double sigma = params[0];
            if (!(sigma > 0.0)) {
                throw std::invalid_argument("truncated-gaussian sigma must be positive");
            }
            // Moments of Normal(mu, sigma^2) conditioned on being >= 0.
            const double alpha = -mu / sigma;
            const double z = normal_cdf(mu / sigma);  // Pr{parent >= 0}
            const double h = normal_pdf(alpha) / z;
            const double trunc_mean = mu + sigma * h;
            const double trunc_var = sigma * sigma * (1.0 + alpha * h - h * h);
            p.mean = trunc_mean;
            p.second_moment = trunc_var + trunc_mean * trunc_mean;
            p.params = {mu, sigma};
            break;
        }
    }
    return p;
}

void sample_arrivals_into(const EnergyProcess& proc, std::span<double> out,
                          RandomStream& rs) {
    switch (proc.kind) {
        case ArrivalKind::constant: {
            for (double& v : out) v = proc.mean;
            break;
        }
        case ArrivalKind::exponential: {
            for (double& v : out) v = rs.exponential(proc.mean);
            break;
        }
        case ArrivalKind::scaled_bernoulli: {
            const double q = proc.params.at(0);
            const double level = proc.mean / q;
            for (double& v : out) v = rs.uniform01() < q ? level : 0.0;
            break;
        }
        case ArrivalKind::two_point: {
            const double low = proc.params.at(0);
            const double high = proc.params.at(1);
            const double ph = (proc.mean - low) / (high - low);
            for (double& v : out) v = rs.uniform01() < ph ? high : low;
            break;
        }
        case ArrivalKind::truncated_gaussian: {
            const double mu = proc.params.at(0);
            const double sigma = proc.params.at(1);
            const double lo = normal_cdf(-mu / sigma);
            const double span = 1.0 - lo;
            for (double& v : out) {
                const double u = lo + rs.uniform01() * span;
                const double x = mu + sigma * normal_quantile_unchecked(u);
                v = x > 0.0 ? x : 0.0;
            }
            break;
        }
    }
}

std::vector<double> sample_arrivals(const EnergyProcess& proc, std::size_t count,
                                    std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("sample count must be >= 1");
    std::vector<double> out(count);
    RandomStream rs(seed);
    sample_arrivals_into(proc, out, rs);
    return out;
}

void to_json(nlohmann::json& j, const EnergyProcess& proc) {
    j = nlohmann::json{{"kind", to_string(proc.kind)},
                       {"mean", proc.mean},
                       {"second_moment", proc.second_moment},
                       {"params", proc.params}};
}

void from_json(const nlohmann::json& j, EnergyProcess& proc) {
    const ArrivalKind kind = arrival_kind_from_string(j.at("kind").get<std::string>());
    const auto params = j.at("params").get<std::vector<double>>();
    const double mean = j.at("mean").get<double>();

    // Rebuild from the defining parameters so that a deserialized process is
    // field-for-field identical to the original (and samples bit-identically).
    EnergyProcess rebuilt;
    if (kind == ArrivalKind::truncated_gaussian) {
        if (params.size() != 2) {
            throw std::invalid_argument("truncated-gaussian serialization needs {mu, sigma}");
        }
        rebuilt = make_energy_process(kind, params[0], std::span(params).subspan(1, 1));
    } else {
        rebuilt = make_energy_process(kind, mean, params);
    }

    const double stored_sm = j.at("second_moment").get<double>();
    const double tol = 1e-9 * std::max({1.0, std::abs(rebuilt.mean),
                                        std::abs(rebuilt.second_moment)});
    if (std::abs(rebuilt.mean - mean) > tol ||
        std::abs(rebuilt.second_moment - stored_sm) > tol) {
        throw std::invalid_argument(
            "energy process serialization is inconsistent with its parameters");
    }
    proc = rebuilt;
}

}  // namespace savetx
