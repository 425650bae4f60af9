#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "savetx/rng.hpp"

namespace savetx {

// Arrival laws for the i.i.d. energy process. All laws have nonnegative
// support; mean and second moment are computed in closed form at construction.
enum class ArrivalKind {
    constant,
    exponential,
    scaled_bernoulli,
    two_point,
    truncated_gaussian,
};

std::string_view to_string(ArrivalKind kind);
ArrivalKind arrival_kind_from_string(std::string_view name);

struct EnergyProcess {
    ArrivalKind kind = ArrivalKind::constant;
    double mean = 0.0;           // P = E[E1]
    double second_moment = 0.0;  // E[E1^2]
    std::vector<double> params;  // law-specific, see make_energy_process

    double variance() const { return second_moment - mean * mean; }
};

// Builds a process with analytically computed moments.
//
// Parameters per law:
//   constant            none; every arrival equals `mean`
//   exponential         none; rate 1/mean
//   scaled_bernoulli    {q}: value mean/q with probability q, else 0
//   two_point           {low, high}: support {low, high} with the mixing
//                       probability chosen so the mean matches; 0 <= low < high
//   truncated_gaussian  {sigma}: parent Normal(mean, sigma^2) truncated to
//                       [0, inf) and renormalized. The stored mean and second
//                       moment are those of the truncated law, which differ
//                       from the parent's parameters.
EnergyProcess make_energy_process(ArrivalKind kind, double mean,
                                  std::span<const double> params = {});

// Deterministic for a fixed seed; every entry is >= 0.
std::vector<double> sample_arrivals(const EnergyProcess& proc, std::size_t count,
                                    std::uint64_t seed);

// Core sampler reused by the simulator so trials can use derived streams.
void sample_arrivals_into(const EnergyProcess& proc, std::span<double> out,
                          RandomStream& rs);

void to_json(nlohmann::json& j, const EnergyProcess& proc);
void from_json(const nlohmann::json& j, EnergyProcess& proc);

}  // namespace savetx
