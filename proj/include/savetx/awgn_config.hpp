#pragma once

#include <cstdint>
#include <optional>

#include <json.hpp>

#include "savetx/energy_process.hpp"

namespace savetx {

// Complete AWGN save-and-transmit scenario: n transmission slots preceded by
// m saving slots, arrivals with mean power P, tilt lambda and concentration
// constant a.
struct AwgnEhConfig {
    std::size_t n = 0;
    double eps = 0.0;
    double power = 0.0;  // P = E[E1]
    EnergyProcess energy;
    double lambda = 0.0;
    double a = 0.0;
    std::size_t m = 0;

    std::size_t total_length() const { return n + m; }
};

struct AwgnOverrides {
    std::optional<double> lambda;
    std::optional<double> a;
    std::optional<std::size_t> m;
};

// Fills lambda, a and m with their default choices (1/(4P),
// max{E[E1^2], 12 sqrt(2) P^2}, and the saving-phase rule) unless overridden.
AwgnEhConfig make_awgn_config(std::size_t n, double eps, EnergyProcess energy,
                              const AwgnOverrides& overrides = {});

void to_json(nlohmann::json& j, const AwgnEhConfig& cfg);
void from_json(const nlohmann::json& j, AwgnEhConfig& cfg);

}  // namespace savetx
