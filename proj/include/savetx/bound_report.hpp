#pragma once

#include <json.hpp>

namespace savetx {

// Additive pieces of a log-codebook-size lower bound, in nats:
// log_m_lower = first_order - saving_phase_penalty - chebyshev_penalty
//               - threshold_penalty.
// threshold_penalty collects the decoding threshold n^{1/4} together with the
// constant slack of the bound.
struct BoundComponents {
    double first_order = 0.0;
    double saving_phase_penalty = 0.0;
    double chebyshev_penalty = 0.0;
    double threshold_penalty = 0.0;
};

// Large-n hypotheses, named for the error term each one controls.
struct ValidityFlags {
    bool concentration = false;
    bool union_bound = false;
    bool outage_margin = false;

    bool overall() const { return concentration && union_bound && outage_margin; }
};

struct BoundReport {
    double log_m_lower = 0.0;  // nats; negative values mean infeasible
    bool feasible = false;     // log_m_lower > 0
    double rate_per_use = 0.0; // max(log_m_lower, 0) / (n + m)
    ValidityFlags validity;
    BoundComponents components;
};

void to_json(nlohmann::json& j, const BoundComponents& c);
void to_json(nlohmann::json& j, const ValidityFlags& v);
void to_json(nlohmann::json& j, const BoundReport& r);

}  // namespace savetx
