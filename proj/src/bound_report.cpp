#include "savetx/bound_report.hpp"

namespace savetx {

void to_json(nlohmann::json& j, const BoundComponents& c) {
    j = nlohmann::json{{"first_order", c.first_order},
                       {"saving_phase_penalty", c.saving_phase_penalty},
                       {"chebyshev_penalty", c.chebyshev_penalty},
                       {"threshold_penalty", c.threshold_penalty}};
}

void to_json(nlohmann::json& j, const ValidityFlags& v) {
    j = nlohmann::json{{"concentration", v.concentration},
                       {"union_bound", v.union_bound},
                       {"outage_margin", v.outage_margin},
                       {"overall", v.overall()}};
}

void to_json(nlohmann::json& j, const BoundReport& r) {
    j = nlohmann::json{{"log_m_lower", r.log_m_lower},
                       {"feasible", r.feasible},
                       {"rate_per_use", r.rate_per_use},
                       {"validity", r.validity},
                       {"components", r.components}};
}

}  // namespace savetx
