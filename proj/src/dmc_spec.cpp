#include "savetx/dmc_spec.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "savetx/errors.hpp"

namespace savetx {

void DmcSpec::validate() const {
    if (input_size == 0 || output_size == 0) {
        throw std::invalid_argument("channel alphabets must be non-empty");
    }
    if (transition.size() != input_size) {
        throw std::invalid_argument("transition matrix must have one row per input symbol");
    }
    for (std::size_t x = 0; x < input_size; ++x) {
        const auto& row = transition[x];
        if (row.size() != output_size) {
            throw std::invalid_argument("transition row " + std::to_string(x) +
                                        " has wrong length");
        }
        double sum = 0.0;
        for (double q : row) {
            if (!(q >= 0.0 && q <= 1.0)) {
                throw std::invalid_argument("transition row " + std::to_string(x) +
                                            " has an entry outside [0, 1]");
            }
            sum += q;
        }
        if (std::abs(sum - 1.0) > 1e-12) {
            std::ostringstream msg;
            msg << "transition row " << x << " sums to " << sum << ", expected 1";
            throw std::invalid_argument(msg.str());
        }
    }
    if (cost.size() != input_size) {
        throw std::invalid_argument("cost vector must have one entry per input symbol");
    }
    bool has_idle = false;
    for (double c : cost) {
        if (!(c >= 0.0) || !std::isfinite(c)) {
            throw std::invalid_argument("costs must be finite and nonnegative");
        }
        if (c == 0.0) has_idle = true;
    }
    if (!has_idle) {
        throw std::invalid_argument("cost vector must contain a zero-cost idle symbol");
    }
}

double DmcSpec::min_cost() const { return *std::min_element(cost.begin(), cost.end()); }

double DmcSpec::max_cost() const { return *std::max_element(cost.begin(), cost.end()); }

std::size_t DmcSpec::idle_symbol() const {
    for (std::size_t x = 0; x < cost.size(); ++x) {
        if (cost[x] == 0.0) return x;
    }
    throw std::logic_error("validated DmcSpec has no idle symbol");
}

DmcSpec make_dmc(std::vector<std::vector<double>> transition, std::vector<double> cost) {
    DmcSpec spec;
    spec.input_size = transition.size();
    spec.output_size = transition.empty() ? 0 : transition.front().size();
    spec.transition = std::move(transition);
    spec.cost = std::move(cost);
    spec.validate();
    return spec;
}

DmcSpec load_dmc_text(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::vector<double> values;
        double v;
        while (ls >> v) values.push_back(v);
        if (!ls.eof()) {
            throw FileError("line " + std::to_string(lineno) + ": not a number row");
        }
        rows.push_back(std::move(values));
    }
    if (rows.size() < 2) {
        throw FileError("channel file needs at least one transition row and a cost line");
    }
    std::vector<double> cost = std::move(rows.back());
    rows.pop_back();
    try {
        return make_dmc(std::move(rows), std::move(cost));
    } catch (const std::invalid_argument& e) {
        throw FileError(std::string("invalid channel file: ") + e.what());
    }
}

DmcSpec load_dmc_text_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FileError("cannot open channel file: " + path.string());
    return load_dmc_text(in);
}

void to_json(nlohmann::json& j, const DmcSpec& spec) {
    j = nlohmann::json{{"input_size", spec.input_size},
                       {"output_size", spec.output_size},
                       {"transition", spec.transition},
                       {"cost", spec.cost}};
}

void from_json(const nlohmann::json& j, DmcSpec& spec) {
    spec.input_size = j.at("input_size").get<std::size_t>();
    spec.output_size = j.at("output_size").get<std::size_t>();
    spec.transition = j.at("transition").get<std::vector<std::vector<double>>>();
    spec.cost = j.at("cost").get<std::vector<double>>();
    spec.validate();
}

}  // namespace savetx
