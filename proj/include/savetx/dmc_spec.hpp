#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include <json.hpp>

namespace savetx {

// Finite channel with a per-symbol cost. The alphabet must contain an idle
// symbol of cost zero.
struct DmcSpec {
    std::size_t input_size = 0;
    std::size_t output_size = 0;
    std::vector<std::vector<double>> transition;  // input_size rows of output_size
    std::vector<double> cost;

    // Throws std::invalid_argument (with the offending row index) on a
    // malformed matrix or cost vector.
    void validate() const;

    double min_cost() const;
    double max_cost() const;
    std::size_t idle_symbol() const;  // first index with cost exactly 0
};

DmcSpec make_dmc(std::vector<std::vector<double>> transition, std::vector<double> cost);

// Plain-text format: one whitespace-separated row of transition probabilities
// per input symbol, then a final line with the cost of each input symbol.
// Blank lines and lines starting with '#' are ignored.
DmcSpec load_dmc_text(std::istream& in);
DmcSpec load_dmc_text_file(const std::filesystem::path& path);

void to_json(nlohmann::json& j, const DmcSpec& spec);
void from_json(const nlohmann::json& j, DmcSpec& spec);

}  // namespace savetx
