#pragma once

#include <string>

#include <json.hpp>

#include "costmodel.hpp"
#include "explorer.hpp"
#include "types.hpp"

namespace draco::io {

// Network descriptor JSON; round-trips losslessly.
nlohmann::json network_to_json(const network_spec& net);
network_spec network_from_json(const nlohmann::json& j);
std::string network_to_string(const network_spec& net);
network_spec network_from_string(const std::string& text);

// Config echo embedded in every analysis/sweep output.
nlohmann::json config_echo(const array_config& array);

// Per-layer counts: one row per layer.
std::string counts_csv(const network_spec& net);
nlohmann::json counts_json(const network_spec& net);

// Mapping dump: {layer, pe_set_rows, pe_set_cols, r_g, r_f, r_s, passes, utilization}.
std::string mapping_csv(const network_spec& net, const array_config& array);

// Cost report: CSV per layer plus a JSON aggregate with the config echo.
std::string cost_csv(const network_cost& cost);
nlohmann::json cost_aggregate_json(const network_cost& cost, const array_config& array);

// Sweep output (row order: array, alpha, rho, G ascending; byte-stable).
std::string sweep_csv(const sweep_result& sweep);
nlohmann::json sweep_json(const sweep_result& sweep);
sweep_result sweep_from_json(const nlohmann::json& j);

nlohmann::json takeaway_json(const takeaway_report& rep);
nlohmann::json comparison_json(const std::vector<comparison_row>& rows);

}  // namespace draco::io
