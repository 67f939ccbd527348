#pragma once

#include <string>

#include <json.hpp>

#include "schedgame/dualfit.hpp"
#include "schedgame/equilibrium.hpp"
#include "schedgame/lp.hpp"
#include "schedgame/model.hpp"
#include "schedgame/optimal.hpp"

namespace schedgame {

// JSON wire formats. Rationals travel as strings ("3", "7/2"); plain JSON
// integers are also accepted on input, floats never are.

nlohmann::json instance_to_json(const Instance& instance);
Instance instance_from_json(const nlohmann::json& j);

/// Parses and normalizes an instance from raw JSON text
/// ({"jobs": [...], "speeds": [...]}).
Instance parse_instance(const std::string& text);

nlohmann::json schedule_to_json(const Schedule& schedule);
Schedule schedule_from_json(const nlohmann::json& j);
Schedule parse_schedule(const std::string& text);

nlohmann::json trace_to_json(const MftTrace& trace);
nlohmann::json poa_report_to_json(const PoaReport& report);
nlohmann::json lp_to_json(const LinearProgram& lp);
nlohmann::json lp_solution_to_json(const LpSolution& solution);
nlohmann::json fitting_to_json(const DualFitting& fitting);
nlohmann::json fitting_check_to_json(const FittingCheck& check);
nlohmann::json sub_chains_to_json(const SubChains& chains);

}  // namespace schedgame
