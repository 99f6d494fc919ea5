#pragma once

#include <string>

#include <json.hpp>

#include "qaoa/instance.hpp"
#include "qaoa/landscape.hpp"
#include "qaoa/oracle.hpp"
#include "qaoa/schedule.hpp"
#include "qaoa/strategies.hpp"

namespace qaoa {

using nlohmann::json;

json to_json(const IsingInstance& instance);
IsingInstance instance_from_json(const json& j);

json to_json(const LinearParams& lp);
LinearParams linear_params_from_json(const json& j);

json to_json(const Schedule& schedule);
Schedule schedule_from_json(const json& j);

json to_json(const LinearFit& fit);
json to_json(const GroundTruth& gt);
json to_json(const StrategyReport& report);

json landscape_metadata(const LandscapeGrid& grid, const std::string& instance_label,
                        const std::string& normalization);

IsingInstance load_instance(const std::string& path);
void save_json(const json& j, const std::string& path);
json load_json(const std::string& path);

}  // namespace qaoa
