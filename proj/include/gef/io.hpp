#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "gef/model.hpp"

namespace gef {

using Json = nlohmann::json;

// Malformed documents raise InvalidInstance.
Instance parse_instance(const Json& doc);
Json instance_to_json(const Instance& inst, std::optional<Utility> threshold = std::nullopt);

Allocation parse_allocation(const Json& doc, const Instance& inst);
Json allocation_to_json(const Instance& inst, const Allocation& alloc);

Json result_to_json(const Instance& inst, const SolveResult& r);

Json read_json_file(const std::string& path);
void write_text(const std::string& path, const std::string& text);

FairnessNotion parse_notion(const std::string& s);
EfficiencyGoal parse_goal(const std::string& s);

}  // namespace gef
