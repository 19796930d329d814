#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "ocn/model.hpp"
#include "ocn/solver.hpp"

namespace ocn {

// Canonical interchange formats. Topology:
//   {"name": str, "nodes": [str], "links": [[str, str]]}
// Demand list:
//   [{"id": int, "src": str, "dst": str}]
// Instance:
//   {"topology": {...}, "demands": [...],
//    "k_paths": int (default 3), "wavelength_capacity": int or "auto"}
// Solution:
//   {"alone":  [{"demand": int, "path": [str], "wavelength": int}],
//    "groups": [{"demands": [int, int], "aggregation_node": str,
//                "tributary_a": [str], "tributary_b": [str],
//                "aggregate": [str], "wavelength": int}]}
// A group may alternatively carry "wavelengths": [a, b, aggregate]; writers
// emit the single common "wavelength".

nlohmann::ordered_json topology_to_json(const Topology& topology);
Topology topology_from_json(const nlohmann::json& j);

nlohmann::ordered_json demands_to_json(const Topology& topology,
                                       const std::vector<Demand>& demands);
std::vector<Demand> demands_from_json(const Topology& topology, const nlohmann::json& j);

nlohmann::ordered_json instance_to_json(const Instance& instance);
Instance instance_from_json(const nlohmann::json& j);

nlohmann::ordered_json solution_to_json(const Topology& topology, const Solution& solution);
Solution solution_from_json(const Topology& topology, const nlohmann::json& j);

// Solution plus solver metadata, as emitted by the solve subcommand.
nlohmann::ordered_json solve_result_to_json(const Topology& topology, const SolveResult& result,
                                            const std::string& mode);

// File helpers. Read/parse problems raise IoError; content problems raise
// ValidationError.
nlohmann::json load_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);
Topology load_topology_file(const std::filesystem::path& path);
Instance load_instance_file(const std::filesystem::path& path);

}  // namespace ocn
