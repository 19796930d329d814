#include "ocn/json_io.hpp"

#include <fstream>
#include <sstream>

namespace ocn {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json require(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string(what) + ": missing \"" + key + "\"");
  }
  return j.at(key);
}

std::vector<NodeId> path_from_json(const Topology& topology, const json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + ": path must be an array");
  std::vector<NodeId> path;
  for (const auto& node : j) {
    path.push_back(topology.node_or_throw(node.get<std::string>()));
  }
  return path;
}

ordered_json path_to_json(const Topology& topology, const std::vector<NodeId>& path) {
  ordered_json out = ordered_json::array();
  for (NodeId n : path) out.push_back(topology.node_name(n));
  return out;
}

}  // namespace

ordered_json topology_to_json(const Topology& topology) {
  ordered_json j;
  j["name"] = topology.name();
  j["nodes"] = topology.node_names();
  ordered_json links = ordered_json::array();
  for (const Link& link : topology.links()) {
    links.push_back({topology.node_name(link.u), topology.node_name(link.v)});
  }
  j["links"] = links;
  return j;
}

Topology topology_from_json(const json& j) {
  const auto name = require(j, "name", "topology").get<std::string>();
  std::vector<std::string> nodes;
  for (const auto& n : require(j, "nodes", "topology")) {
    nodes.push_back(n.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> links;
  for (const auto& l : require(j, "links", "topology")) {
    if (!l.is_array() || l.size() != 2) {
      throw ValidationError("topology: each link must be a [from, to] pair");
    }
    links.emplace_back(l.at(0).get<std::string>(), l.at(1).get<std::string>());
  }
  return Topology::build(name, std::move(nodes), std::move(links));
}

ordered_json demands_to_json(const Topology& topology, const std::vector<Demand>& demands) {
  ordered_json out = ordered_json::array();
  for (const Demand& d : demands) {
    ordered_json j;
    j["id"] = d.id;
    j["src"] = topology.node_name(d.source);
    j["dst"] = topology.node_name(d.destination);
    out.push_back(std::move(j));
  }
  return out;
}

std::vector<Demand> demands_from_json(const Topology& topology, const json& j) {
  if (!j.is_array()) throw ValidationError("demand file: expected a JSON list");
  std::vector<Demand> demands;
  for (const auto& item : j) {
    Demand d;
    d.id = require(item, "id", "demand").get<int>();
    d.source = topology.node_or_throw(require(item, "src", "demand").get<std::string>());
    d.destination = topology.node_or_throw(require(item, "dst", "demand").get<std::string>());
    demands.push_back(d);
  }
  return demands;
}

ordered_json instance_to_json(const Instance& instance) {
  ordered_json j;
  j["topology"] = topology_to_json(instance.topology);
  j["demands"] = demands_to_json(instance.topology, instance.demands);
  j["k_paths"] = instance.k_paths;
  j["wavelength_capacity"] = instance.wavelength_capacity;
  return j;
}

Instance instance_from_json(const json& j) {
  Topology topology = topology_from_json(require(j, "topology", "instance"));
  std::vector<Demand> demands = demands_from_json(topology, require(j, "demands", "instance"));
  int k_paths = 3;
  if (j.contains("k_paths")) k_paths = j.at("k_paths").get<int>();
  int capacity = 0;
  if (j.contains("wavelength_capacity")) {
    const auto& w = j.at("wavelength_capacity");
    if (w.is_string()) {
      if (w.get<std::string>() != "auto") {
        throw ValidationError("instance: wavelength_capacity must be an integer or \"auto\"");
      }
    } else {
      capacity = w.get<int>();
    }
  }
  return Instance::create(std::move(topology), std::move(demands), k_paths, capacity);
}

ordered_json solution_to_json(const Topology& topology, const Solution& solution) {
  ordered_json j;
  ordered_json alone = ordered_json::array();
  for (const auto& a : solution.alone) {
    ordered_json item;
    item["demand"] = a.demand_id;
    item["path"] = path_to_json(topology, a.path);
    item["wavelength"] = a.wavelength;
    alone.push_back(std::move(item));
  }
  j["alone"] = alone;
  ordered_json groups = ordered_json::array();
  for (const auto& g : solution.groups) {
    ordered_json item;
    item["demands"] = {g.demand_a, g.demand_b};
    item["aggregation_node"] = topology.node_name(g.aggregation_node);
    item["tributary_a"] = path_to_json(topology, g.tributary_a);
    item["tributary_b"] = path_to_json(topology, g.tributary_b);
    item["aggregate"] = path_to_json(topology, g.aggregate_path);
    if (g.wavelength_tributary_a == g.wavelength_aggregate &&
        g.wavelength_tributary_b == g.wavelength_aggregate) {
      item["wavelength"] = g.wavelength_aggregate;
    } else {
      item["wavelengths"] = {g.wavelength_tributary_a, g.wavelength_tributary_b,
                             g.wavelength_aggregate};
    }
    groups.push_back(std::move(item));
  }
  j["groups"] = groups;
  return j;
}

Solution solution_from_json(const Topology& topology, const json& j) {
  Solution solution;
  if (j.contains("alone")) {
    for (const auto& item : j.at("alone")) {
      AloneAssignment a;
      a.demand_id = require(item, "demand", "solution").get<int>();
      a.path = path_from_json(topology, require(item, "path", "solution"), "solution");
      a.wavelength = require(item, "wavelength", "solution").get<int>();
      solution.alone.push_back(std::move(a));
    }
  }
  if (j.contains("groups")) {
    for (const auto& item : j.at("groups")) {
      GroupAssignment g;
      const auto demands = require(item, "demands", "solution group");
      if (!demands.is_array() || demands.size() != 2) {
        throw ValidationError("solution group: \"demands\" must hold exactly two ids");
      }
      g.demand_a = demands.at(0).get<int>();
      g.demand_b = demands.at(1).get<int>();
      g.aggregation_node = topology.node_or_throw(
          require(item, "aggregation_node", "solution group").get<std::string>());
      g.tributary_a =
          path_from_json(topology, require(item, "tributary_a", "solution group"), "group");
      g.tributary_b =
          path_from_json(topology, require(item, "tributary_b", "solution group"), "group");
      g.aggregate_path =
          path_from_json(topology, require(item, "aggregate", "solution group"), "group");
      if (item.contains("wavelengths")) {
        const auto& w = item.at("wavelengths");
        if (!w.is_array() || w.size() != 3) {
          throw ValidationError("solution group: \"wavelengths\" must hold three values");
        }
        g.wavelength_tributary_a = w.at(0).get<int>();
        g.wavelength_tributary_b = w.at(1).get<int>();
        g.wavelength_aggregate = w.at(2).get<int>();
      } else {
        const int w = require(item, "wavelength", "solution group").get<int>();
        g.wavelength_tributary_a = g.wavelength_tributary_b = g.wavelength_aggregate = w;
      }
      solution.groups.push_back(std::move(g));
    }
  }
  return solution;
}

ordered_json solve_result_to_json(const Topology& topology, const SolveResult& result,
                                  const std::string& mode) {
  ordered_json j;
  j["mode"] = mode;
  j["status"] = to_string(result.status);
  j["lower_bound"] = result.lower_bound;
  j["explored_nodes"] = result.explored_nodes;
  if (result.solution) {
    const Metrics metrics = solution_metrics(*result.solution);
    j["metrics"] = {{"wavelength_links", metrics.wavelength_links},
                    {"distinct_wavelengths", metrics.distinct_wavelengths}};
    ordered_json body = solution_to_json(topology, *result.solution);
    j["alone"] = std::move(body["alone"]);
    j["groups"] = std::move(body["groups"]);
  }
  return j;
}

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw IoError("cannot parse " + path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  out << content;
  if (!out) {
    throw IoError("error while writing " + path.string());
  }
}

Topology load_topology_file(const std::filesystem::path& path) {
  try {
    return topology_from_json(load_json_file(path));
  } catch (const json::exception& e) {
    throw ValidationError("topology file " + path.string() + ": " + e.what());
  }
}

Instance load_instance_file(const std::filesystem::path& path) {
  try {
    return instance_from_json(load_json_file(path));
  } catch (const json::exception& e) {
    throw ValidationError("instance file " + path.string() + ": " + e.what());
  }
}

}  // namespace ocn
