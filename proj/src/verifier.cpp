#include "ocn/verifier.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ocn {
namespace {

struct OccupancyItem {
  int owner;  // index into a combined alone+group list, groups offset by alone count
  std::string label;
  std::vector<LinkId> links;
  int wavelength;
};

std::string path_to_string(const Topology& topo, const std::vector<NodeId>& path) {
  std::string out = "[";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += ",";
    out += (path[i] >= 0 && path[i] < topo.node_count()) ? topo.node_name(path[i])
                                                         : "?" + std::to_string(path[i]);
  }
  return out + "]";
}

class Checker {
 public:
  Checker(const Instance& instance, const Solution& solution)
      : instance_(instance), solution_(solution), topo_(instance.topology) {}

  VerifyResult run() {
    check_coverage();
    for (std::size_t i = 0; i < solution_.alone.size(); ++i) check_alone(i);
    for (std::size_t i = 0; i < solution_.groups.size(); ++i) check_group(i);
    check_clashes();
    VerifyResult result;
    result.violations = std::move(violations_);
    if (result.violations.empty()) {
      std::set<std::pair<LinkId, int>> occupied;
      std::set<int> wavelengths;
      for (const auto& item : items_) {
        for (LinkId link : item.links) {
          occupied.insert({link, item.wavelength});
          wavelengths.insert(item.wavelength);
        }
      }
      result.metrics = Metrics{static_cast<int>(occupied.size()),
                               static_cast<int>(wavelengths.size())};
    }
    return result;
  }

 private:
  void add(ViolationKind kind, const std::string& detail) {
    violations_.push_back(Violation{kind, detail});
  }

  void note_use(int demand_id, const std::string& where) {
    if (instance_.demand_index(demand_id) < 0) {
      add(ViolationKind::kWrongEndpoints,
          where + " references demand " + std::to_string(demand_id) +
              " which is not part of the instance");
      return;
    }
    uses_[demand_id].push_back(where);
  }

  void check_coverage() {
    for (std::size_t i = 0; i < solution_.alone.size(); ++i) {
      note_use(solution_.alone[i].demand_id, "alone assignment #" + std::to_string(i));
    }
    for (std::size_t i = 0; i < solution_.groups.size(); ++i) {
      const auto& g = solution_.groups[i];
      const std::string where = "group #" + std::to_string(i);
      note_use(g.demand_a, where);
      note_use(g.demand_b, where);
    }
    for (const Demand& d : instance_.demands) {
      auto it = uses_.find(d.id);
      if (it == uses_.end()) {
        add(ViolationKind::kUnassignedDemand,
            "demand " + std::to_string(d.id) + " (" + topo_.node_name(d.source) + "->" +
                topo_.node_name(d.destination) + ") has no assignment");
      } else if (it->second.size() > 1) {
        std::string detail = "demand " + std::to_string(d.id) + " assigned " +
                             std::to_string(it->second.size()) + " times:";
        for (const auto& where : it->second) detail += " " + where;
        add(ViolationKind::kDuplicateAssignment, detail);
      }
    }
  }

  void check_wavelength(int wavelength, const std::string& where) {
    if (wavelength < 0 || wavelength >= instance_.wavelength_capacity) {
      add(ViolationKind::kWavelengthOutOfRange,
          where + " uses wavelength " + std::to_string(wavelength) + ", capacity is " +
              std::to_string(instance_.wavelength_capacity));
    }
  }

  // Returns the link ids when the node sequence is a valid simple path in the
  // topology; otherwise records a NonSimplePath violation.
  std::optional<std::vector<LinkId>> check_path_shape(const std::vector<NodeId>& path,
                                                      const std::string& where) {
    if (path.empty()) {
      add(ViolationKind::kNonSimplePath, where + " has an empty path");
      return std::nullopt;
    }
    for (NodeId n : path) {
      if (n < 0 || n >= topo_.node_count()) {
        add(ViolationKind::kNonSimplePath,
            where + " path " + path_to_string(topo_, path) + " references an unknown node");
        return std::nullopt;
      }
    }
    if (!is_simple_path(path)) {
      add(ViolationKind::kNonSimplePath,
          where + " path " + path_to_string(topo_, path) + " repeats a node");
      return std::nullopt;
    }
    auto links = path_links(topo_, path);
    if (!links) {
      add(ViolationKind::kNonSimplePath,
          where + " path " + path_to_string(topo_, path) + " uses a hop with no link");
      return std::nullopt;
    }
    return links;
  }

  // Endpoint check; path shape must already have passed.
  bool check_endpoints(const std::vector<NodeId>& path, NodeId want_front, NodeId want_back,
                       const std::string& where) {
    if (path.front() != want_front || path.back() != want_back) {
      add(ViolationKind::kWrongEndpoints,
          where + " path " + path_to_string(topo_, path) + " should run " +
              topo_.node_name(want_front) + "->" + topo_.node_name(want_back));
      return false;
    }
    return true;
  }

  void check_alone(std::size_t index) {
    const AloneAssignment& a = solution_.alone[index];
    const std::string where = "alone assignment for demand " + std::to_string(a.demand_id);
    check_wavelength(a.wavelength, where);
    auto links = check_path_shape(a.path, where);
    if (!links) return;
    const int d_index = instance_.demand_index(a.demand_id);
    if (d_index < 0) return;  // reported during coverage
    const Demand& d = instance_.demands[d_index];
    if (!check_endpoints(a.path, d.source, d.destination, where)) return;
    if (links->empty()) {
      add(ViolationKind::kNonSimplePath, where + " path has no links");
      return;
    }
    items_.push_back(OccupancyItem{static_cast<int>(index), where, *links, a.wavelength});
  }

  void check_group(std::size_t index) {
    const GroupAssignment& g = solution_.groups[index];
    const int owner = static_cast<int>(solution_.alone.size() + index);
    const std::string where = "group (" + std::to_string(g.demand_a) + "," +
                              std::to_string(g.demand_b) + ")";

    check_wavelength(g.wavelength_tributary_a, where + " tributary a");
    check_wavelength(g.wavelength_tributary_b, where + " tributary b");
    check_wavelength(g.wavelength_aggregate, where + " aggregate");
    if (g.wavelength_tributary_a != g.wavelength_aggregate ||
        g.wavelength_tributary_b != g.wavelength_aggregate) {
      add(ViolationKind::kGroupWavelengthMismatch,
          where + " lightpaths use wavelengths " + std::to_string(g.wavelength_tributary_a) +
              "/" + std::to_string(g.wavelength_tributary_b) + "/" +
              std::to_string(g.wavelength_aggregate) + " instead of one common wavelength");
    }

    const int ia = instance_.demand_index(g.demand_a);
    const int ib = instance_.demand_index(g.demand_b);

    NodeId shared_destination = -1;
    if (ia >= 0 && ib >= 0) {
      const Demand& da = instance_.demands[ia];
      const Demand& db = instance_.demands[ib];
      if (da.destination != db.destination) {
        add(ViolationKind::kGroupDestinationMismatch,
            where + " pairs destinations " + topo_.node_name(da.destination) + " and " +
                topo_.node_name(db.destination));
      } else {
        shared_destination = da.destination;
      }
    }
    if (g.aggregation_node < 0 || g.aggregation_node >= topo_.node_count()) {
      add(ViolationKind::kWrongEndpoints, where + " has an unknown aggregation node");
      return;
    }
    if (shared_destination >= 0 && g.aggregation_node == shared_destination) {
      add(ViolationKind::kGroupNodeIsDestination,
          where + " aggregates at the shared destination " +
              topo_.node_name(shared_destination));
    }

    auto links_a = check_path_shape(g.tributary_a, where + " tributary a");
    auto links_b = check_path_shape(g.tributary_b, where + " tributary b");
    auto links_agg = check_path_shape(g.aggregate_path, where + " aggregate");

    if (links_a && ia >= 0 &&
        !check_endpoints(g.tributary_a, instance_.demands[ia].source, g.aggregation_node,
                         where + " tributary a")) {
      links_a.reset();
    }
    if (links_b && ib >= 0 &&
        !check_endpoints(g.tributary_b, instance_.demands[ib].source, g.aggregation_node,
                         where + " tributary b")) {
      links_b.reset();
    }
    if (links_agg && shared_destination >= 0 &&
        !check_endpoints(g.aggregate_path, g.aggregation_node, shared_destination,
                         where + " aggregate")) {
      links_agg.reset();
    }
    if (links_agg && links_agg->empty()) {
      add(ViolationKind::kNonSimplePath, where + " aggregate path has no links");
      links_agg.reset();
    }

    if (links_a && links_b) {
      for (LinkId link : *links_a) {
        if (std::find(links_b->begin(), links_b->end(), link) != links_b->end()) {
          add(ViolationKind::kTributaryOverlap,
              where + " tributaries both use link " + topo_.link_label(link));
        }
      }
    }
    for (const auto& [trib_links, label] :
         {std::pair{&links_a, "tributary a"}, std::pair{&links_b, "tributary b"}}) {
      if (!*trib_links || !links_agg) continue;
      for (LinkId link : **trib_links) {
        if (std::find(links_agg->begin(), links_agg->end(), link) != links_agg->end()) {
          add(ViolationKind::kNonSimplePath,
              where + " " + label + " and aggregate repeat link " + topo_.link_label(link) +
                  "; the combined walk must not repeat a link");
        }
      }
    }

    if (links_a) {
      items_.push_back(OccupancyItem{owner, where + " tributary a", *links_a,
                                     g.wavelength_tributary_a});
    }
    if (links_b) {
      items_.push_back(OccupancyItem{owner, where + " tributary b", *links_b,
                                     g.wavelength_tributary_b});
    }
    if (links_agg) {
      items_.push_back(OccupancyItem{owner, where + " aggregate", *links_agg,
                                     g.wavelength_aggregate});
    }
  }

  // Global (link, wavelength) exclusivity. Same-owner collisions are skipped
  // here: they are already reported as TributaryOverlap or walk violations.
  void check_clashes() {
    std::map<std::pair<LinkId, int>, std::vector<const OccupancyItem*>> by_channel;
    for (const auto& item : items_) {
      for (LinkId link : item.links) {
        by_channel[{link, item.wavelength}].push_back(&item);
      }
    }
    for (const auto& [channel, owners] : by_channel) {
      if (owners.size() < 2) continue;
      bool cross_owner = false;
      for (std::size_t i = 1; i < owners.size() && !cross_owner; ++i) {
        cross_owner = owners[i]->owner != owners[0]->owner;
      }
      if (!cross_owner) continue;
      std::string detail = "link " + topo_.link_label(channel.first) + " wavelength " +
                           std::to_string(channel.second) + " carried by:";
      for (const auto* item : owners) detail += " {" + item->label + "}";
      add(ViolationKind::kWavelengthClash, detail);
    }
  }

  const Instance& instance_;
  const Solution& solution_;
  const Topology& topo_;
  std::vector<Violation> violations_;
  std::map<int, std::vector<std::string>> uses_;
  std::vector<OccupancyItem> items_;
};

}  // namespace

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kUnassignedDemand: return "UnassignedDemand";
    case ViolationKind::kDuplicateAssignment: return "DuplicateAssignment";
    case ViolationKind::kNonSimplePath: return "NonSimplePath";
    case ViolationKind::kWrongEndpoints: return "WrongEndpoints";
    case ViolationKind::kWavelengthClash: return "WavelengthClash";
    case ViolationKind::kWavelengthOutOfRange: return "WavelengthOutOfRange";
    case ViolationKind::kGroupWavelengthMismatch: return "GroupWavelengthMismatch";
    case ViolationKind::kGroupDestinationMismatch: return "GroupDestinationMismatch";
    case ViolationKind::kGroupNodeIsDestination: return "GroupNodeIsDestination";
    case ViolationKind::kTributaryOverlap: return "TributaryOverlap";
  }
  return "Unknown";
}

VerifyResult verify_solution(const Instance& instance, const Solution& solution) {
  return Checker(instance, solution).run();
}

}  // namespace ocn
