#include "ocn/topologies.hpp"

namespace ocn {

Topology fig1_topology() {
  return Topology::build("fig1", {"A", "B", "X", "C"},
                         {{"A", "X"}, {"B", "X"}, {"X", "C"}});
}

Topology nsfnet_topology() {
  std::vector<std::string> nodes;
  for (int i = 1; i <= 14; ++i) nodes.push_back(std::to_string(i));
  return Topology::build(
      "nsfnet", nodes,
      {{"1", "2"},   {"1", "3"},   {"1", "8"},  {"2", "3"},  {"2", "4"},
       {"3", "6"},   {"4", "5"},   {"4", "11"}, {"5", "6"},  {"5", "7"},
       {"6", "10"},  {"6", "13"},  {"7", "8"},  {"8", "9"},  {"9", "10"},
       {"9", "12"},  {"9", "14"},  {"11", "12"}, {"11", "13"}, {"12", "14"},
       {"13", "14"}});
}

Topology india_topology() {
  return Topology::build(
      "india",
      {"DEL", "JAI", "AMD", "BOM", "PNQ", "HYD", "BLR", "MAA", "CCU", "PAT",
       "LKO", "KNP", "NAG", "BHO"},
      {{"DEL", "JAI"}, {"DEL", "LKO"}, {"DEL", "KNP"}, {"DEL", "BHO"},
       {"JAI", "AMD"}, {"JAI", "BHO"}, {"AMD", "BOM"}, {"AMD", "BHO"},
       {"BOM", "PNQ"}, {"BOM", "HYD"}, {"PNQ", "HYD"}, {"PNQ", "BLR"},
       {"HYD", "BLR"}, {"HYD", "NAG"}, {"HYD", "MAA"}, {"BLR", "MAA"},
       {"MAA", "CCU"}, {"CCU", "PAT"}, {"CCU", "NAG"}, {"PAT", "LKO"},
       {"PAT", "KNP"}, {"LKO", "KNP"}, {"NAG", "BHO"}});
}

std::optional<Topology> builtin_topology(std::string_view name) {
  if (name == "fig1") return fig1_topology();
  if (name == "nsfnet") return nsfnet_topology();
  if (name == "india") return india_topology();
  return std::nullopt;
}

std::vector<std::string> builtin_topology_names() { return {"fig1", "india", "nsfnet"}; }

}  // namespace ocn
