#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "corrnet/graph.hpp"

namespace corrnet {

// Edge list: one "i j" pair per line, 0-based. Node count and metadata live
// in the JSON sidecar.
inline void write_edge_list(std::ostream& out, const Graph& g) {
  for (auto [a, b] : g.edges()) out << a << ' ' << b << '\n';
}

inline nlohmann::json node_sidecar_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.num_nodes();
  j["threshold"] = g.threshold;
  j["nodes"] = nlohmann::json::array();
  for (int v = 0; v < g.num_nodes(); ++v) {
    nlohmann::json node;
    node["index"] = v;
    if (!g.meta.empty()) {
      node["station_id"] = g.meta[v].station_id;
      node["lon"] = g.meta[v].lon;
      node["lat"] = g.meta[v].lat;
    }
    j["nodes"].push_back(node);
  }
  return j;
}

inline Graph read_edge_list(std::istream& edges_in, int n) {
  Graph g(n);
  std::string line;
  int lineno = 0;
  while (std::getline(edges_in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ss(line);
    int a, b;
    if (!(ss >> a >> b))
      throw std::runtime_error("edge list line " + std::to_string(lineno) + ": parse error");
    g.add_edge(a, b);
  }
  return g;
}

inline Graph read_graph_files(const std::string& edge_path, const std::string& sidecar_path) {
  std::ifstream side(sidecar_path);
  if (!side) throw std::runtime_error("cannot open " + sidecar_path);
  nlohmann::json j;
  side >> j;
  std::ifstream edges(edge_path);
  if (!edges) throw std::runtime_error("cannot open " + edge_path);
  Graph g = read_edge_list(edges, j.at("n").get<int>());
  g.threshold = j.value("threshold", 0.0);
  if (j.contains("nodes")) {
    for (const auto& node : j["nodes"]) {
      if (node.contains("station_id")) {
        if (g.meta.empty()) g.meta.resize(g.num_nodes());
        int v = node.at("index").get<int>();
        g.meta[v] = {node["station_id"].get<std::string>(), node.value("lon", 0.0),
                     node.value("lat", 0.0)};
      }
    }
  }
  return g;
}

inline void write_graph_files(const Graph& g, const std::string& edge_path,
                              const std::string& sidecar_path) {
  std::ofstream edges(edge_path);
  if (!edges) throw std::runtime_error("cannot write " + edge_path);
  write_edge_list(edges, g);
  std::ofstream side(sidecar_path);
  if (!side) throw std::runtime_error("cannot write " + sidecar_path);
  side << node_sidecar_json(g).dump(2) << '\n';
}

}  // namespace corrnet
