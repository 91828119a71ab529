#pragma once

#include <cmath>
#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "corrnet/graph.hpp"

namespace corrnet {

struct StationRecord {
  std::string station_id;
  double lon = 0.0;
  double lat = 0.0;
  std::vector<double> traffic;
};

struct TrafficMatrix {
  std::vector<StationRecord> records;
  int T = 0;

  int num_stations() const { return static_cast<int>(records.size()); }
};

// Pearson correlation of two equal-length series, two-pass (mean, then
// centered moments). Returns nullopt when either series has zero variance.
inline std::optional<double> pearson(const std::vector<double>& x,
                                     const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("pearson: length mismatch");
  if (x.size() < 2) throw std::invalid_argument("pearson: need T >= 2");
  const std::size_t n = x.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  double r = sxy / (std::sqrt(sxx) * std::sqrt(syy));
  if (r > 1.0) r = 1.0;
  if (r < -1.0) r = -1.0;
  return r;
}

// Threshold graph: edge (i,j) iff rho_ij is defined and strictly above Z.
// Isolated nodes are kept; remove_isolated() strips them.
inline Graph build_graph(const TrafficMatrix& m, double threshold) {
  if (threshold <= 0.0 || threshold >= 1.0)
    throw std::invalid_argument("build_graph: threshold must be in (0,1)");
  const int n = m.num_stations();
  if (n < 2) throw std::invalid_argument("build_graph: need at least 2 stations");
  Graph g(n);
  g.threshold = threshold;
  g.meta.resize(n);
  for (int i = 0; i < n; ++i) {
    g.meta[i] = {m.records[i].station_id, m.records[i].lon, m.records[i].lat};
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto rho = pearson(m.records[i].traffic, m.records[j].traffic);
      if (rho && *rho > threshold) g.add_edge(i, j);
    }
  }
  return g;
}

struct IsolationReport {
  int isolated_count = 0;
  double isolated_rate = 0.0;
  std::vector<int> kept_original_index;  // new index -> original index
};

// Induced subgraph on nodes of degree >= 1, original relative order kept.
inline std::pair<Graph, IsolationReport> remove_isolated(const Graph& g) {
  const int n = g.num_nodes();
  std::vector<int> new_index(n, -1);
  IsolationReport rep;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) >= 1) {
      new_index[v] = static_cast<int>(rep.kept_original_index.size());
      rep.kept_original_index.push_back(v);
    }
  }
  rep.isolated_count = n - static_cast<int>(rep.kept_original_index.size());
  rep.isolated_rate = n > 0 ? static_cast<double>(rep.isolated_count) / n : 0.0;
  if (rep.kept_original_index.empty())
    throw std::runtime_error("remove_isolated: all nodes are isolated");
  Graph out(static_cast<int>(rep.kept_original_index.size()));
  out.threshold = g.threshold;
  if (!g.meta.empty()) {
    out.meta.reserve(rep.kept_original_index.size());
    for (int orig : rep.kept_original_index) out.meta.push_back(g.meta[orig]);
  }
  for (auto [a, b] : g.edges()) out.add_edge(new_index[a], new_index[b]);
  return {std::move(out), std::move(rep)};
}

struct CsvReadResult {
  TrafficMatrix matrix;
  std::vector<std::string> warnings;  // rejected rows, with line numbers
};

// CSV schema: station_id,lon,lat,t0,...,t{T-1}. Rows with missing or
// unparsable traffic values are rejected with a warning, not imputed.
inline CsvReadResult read_traffic_csv(std::istream& in) {
  CsvReadResult result;
  std::string line;
  int lineno = 0;
  int expected_cols = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (lineno == 1) {
      if (line.rfind("station_id,", 0) != 0)
        throw std::runtime_error("line 1: expected header starting with 'station_id,'");
      int cols = 1;
      for (char c : line)
        if (c == ',') ++cols;
      expected_cols = cols;
      result.matrix.T = cols - 3;
      if (result.matrix.T < 2)
        throw std::runtime_error("line 1: header must declare at least 2 traffic columns");
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    if (static_cast<int>(fields.size()) != expected_cols) {
      result.warnings.push_back("line " + std::to_string(lineno) +
                                ": wrong field count, row rejected");
      continue;
    }
    StationRecord rec;
    rec.station_id = fields[0];
    bool ok = true;
    try {
      std::size_t pos = 0;
      rec.lon = std::stod(fields[1], &pos);
      ok = ok && pos == fields[1].size();
      rec.lat = std::stod(fields[2], &pos);
      ok = ok && pos == fields[2].size();
      rec.traffic.reserve(result.matrix.T);
      for (int t = 0; t < result.matrix.T && ok; ++t) {
        const std::string& f = fields[3 + t];
        if (f.empty()) {
          ok = false;
          break;
        }
        double v = std::stod(f, &pos);
        ok = ok && pos == f.size() && v >= 0.0;
        rec.traffic.push_back(v);
      }
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok) {
      result.warnings.push_back("line " + std::to_string(lineno) +
                                ": missing or invalid value, row rejected");
      continue;
    }
    for (const auto& existing : result.matrix.records) {
      if (existing.station_id == rec.station_id)
        throw std::runtime_error("line " + std::to_string(lineno) +
                                 ": duplicate station_id " + rec.station_id);
    }
    result.matrix.records.push_back(std::move(rec));
  }
  return result;
}

inline void write_traffic_csv(std::ostream& out, const TrafficMatrix& m) {
  out << "station_id,lon,lat";
  for (int t = 0; t < m.T; ++t) out << ",t" << t;
  out << "\n";
  out.precision(10);
  for (const auto& rec : m.records) {
    out << rec.station_id << ',' << rec.lon << ',' << rec.lat;
    for (double v : rec.traffic) out << ',' << v;
    out << "\n";
  }
}

}  // namespace corrnet
