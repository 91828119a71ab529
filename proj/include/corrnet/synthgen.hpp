#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "corrnet/graph.hpp"
#include "corrnet/rng.hpp"
#include "corrnet/traffic.hpp"

namespace corrnet {

// Block-structured traffic: stations in a block share a diurnal base curve
// (two sinusoids with a block-specific phase) plus independent Gaussian
// noise. Cross-block phases are spread around the circle, which keeps
// cross-block correlations well below typical thresholds.
inline TrafficMatrix gen_traffic_blocks(int blocks, int per_block, int T,
                                        double noise, std::uint64_t seed) {
  if (blocks < 1 || per_block < 1) throw std::invalid_argument("gen_traffic_blocks: bad counts");
  if (T < 2) throw std::invalid_argument("gen_traffic_blocks: T must be >= 2");
  if (noise < 0.0) throw std::invalid_argument("gen_traffic_blocks: negative noise");
  TrafficMatrix m;
  m.T = T;
  auto rng = make_rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double amplitude = 1000.0;
  for (int b = 0; b < blocks; ++b) {
    const double phase = 2.0 * std::numbers::pi * b / blocks;
    std::vector<double> base(T);
    for (int t = 0; t < T; ++t) {
      const double w = 2.0 * std::numbers::pi * t / 24.0;
      base[t] = amplitude * (2.5 + std::sin(w + phase) + 0.5 * std::sin(2.0 * w + phase));
    }
    const double block_lon = 100.0 + 0.5 * b;
    const double block_lat = 30.0 + 0.5 * b;
    for (int s = 0; s < per_block; ++s) {
      StationRecord rec;
      rec.station_id = "bs_" + std::to_string(b) + "_" + std::to_string(s);
      rec.lon = block_lon + 0.01 * gauss(rng);
      rec.lat = block_lat + 0.01 * gauss(rng);
      rec.traffic.resize(T);
      for (int t = 0; t < T; ++t) {
        double v = base[t] + noise * amplitude * gauss(rng);
        rec.traffic[t] = std::max(v, 0.0);
      }
      m.records.push_back(std::move(rec));
    }
  }
  return m;
}

// (u,v)-flower: start from a cycle of u+v edges; each generation replaces
// every edge with two parallel paths of u and v edges between its endpoints.
// Deterministic; |E_g| = (u+v)^g, and for u > 1 the fractal dimension is
// ln(u+v)/ln(u).
inline Graph gen_flower(int u, int v, int generations) {
  if (u < 2 || v < u || generations < 1)
    throw std::invalid_argument("gen_flower: need u >= 2, v >= u, generations >= 1");
  // generation 1: a cycle of u+v edges
  std::vector<std::pair<int, int>> edges;
  int n = u + v;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  for (int g = 2; g <= generations; ++g) {
    std::vector<std::pair<int, int>> next;
    for (auto [a, b] : edges) {
      // path of u edges, then path of v edges, sharing only the endpoints
      for (int len : {u, v}) {
        int prev = a;
        for (int k = 1; k < len; ++k) {
          int fresh = n++;
          next.emplace_back(prev, fresh);
          prev = fresh;
        }
        next.emplace_back(prev, b);
      }
    }
    edges = std::move(next);
  }
  Graph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

inline Graph gen_path(int n) {
  if (n < 1) throw std::invalid_argument("gen_path: n >= 1");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph gen_grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("gen_grid: bad dimensions");
  Graph g(rows * cols);
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
      if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
    }
  }
  return g;
}

inline Graph gen_complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline Graph gen_star(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

inline Graph gen_cycle(int n) {
  if (n < 3) throw std::invalid_argument("gen_cycle: n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph gen_erdos_renyi(int n, double p, std::uint64_t seed) {
  if (n < 1 || p < 0.0 || p > 1.0) throw std::invalid_argument("gen_erdos_renyi: bad params");
  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < p) g.add_edge(i, j);
  return g;
}

// Preferential attachment: seed clique of m+1 nodes, then each arrival
// attaches m edges to distinct targets sampled proportional to degree
// (repeated-endpoint list; collisions resampled to keep the graph simple).
inline Graph gen_barabasi_albert(int n, int m, std::uint64_t seed) {
  if (m < 1 || n < m + 1) throw std::invalid_argument("gen_barabasi_albert: need n > m >= 1");
  auto rng = make_rng(seed);
  Graph g(n);
  std::vector<int> endpoint_pool;  // node repeated once per incident edge
  for (int i = 0; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      g.add_edge(i, j);
      endpoint_pool.push_back(i);
      endpoint_pool.push_back(j);
    }
  }
  for (int v = m + 1; v < n; ++v) {
    std::vector<int> targets;
    while (static_cast<int>(targets.size()) < m) {
      std::uniform_int_distribution<std::size_t> pick(0, endpoint_pool.size() - 1);
      int t = endpoint_pool[pick(rng)];
      bool dup = false;
      for (int u : targets) dup = dup || u == t;
      if (!dup) targets.push_back(t);
    }
    for (int t : targets) {
      g.add_edge(v, t);
      endpoint_pool.push_back(v);
      endpoint_pool.push_back(t);
    }
  }
  return g;
}

// Watts-Strogatz: ring lattice with k/2 neighbors per side, each edge
// rewired with probability p (self-loops and duplicates resampled).
inline Graph gen_watts_strogatz(int n, int k, double p, std::uint64_t seed) {
  if (k < 2 || k % 2 != 0 || k >= n)
    throw std::invalid_argument("gen_watts_strogatz: need even k with 2 <= k < n");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("gen_watts_strogatz: bad p");
  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> any_node(0, n - 1);
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= k / 2; ++j) g.add_edge(i, (i + j) % n);
  // rewire in ring order
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= k / 2; ++j) {
      if (coin(rng) >= p) continue;
      int old = (i + j) % n;
      if (!g.has_edge(i, old)) continue;  // already rewired away
      int fresh = any_node(rng);
      int tries = 0;
      while ((fresh == i || g.has_edge(i, fresh)) && tries < 100) {
        fresh = any_node(rng);
        ++tries;
      }
      if (fresh == i || g.has_edge(i, fresh)) continue;
      g.remove_edge(i, old);
      g.add_edge(i, fresh);
    }
  }
  return g;
}

}  // namespace corrnet
