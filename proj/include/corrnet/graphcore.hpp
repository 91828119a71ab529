#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "corrnet/graph.hpp"

namespace corrnet {

constexpr int kUnreachable = -1;

// Unweighted single-source shortest paths; kUnreachable for other components.
inline std::vector<int> bfs_distances(const Graph& g, int source) {
  if (source < 0 || source >= g.num_nodes())
    throw std::out_of_range("bfs_distances: source out of range");
  std::vector<int> dist(g.num_nodes(), kUnreachable);
  std::vector<int> frontier{source}, next;
  dist[source] = 0;
  int d = 0;
  while (!frontier.empty()) {
    ++d;
    next.clear();
    for (int v : frontier) {
      for (int w : g.neighbors(v)) {
        if (dist[w] == kUnreachable) {
          dist[w] = d;
          next.push_back(w);
        }
      }
    }
    frontier.swap(next);
  }
  return dist;
}

struct ComponentDecomposition {
  std::vector<int> component_id;     // per node
  std::vector<int> sizes;            // sorted descending
  int giant_size = 0;
  std::vector<int> giant_nodes;      // nodes of the largest component, ascending
};

inline ComponentDecomposition components(const Graph& g) {
  const int n = g.num_nodes();
  ComponentDecomposition dec;
  dec.component_id.assign(n, -1);
  std::vector<int> raw_sizes;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (dec.component_id[s] != -1) continue;
    const int cid = static_cast<int>(raw_sizes.size());
    int size = 0;
    stack.push_back(s);
    dec.component_id[s] = cid;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++size;
      for (int w : g.neighbors(v)) {
        if (dec.component_id[w] == -1) {
          dec.component_id[w] = cid;
          stack.push_back(w);
        }
      }
    }
    raw_sizes.push_back(size);
  }
  int giant_cid = 0;
  for (std::size_t c = 0; c < raw_sizes.size(); ++c)
    if (raw_sizes[c] > raw_sizes[giant_cid]) giant_cid = static_cast<int>(c);
  dec.giant_size = raw_sizes.empty() ? 0 : raw_sizes[giant_cid];
  for (int v = 0; v < n; ++v)
    if (dec.component_id[v] == giant_cid) dec.giant_nodes.push_back(v);
  dec.sizes = std::move(raw_sizes);
  std::sort(dec.sizes.rbegin(), dec.sizes.rend());
  return dec;
}

// Induced subgraph on the given (ascending) node set; meta carried over.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& nodes) {
  std::vector<int> new_index(g.num_nodes(), -1);
  for (std::size_t i = 0; i < nodes.size(); ++i) new_index[nodes[i]] = static_cast<int>(i);
  Graph sub(static_cast<int>(nodes.size()));
  sub.threshold = g.threshold;
  if (!g.meta.empty())
    for (int v : nodes) sub.meta.push_back(g.meta[v]);
  for (auto [a, b] : g.edges())
    if (new_index[a] != -1 && new_index[b] != -1) sub.add_edge(new_index[a], new_index[b]);
  return sub;
}

inline Graph giant_component(const Graph& g) {
  return induced_subgraph(g, components(g).giant_nodes);
}

struct DistanceStats {
  double average_distance = 0.0;
  int diameter = 0;
  std::int64_t pair_count = 0;
  int sampled_sources = 0;  // 0 = exact all-pairs
};

// Average distance and diameter over the largest component. Exact all-pairs
// BFS up to max_exact nodes; above that a fixed uniform source sample.
inline DistanceStats distance_stats(const Graph& g, int max_exact = 10000,
                                    int sample_sources = 1000,
                                    std::uint64_t sample_seed = 0) {
  if (g.num_edges() == 0) throw std::runtime_error("distance_stats: graph has no edges");
  auto dec = components(g);
  std::vector<int>& giant = dec.giant_nodes;
  DistanceStats stats;
  std::vector<int> sources = giant;
  if (static_cast<int>(giant.size()) > max_exact) {
    std::mt19937_64 rng(sample_seed);
    std::shuffle(sources.begin(), sources.end(), rng);
    sources.resize(sample_sources);
    stats.sampled_sources = sample_sources;
  }
  std::int64_t total = 0;
  std::int64_t pairs = 0;
  int diameter = 0;
  for (int s : sources) {
    auto dist = bfs_distances(g, s);
    for (int v : giant) {
      if (v == s) continue;
      total += dist[v];
      ++pairs;
      diameter = std::max(diameter, dist[v]);
    }
  }
  stats.average_distance = pairs > 0 ? static_cast<double>(total) / pairs : 0.0;
  stats.diameter = diameter;
  // exact mode visits every unordered pair twice
  stats.pair_count = stats.sampled_sources == 0 ? pairs / 2 : pairs;
  return stats;
}

inline int graph_diameter(const Graph& g) { return distance_stats(g).diameter; }

inline double local_clustering(const Graph& g, int v) {
  const auto& nb = g.neighbors(v);
  const int k = static_cast<int>(nb.size());
  if (k < 2) return 0.0;
  int links = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.has_edge(nb[i], nb[j])) ++links;
  return 2.0 * links / (static_cast<double>(k) * (k - 1));
}

// Average local clustering; nodes with k < 2 contribute 0 and are included.
inline double clustering_coefficient(const Graph& g) {
  const int n = g.num_nodes();
  if (n == 0) return 0.0;
  double sum = 0.0;
  for (int v = 0; v < n; ++v) sum += local_clustering(g, v);
  return sum / n;
}

}  // namespace corrnet
