#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "corrnet/fractal.hpp"
#include "corrnet/graph.hpp"
#include "corrnet/graphcore.hpp"
#include "corrnet/rng.hpp"

namespace corrnet {

// Exact edge betweenness via per-source shortest-path DAG accumulation.
// Each unordered node pair contributes one unit of credit, split evenly
// across its shortest paths.
inline std::map<EdgeKey, double> edge_betweenness(const Graph& g) {
  const int n = g.num_nodes();
  std::map<EdgeKey, double> bc;
  for (auto [a, b] : g.edges()) bc[{a, b}] = 0.0;
  std::vector<double> sigma(n), delta(n);
  std::vector<int> dist(n);
  std::vector<int> order;
  order.reserve(n);
  for (int s = 0; s < n; ++s) {
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1);
    order.clear();
    sigma[s] = 1.0;
    dist[s] = 0;
    std::vector<int> frontier{s}, next;
    int d = 0;
    while (!frontier.empty()) {
      for (int v : frontier) order.push_back(v);
      ++d;
      next.clear();
      for (int v : frontier) {
        for (int w : g.neighbors(v)) {
          if (dist[w] == -1) {
            dist[w] = d;
            next.push_back(w);
          }
          if (dist[w] == d) sigma[w] += sigma[v];
        }
      }
      frontier.swap(next);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int v = *it;
      for (int u : g.neighbors(v)) {
        if (dist[u] == dist[v] - 1) {
          double credit = sigma[u] / sigma[v] * (1.0 + delta[v]);
          bc[edge_key(u, v)] += credit;
          delta[u] += credit;
        }
      }
    }
  }
  for (auto& [e, value] : bc) value /= 2.0;  // each pair was counted from both ends
  return bc;
}

struct SkeletonTree {
  int n = 0;
  int root = 0;
  std::vector<std::tuple<int, int, double>> tree_edges;  // (a, b, betweenness)

  Graph as_graph() const {
    Graph g(n);
    for (auto [a, b, w] : tree_edges) g.add_edge(a, b);
    return g;
  }
};

// Prim-style growth from `start`: always add the frontier edge (p in tree,
// v outside) with maximum betweenness; ties go to the smallest (p, v) pair.
// Betweenness is computed once on the input graph, not recomputed.
inline SkeletonTree extract_skeleton(const Graph& g, int start = 0) {
  require_connected(g, "extract_skeleton");
  if (start < 0 || start >= g.num_nodes())
    throw std::out_of_range("extract_skeleton: start out of range");
  auto bc = edge_betweenness(g);
  const int n = g.num_nodes();
  SkeletonTree tree;
  tree.n = n;
  tree.root = start;
  std::vector<char> in_tree(n, 0);
  in_tree[start] = 1;
  for (int step = 1; step < n; ++step) {
    int best_p = -1, best_v = -1;
    double best_w = -1.0;
    for (int p = 0; p < n; ++p) {
      if (!in_tree[p]) continue;
      for (int v : g.neighbors(p)) {
        if (in_tree[v]) continue;
        double w = bc.at(edge_key(p, v));
        if (w > best_w ||
            (w == best_w && std::pair{p, v} < std::pair{best_p, best_v})) {
          best_w = w;
          best_p = p;
          best_v = v;
        }
      }
    }
    in_tree[best_v] = 1;
    tree.tree_edges.emplace_back(best_p, best_v, best_w);
  }
  return tree;
}

// Wilson's loop-erased random walk; exactly uniform over spanning trees.
inline SkeletonTree random_spanning_tree(const Graph& g, std::uint64_t seed) {
  require_connected(g, "random_spanning_tree");
  const int n = g.num_nodes();
  auto rng = make_rng(seed);
  SkeletonTree tree;
  tree.n = n;
  tree.root = 0;
  std::vector<int> parent(n, -1);
  std::vector<char> in_tree(n, 0);
  in_tree[0] = 1;
  for (int i = 1; i < n; ++i) {
    if (in_tree[i]) continue;
    int v = i;
    while (!in_tree[v]) {
      const auto& nb = g.neighbors(v);
      std::uniform_int_distribution<std::size_t> pick(0, nb.size() - 1);
      parent[v] = nb[pick(rng)];
      v = parent[v];
    }
    // retrace from i, erasing loops implicitly via current parent pointers
    v = i;
    while (!in_tree[v]) {
      in_tree[v] = 1;
      v = parent[v];
    }
  }
  for (int v = 1; v < n; ++v) tree.tree_edges.emplace_back(parent[v], v, 0.0);
  return tree;
}

struct FractalityComparison {
  BoxCoveringResult original;
  BoxCoveringResult skeleton;
  BoxCoveringResult random_tree;
};

inline FractalityComparison compare_fractality(const Graph& g,
                                               const SkeletonTree& skeleton,
                                               const SkeletonTree& random_tree,
                                               int repetitions, std::uint64_t seed) {
  FractalityComparison cmp;
  cmp.original = box_cover_curve(g, repetitions, seed);
  cmp.skeleton = box_cover_curve(skeleton.as_graph(), repetitions, splitmix64(seed) + 1);
  cmp.random_tree = box_cover_curve(random_tree.as_graph(), repetitions, splitmix64(seed) + 2);
  return cmp;
}

}  // namespace corrnet
