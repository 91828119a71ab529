#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace corrnet {

using EdgeKey = std::pair<int, int>;  // (min, max)

inline EdgeKey edge_key(int a, int b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

struct NodeMeta {
  std::string station_id;
  double lon = 0.0;
  double lat = 0.0;
};

// Simple undirected graph over 0..n-1. Adjacency lists are kept sorted so
// that edge iteration order (and therefore every seeded algorithm downstream)
// is deterministic.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n) {}

  int num_nodes() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::vector<int>& neighbors(int v) const {
    check_node(v);
    return adj_[v];
  }

  // Edges as (i, j) with i < j, in insertion order.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  int degree(int v) const {
    check_node(v);
    return static_cast<int>(adj_[v].size());
  }

  bool has_edge(int a, int b) const {
    check_node(a);
    check_node(b);
    const auto& small = adj_[a].size() <= adj_[b].size() ? adj_[a] : adj_[b];
    int other = adj_[a].size() <= adj_[b].size() ? b : a;
    return std::binary_search(small.begin(), small.end(), other);
  }

  void add_edge(int a, int b) {
    check_node(a);
    check_node(b);
    if (a == b) throw std::invalid_argument("self-loop not allowed");
    if (has_edge(a, b)) throw std::invalid_argument("duplicate edge");
    insert_sorted(adj_[a], b);
    insert_sorted(adj_[b], a);
    if (a > b) std::swap(a, b);
    edges_.emplace_back(a, b);
  }

  void remove_edge(int a, int b) {
    if (!has_edge(a, b)) throw std::invalid_argument("remove_edge: edge absent");
    erase_sorted(adj_[a], b);
    erase_sorted(adj_[b], a);
    auto key = a < b ? std::pair{a, b} : std::pair{b, a};
    edges_.erase(std::find(edges_.begin(), edges_.end(), key));
  }

  // Inserts the edge if absent; returns false if it already exists.
  bool try_add_edge(int a, int b) {
    if (a == b || has_edge(a, b)) return false;
    add_edge(a, b);
    return true;
  }

  // Node metadata is optional; empty when the graph is purely synthetic.
  std::vector<NodeMeta> meta;
  double threshold = 0.0;

 private:
  void check_node(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("node index out of range");
  }

  static void insert_sorted(std::vector<int>& vec, int x) {
    vec.insert(std::upper_bound(vec.begin(), vec.end(), x), x);
  }

  static void erase_sorted(std::vector<int>& vec, int x) {
    vec.erase(std::lower_bound(vec.begin(), vec.end(), x));
  }

  int n_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
};

}  // namespace corrnet
