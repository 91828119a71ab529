#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "corrnet/graph.hpp"
#include "corrnet/graphcore.hpp"

namespace corrnet {

enum class Strategy { CI, HD, HDA };

inline const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::CI: return "CI";
    case Strategy::HD: return "HD";
    case Strategy::HDA: return "HDA";
  }
  return "?";
}

inline Strategy strategy_from_string(const std::string& s) {
  if (s == "CI" || s == "ci") return Strategy::CI;
  if (s == "HD" || s == "hd") return Strategy::HD;
  if (s == "HDA" || s == "hda") return Strategy::HDA;
  throw std::invalid_argument("unknown strategy: " + s);
}

// Residual graph state during dismantling: removed nodes keep their index,
// degrees and distances are taken over active nodes only.
class Residual {
 public:
  explicit Residual(const Graph& g)
      : g_(g), active_(g.num_nodes(), 1), degree_(g.num_nodes()) {
    for (int v = 0; v < g.num_nodes(); ++v) degree_[v] = g.degree(v);
  }

  bool active(int v) const { return active_[v] != 0; }
  int degree(int v) const { return degree_[v]; }
  int num_nodes() const { return g_.num_nodes(); }

  void remove(int v) {
    if (!active_[v]) throw std::invalid_argument("node already removed");
    active_[v] = 0;
    degree_[v] = 0;
    for (int w : g_.neighbors(v))
      if (active_[w]) --degree_[w];
  }

  int giant_size() const {
    const int n = g_.num_nodes();
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    int best = 0;
    for (int s = 0; s < n; ++s) {
      if (!active_[s] || seen[s]) continue;
      int size = 0;
      seen[s] = 1;
      stack.push_back(s);
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++size;
        for (int w : g_.neighbors(v)) {
          if (active_[w] && !seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
        }
      }
      if (size > best) best = size;
    }
    return best;
  }

  // (k_i - 1) * sum over frontier at exact distance l of (k_j - 1),
  // degrees and distances in the residual graph.
  std::int64_t ci_value(int i, int radius) const {
    if (i < 0 || i >= g_.num_nodes()) throw std::out_of_range("ci_value: bad node");
    if (!active_[i]) return 0;
    if (degree_[i] <= 1) return 0;
    std::vector<int> dist(g_.num_nodes(), -1);
    std::vector<int> frontier{i}, next;
    dist[i] = 0;
    for (int d = 0; d < radius && !frontier.empty(); ++d) {
      next.clear();
      for (int v : frontier) {
        for (int w : g_.neighbors(v)) {
          if (active_[w] && dist[w] == -1) {
            dist[w] = d + 1;
            next.push_back(w);
          }
        }
      }
      frontier.swap(next);
    }
    std::int64_t frontier_sum = 0;
    for (int j : frontier) frontier_sum += degree_[j] - 1;
    return static_cast<std::int64_t>(degree_[i] - 1) * frontier_sum;
  }

 private:
  const Graph& g_;
  std::vector<char> active_;
  std::vector<int> degree_;
};

inline std::int64_t ci_value(const Graph& g, int i, int radius) {
  if (radius < 1) throw std::invalid_argument("ci_value: radius must be >= 1");
  return Residual(g).ci_value(i, radius);
}

struct DismantlingCurve {
  Strategy strategy = Strategy::CI;
  int ci_radius = 0;  // CI only
  std::vector<int> removal_order;
  std::vector<double> q_values;
  std::vector<double> g_values;
  double q_c = 0.0;
  int cutoff = 0;
  std::uint64_t seed = 0;
};

// Removes nodes one at a time per the chosen strategy, recording
// q = removed / n and G(q) = giant / n (both normalized by the original
// node count) after every removal. Stops once the giant component is at
// most `cutoff` nodes (default ceil(sqrt(n))); q_c is the q at that point.
// With target_removals > 0 the order is extended past destruction.
inline DismantlingCurve dismantle(const Graph& g, Strategy strategy, int ci_radius = 2,
                                  int cutoff = -1, std::uint64_t seed = 0,
                                  int target_removals = 0) {
  const int n = g.num_nodes();
  if (n == 0) throw std::invalid_argument("dismantle: empty graph");
  if (strategy == Strategy::CI && ci_radius < 1)
    throw std::invalid_argument("dismantle: CI needs radius >= 1");
  if (cutoff < 0) cutoff = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
  DismantlingCurve curve;
  curve.strategy = strategy;
  curve.ci_radius = strategy == Strategy::CI ? ci_radius : 0;
  curve.cutoff = cutoff;
  curve.seed = seed;

  Residual res(g);
  // HD ranks once by the initial degree sequence
  std::vector<int> hd_order;
  if (strategy == Strategy::HD) {
    hd_order.resize(n);
    for (int v = 0; v < n; ++v) hd_order[v] = v;
    std::stable_sort(hd_order.begin(), hd_order.end(), [&](int a, int b) {
      return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });
  }

  int giant = res.giant_size();
  bool destroyed = giant <= cutoff;
  if (destroyed) curve.q_c = 0.0;
  std::size_t hd_pos = 0;
  int removed = 0;
  while ((!destroyed || removed < target_removals) && removed < n) {
    int victim = -1;
    switch (strategy) {
      case Strategy::HD:
        while (!res.active(hd_order[hd_pos])) ++hd_pos;
        victim = hd_order[hd_pos++];
        break;
      case Strategy::HDA: {
        int best_deg = -1;
        for (int v = 0; v < n; ++v) {
          if (res.active(v) && res.degree(v) > best_deg) {
            best_deg = res.degree(v);
            victim = v;
          }
        }
        break;
      }
      case Strategy::CI: {
        std::int64_t best_ci = -1;
        int best_deg = -1;
        for (int v = 0; v < n; ++v) {
          if (!res.active(v)) continue;
          std::int64_t ci = res.ci_value(v, ci_radius);
          if (ci > best_ci || (ci == best_ci && res.degree(v) > best_deg)) {
            best_ci = ci;
            best_deg = res.degree(v);
            victim = v;
          }
        }
        break;
      }
    }
    res.remove(victim);
    ++removed;
    giant = res.giant_size();
    curve.removal_order.push_back(victim);
    curve.q_values.push_back(static_cast<double>(removed) / n);
    curve.g_values.push_back(static_cast<double>(giant) / n);
    if (!destroyed && giant <= cutoff) {
      destroyed = true;
      curve.q_c = static_cast<double>(removed) / n;
    }
  }
  return curve;
}

struct InfluencerRow {
  int rank = 0;       // 1-based
  int node = 0;
  int degree = 0;     // degree in the input graph
  NodeMeta meta;
};

// First `count` nodes of the adaptive-CI removal order.
inline std::vector<InfluencerRow> top_influencers(const Graph& g, int count,
                                                  int ci_radius = 2,
                                                  std::uint64_t seed = 0) {
  if (count > g.num_nodes())
    throw std::invalid_argument("top_influencers: count exceeds node count");
  auto curve = dismantle(g, Strategy::CI, ci_radius, -1, seed, count);
  std::vector<InfluencerRow> rows;
  rows.reserve(count);
  for (int r = 0; r < count; ++r) {
    InfluencerRow row;
    row.rank = r + 1;
    row.node = curve.removal_order[r];
    row.degree = g.degree(row.node);
    if (!g.meta.empty()) row.meta = g.meta[row.node];
    rows.push_back(row);
  }
  return rows;
}

}  // namespace corrnet
