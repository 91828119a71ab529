#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "corrnet/graph.hpp"
#include "corrnet/graphcore.hpp"
#include "corrnet/linfit.hpp"
#include "corrnet/rng.hpp"

namespace corrnet {

struct BoxCoveringResult {
  std::vector<int> sizes;                     // L_b = 1 .. diameter
  std::vector<int> counts_min;                // min N_b per L_b over repetitions
  std::vector<int> counts_max;                // max, kept for reference
  std::vector<std::vector<int>> counts_all;   // per-L_b repetition samples
  int repetitions = 0;
  double d_b = 0.0;
  double r_squared = 0.0;
  std::uint64_t seed = 0;
};

inline void require_connected(const Graph& g, const char* who) {
  if (g.num_nodes() == 0) throw std::invalid_argument(std::string(who) + ": empty graph");
  if (components(g).giant_size != g.num_nodes())
    throw std::runtime_error(std::string(who) + ": graph is disconnected");
}

// One random-sequential burning pass: repeatedly pick a uniformly random
// uncovered node, cover everything within distance <= radius of it (distances
// in the full graph), count one box. Returns the box count.
inline int box_cover_once(const Graph& g, int radius, std::mt19937_64& rng) {
  if (radius < 1) throw std::invalid_argument("box_cover_once: radius must be >= 1");
  require_connected(g, "box_cover_once");
  const int n = g.num_nodes();
  std::vector<char> covered(n, 0);
  std::vector<int> uncovered(n);
  for (int v = 0; v < n; ++v) uncovered[v] = v;
  std::vector<int> frontier, next;
  std::vector<int> dist(n);
  int boxes = 0;
  int remaining = n;
  while (remaining > 0) {
    // lazy deletion: rejection-sample an uncovered center
    int center;
    do {
      std::uniform_int_distribution<std::size_t> pick(0, uncovered.size() - 1);
      std::size_t idx = pick(rng);
      center = uncovered[idx];
      if (covered[center]) {
        uncovered[idx] = uncovered.back();
        uncovered.pop_back();
      }
    } while (covered[center]);
    ++boxes;
    // truncated BFS from the center
    std::fill(dist.begin(), dist.end(), -1);
    dist[center] = 0;
    frontier.assign(1, center);
    if (!covered[center]) {
      covered[center] = 1;
      --remaining;
    }
    for (int d = 0; d < radius && !frontier.empty(); ++d) {
      next.clear();
      for (int v : frontier) {
        for (int w : g.neighbors(v)) {
          if (dist[w] == -1) {
            dist[w] = d + 1;
            next.push_back(w);
            if (!covered[w]) {
              covered[w] = 1;
              --remaining;
            }
          }
        }
      }
      frontier.swap(next);
    }
  }
  return boxes;
}

// Slope of log N_b vs log L_b; d_b = -slope.
inline std::pair<double, double> fit_dimension(const std::vector<int>& sizes,
                                               const std::vector<int>& counts) {
  if (sizes.size() != counts.size())
    throw std::invalid_argument("fit_dimension: length mismatch");
  if (sizes.size() < 3) throw std::invalid_argument("fit_dimension: need >= 3 points");
  std::vector<double> x(sizes.size()), y(counts.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 1 || counts[i] < 1)
      throw std::invalid_argument("fit_dimension: sizes and counts must be >= 1");
    x[i] = static_cast<double>(sizes[i]);
    y[i] = static_cast<double>(counts[i]);
  }
  auto fit = fit_loglog(x, y);
  return {-fit.slope, fit.r_squared};
}

// Full curve: radii 1..diameter, `repetitions` independent passes each,
// aggregated by minimum. Per-repetition RNG streams are derived from
// (seed, L_b, repetition) so results do not depend on evaluation order.
inline BoxCoveringResult box_cover_curve(const Graph& g, int repetitions,
                                         std::uint64_t seed,
                                         bool trim_diameter_point = false) {
  if (repetitions < 1) throw std::invalid_argument("box_cover_curve: repetitions >= 1");
  require_connected(g, "box_cover_curve");
  const int diameter = graph_diameter(g);
  BoxCoveringResult result;
  result.repetitions = repetitions;
  result.seed = seed;
  for (int radius = 1; radius <= std::max(diameter, 1); ++radius) {
    std::vector<int> samples(repetitions);
    for (int rep = 0; rep < repetitions; ++rep) {
      auto rng = make_rng(seed, static_cast<std::uint64_t>(radius) * 1000003ULL + rep);
      samples[rep] = box_cover_once(g, radius, rng);
    }
    result.sizes.push_back(radius);
    result.counts_min.push_back(*std::min_element(samples.begin(), samples.end()));
    result.counts_max.push_back(*std::max_element(samples.begin(), samples.end()));
    result.counts_all.push_back(std::move(samples));
  }
  auto sizes = result.sizes;
  auto counts = result.counts_min;
  // Once N_b first reaches 1 the remaining radii are redundant and would
  // only flatten the fitted slope; keep the first saturated point, drop the
  // rest of the plateau.
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 1) {
      sizes.resize(i + 1);
      counts.resize(i + 1);
      break;
    }
  }
  if (trim_diameter_point && sizes.size() > 3) {
    sizes.pop_back();
    counts.pop_back();
  }
  if (sizes.size() >= 3) {
    auto [db, r2] = fit_dimension(sizes, counts);
    result.d_b = db;
    result.r_squared = r2;
  }
  return result;
}

}  // namespace corrnet
