#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "corrnet/graph.hpp"
#include "corrnet/linfit.hpp"
#include "corrnet/rng.hpp"

namespace corrnet {

struct DegreeDistribution {
  std::vector<int> k;          // observed degrees, ascending
  std::vector<double> p;       // empirical P(k), sums to 1
  bool fitted = false;
  double lambda = 0.0;         // regression exponent on log-log P(k)
  double r_squared = 0.0;
  double lambda_mle = 0.0;     // continuous MLE, diagnostic only
  int fit_k_min = 1;
  int fit_k_max = 0;
};

// Regression exponent for P(k) ~ k^-lambda given (k, P(k)) points.
inline std::pair<double, double> fit_power_law(const std::vector<int>& k,
                                               const std::vector<double>& p) {
  std::vector<double> x, y;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] >= 1 && p[i] > 0.0) {
      x.push_back(static_cast<double>(k[i]));
      y.push_back(p[i]);
    }
  }
  if (x.size() < 3) throw std::invalid_argument("fit_power_law: need >= 3 distinct degrees");
  auto fit = fit_loglog(x, y);
  return {-fit.slope, fit.r_squared};
}

inline DegreeDistribution degree_distribution(const Graph& g, int fit_k_min = 1,
                                              int fit_k_max = 0) {
  const int n = g.num_nodes();
  if (n == 0) throw std::invalid_argument("degree_distribution: empty graph");
  std::map<int, int> hist;
  for (int v = 0; v < n; ++v) ++hist[g.degree(v)];
  DegreeDistribution dd;
  dd.fit_k_min = fit_k_min;
  for (auto [deg, cnt] : hist) {
    dd.k.push_back(deg);
    dd.p.push_back(static_cast<double>(cnt) / n);
  }
  dd.fit_k_max = fit_k_max > 0 ? fit_k_max : (dd.k.empty() ? 0 : dd.k.back());
  std::vector<int> fk;
  std::vector<double> fp;
  for (std::size_t i = 0; i < dd.k.size(); ++i) {
    if (dd.k[i] >= fit_k_min && dd.k[i] <= dd.fit_k_max) {
      fk.push_back(dd.k[i]);
      fp.push_back(dd.p[i]);
    }
  }
  try {
    auto [lambda, r2] = fit_power_law(fk, fp);
    dd.lambda = lambda;
    dd.r_squared = r2;
    dd.fitted = true;
    // Continuous MLE over degrees in the fit range, anchored at the
    // smallest degree actually present there
    int k_min_obs = dd.fit_k_max;
    for (int deg : fk) k_min_obs = std::min(k_min_obs, deg);
    double log_sum = 0.0;
    int count = 0;
    for (int v = 0; v < n; ++v) {
      int deg = g.degree(v);
      if (deg >= k_min_obs && deg <= dd.fit_k_max) {
        log_sum += std::log(static_cast<double>(deg) / k_min_obs);
        ++count;
      }
    }
    if (log_sum > 0.0) dd.lambda_mle = 1.0 + count / log_sum;
  } catch (const std::invalid_argument&) {
    dd.fitted = false;  // distribution still returned, fit omitted
  }
  return dd;
}

// Degree-degree Pearson coefficient over edges; nullopt for degree-regular
// graphs where the denominator vanishes.
inline std::optional<double> assortativity(const Graph& g) {
  const auto& edges = g.edges();
  if (edges.empty()) throw std::runtime_error("assortativity: graph has no edges");
  const double m = static_cast<double>(edges.size());
  double s_prod = 0.0, s_half_sum = 0.0, s_half_sq = 0.0;
  for (auto [a, b] : edges) {
    const double ka = g.degree(a), kb = g.degree(b);
    s_prod += ka * kb;
    s_half_sum += 0.5 * (ka + kb);
    s_half_sq += 0.5 * (ka * ka + kb * kb);
  }
  const double mean_half = s_half_sum / m;
  const double denom = s_half_sq / m - mean_half * mean_half;
  if (std::abs(denom) < 1e-12) return std::nullopt;
  return (s_prod / m - mean_half * mean_half) / denom;
}

struct RandomizeResult {
  Graph graph;
  int swaps_done = 0;
  std::int64_t attempts = 0;
  bool stuck = false;  // attempt budget exhausted before reaching the target
};

// Double-edge-swap Markov chain preserving every degree exactly. Picks two
// random edges (a,b),(c,d) and rewires to (a,d),(c,b) when legal. Runs until
// `swaps` successes or 100*swaps attempts.
inline RandomizeResult randomize_preserving_degrees(const Graph& g, int swaps,
                                                    std::uint64_t seed) {
  if (g.num_edges() < 2)
    throw std::invalid_argument("randomize_preserving_degrees: need >= 2 edges");
  auto rng = make_rng(seed);
  RandomizeResult result{Graph(), 0, 0, false};
  auto edges = g.edges();  // working copy, rewired in place
  auto encode = [](EdgeKey e) {
    return (static_cast<std::uint64_t>(e.first) << 32) | static_cast<std::uint32_t>(e.second);
  };
  std::unordered_set<std::uint64_t> present;
  present.reserve(edges.size() * 2);
  for (auto e : edges) present.insert(encode(e));
  const std::int64_t budget = 100LL * swaps;
  std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
  while (result.swaps_done < swaps && result.attempts < budget) {
    ++result.attempts;
    std::size_t e1 = pick(rng), e2 = pick(rng);
    if (e1 == e2) continue;
    auto [a, b] = edges[e1];
    auto [c, d] = edges[e2];
    if (a == c || a == d || b == c || b == d) continue;
    EdgeKey n1 = edge_key(a, d), n2 = edge_key(c, b);
    if (present.count(encode(n1)) || present.count(encode(n2))) continue;
    present.erase(encode(edges[e1]));
    present.erase(encode(edges[e2]));
    edges[e1] = n1;
    edges[e2] = n2;
    present.insert(encode(n1));
    present.insert(encode(n2));
    ++result.swaps_done;
  }
  result.stuck = result.swaps_done < swaps;
  Graph out(g.num_nodes());
  out.meta = g.meta;
  out.threshold = g.threshold;
  for (auto [x, y] : edges) out.add_edge(x, y);
  result.graph = std::move(out);
  return result;
}

struct CorrelationProfile {
  std::vector<int> bin_edges;                    // degree bins [e_i, e_{i+1})
  std::vector<std::vector<double>> p_observed;   // sums to 1
  std::vector<std::vector<double>> p_null;       // ensemble mean, sums to 1
  std::vector<std::vector<double>> ratio;        // P/P_r where defined
  std::vector<std::vector<char>> defined;        // mask for ratio
  int ensemble_size = 0;
  int swaps_per_sample = 0;
  std::uint64_t seed = 0;
};

// Log-binned (base 2 by default) joint-degree histogram over edges; both
// ordered endpoint pairs contribute, so the matrices are symmetric.
inline std::vector<std::vector<double>> joint_degree_histogram(
    const Graph& g, const std::vector<int>& bin_edges) {
  const int nb = static_cast<int>(bin_edges.size()) - 1;
  auto bin_of = [&](int k) {
    for (int i = nb - 1; i >= 0; --i)
      if (k >= bin_edges[i]) return i;
    return 0;
  };
  std::vector<std::vector<double>> h(nb, std::vector<double>(nb, 0.0));
  const double total = 2.0 * g.num_edges();
  for (auto [a, b] : g.edges()) {
    int ba = bin_of(g.degree(a)), bb = bin_of(g.degree(b));
    h[ba][bb] += 1.0 / total;
    h[bb][ba] += 1.0 / total;
  }
  return h;
}

inline std::vector<int> log2_bin_edges(int k_max) {
  std::vector<int> edges{1};
  while (edges.back() <= k_max) edges.push_back(edges.back() * 2);
  return edges;
}

inline CorrelationProfile correlation_profile(const Graph& g, int ensemble_size = 100,
                                              int swaps_per_sample = 0,
                                              std::uint64_t seed = 0,
                                              std::vector<int> bin_edges = {}) {
  if (g.num_edges() < 2)
    throw std::invalid_argument("correlation_profile: need >= 2 edges");
  if (swaps_per_sample <= 0) swaps_per_sample = 10 * g.num_edges();
  int k_max = 0;
  for (int v = 0; v < g.num_nodes(); ++v) k_max = std::max(k_max, g.degree(v));
  if (bin_edges.empty()) bin_edges = log2_bin_edges(k_max);
  CorrelationProfile prof;
  prof.bin_edges = bin_edges;
  prof.ensemble_size = ensemble_size;
  prof.swaps_per_sample = swaps_per_sample;
  prof.seed = seed;
  prof.p_observed = joint_degree_histogram(g, bin_edges);
  const int nb = static_cast<int>(bin_edges.size()) - 1;
  prof.p_null.assign(nb, std::vector<double>(nb, 0.0));
  for (int s = 0; s < ensemble_size; ++s) {
    auto sample = randomize_preserving_degrees(g, swaps_per_sample,
                                               splitmix64(seed) + s);
    auto h = joint_degree_histogram(sample.graph, bin_edges);
    for (int i = 0; i < nb; ++i)
      for (int j = 0; j < nb; ++j) prof.p_null[i][j] += h[i][j] / ensemble_size;
  }
  prof.ratio.assign(nb, std::vector<double>(nb, 0.0));
  prof.defined.assign(nb, std::vector<char>(nb, 0));
  for (int i = 0; i < nb; ++i) {
    for (int j = 0; j < nb; ++j) {
      if (prof.p_null[i][j] > 0.0) {
        prof.ratio[i][j] = prof.p_observed[i][j] / prof.p_null[i][j];
        prof.defined[i][j] = 1;
      }
    }
  }
  return prof;
}

}  // namespace corrnet
