#include <doctest.h>

#include <random>

#include "corrnet/graphcore.hpp"
#include "corrnet/netstats.hpp"
#include "corrnet/synthgen.hpp"

using namespace corrnet;

TEST_CASE("fit_power_law recovers a planted exponent exactly") {
  std::vector<int> k;
  std::vector<double> p;
  double norm = 0.0;
  for (int i = 1; i <= 100; ++i) norm += std::pow(i, -2.0);
  for (int i = 1; i <= 100; ++i) {
    k.push_back(i);
    p.push_back(std::pow(i, -2.0) / norm);
  }
  auto [lambda, r2] = fit_power_law(k, p);
  CHECK(lambda == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(r2 == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("degree_distribution") {
  auto tri = gen_cycle(3);
  auto dd = degree_distribution(tri);
  CHECK(dd.k == std::vector<int>{2});
  CHECK(dd.p == std::vector<double>{1.0});
  CHECK(!dd.fitted);  // single degree value, fit omitted

  auto ba = gen_barabasi_albert(1000, 3, 3);
  dd = degree_distribution(ba);
  CHECK(dd.fitted);
  double sum = 0.0;
  for (double v : dd.p) sum += v;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(dd.lambda > 0.0);
  CHECK(dd.lambda_mle > 1.0);
}

TEST_CASE("assortativity analytic cases") {
  for (int leaves : {3, 6, 11}) {
    auto star = gen_star(leaves);
    auto r = assortativity(star);
    REQUIRE(r.has_value());
    CHECK(*r == doctest::Approx(-1.0).epsilon(1e-9));
  }

  auto p4 = gen_path(4);
  CHECK(*assortativity(p4) == doctest::Approx(-0.5).epsilon(1e-9));

  CHECK(!assortativity(gen_cycle(6)).has_value());
  CHECK(!assortativity(gen_complete(5)).has_value());

  Graph empty(3);
  CHECK_THROWS(assortativity(empty));
}

TEST_CASE("assortativity equals Pearson over the doubled edge list") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = gen_erdos_renyi(150, 0.04, rng());
    if (g.num_edges() < 2) continue;
    auto r = assortativity(g);
    if (!r) continue;
    // oracle: plain correlation of endpoint degrees over ordered edge pairs
    std::vector<double> xs, ys;
    for (auto [a, b] : g.edges()) {
      xs.push_back(g.degree(a));
      ys.push_back(g.degree(b));
      xs.push_back(g.degree(b));
      ys.push_back(g.degree(a));
    }
    double n = static_cast<double>(xs.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      mx += xs[i];
      my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxy += (xs[i] - mx) * (ys[i] - my);
      sxx += (xs[i] - mx) * (xs[i] - mx);
      syy += (ys[i] - my) * (ys[i] - my);
    }
    CHECK(*r == doctest::Approx(sxy / std::sqrt(sxx * syy)).epsilon(1e-9));
  }
}

TEST_CASE("randomize_preserving_degrees") {
  SUBCASE("star has no legal swap") {
    auto star = gen_star(6);
    auto result = randomize_preserving_degrees(star, 10, 1);
    CHECK(result.swaps_done == 0);
    CHECK(result.stuck);
    CHECK(result.graph.edges() == star.edges());
  }
  SUBCASE("degree sequence preserved exactly") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 20; ++trial) {
      auto g = gen_erdos_renyi(60, 0.1, rng());
      if (g.num_edges() < 2) continue;
      auto result = randomize_preserving_degrees(g, 5 * g.num_edges(), rng());
      REQUIRE(result.graph.num_nodes() == g.num_nodes());
      for (int v = 0; v < g.num_nodes(); ++v)
        CHECK(result.graph.degree(v) == g.degree(v));
    }
  }
  SUBCASE("edge set actually changes on a dense ER graph") {
    auto g = gen_erdos_renyi(100, 0.1, 5);
    int changed = 0;
    for (std::uint64_t s = 0; s < 20; ++s) {
      auto result = randomize_preserving_degrees(g, 10 * g.num_edges(), s);
      if (result.graph.edges() != g.edges()) ++changed;
    }
    CHECK(changed == 20);
  }
}

TEST_CASE("correlation_profile") {
  SUBCASE("star mass sits in the (1, n-1) cells") {
    auto star = gen_star(8);
    auto prof = correlation_profile(star, 10, 20, 3);
    int defined_cells = 0;
    double mass = 0.0;
    for (std::size_t i = 0; i < prof.ratio.size(); ++i) {
      for (std::size_t j = 0; j < prof.ratio.size(); ++j) {
        if (prof.defined[i][j]) {
          ++defined_cells;
          CHECK(prof.ratio[i][j] == doctest::Approx(1.0));
        }
        mass += prof.p_observed[i][j];
      }
    }
    CHECK(defined_cells == 2);  // (bin(1), bin(8)) and its mirror
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("symmetry and normalization on a random graph") {
    auto g = gen_erdos_renyi(200, 0.04, 11);
    auto prof = correlation_profile(g, 20, 0, 17);
    double po = 0.0, pn = 0.0;
    for (std::size_t i = 0; i < prof.p_observed.size(); ++i) {
      for (std::size_t j = 0; j < prof.p_observed.size(); ++j) {
        po += prof.p_observed[i][j];
        pn += prof.p_null[i][j];
        CHECK(prof.p_observed[i][j] == doctest::Approx(prof.p_observed[j][i]).epsilon(1e-12));
        if (prof.defined[i][j]) {
          CHECK(prof.defined[j][i]);
        }
      }
    }
    CHECK(po == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(pn == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("ER graph profile is close to its null") {
    auto g = gen_erdos_renyi(1000, 0.01, 29);
    auto prof = correlation_profile(g, 30, 0, 31);
    double dev = 0.0;
    int cells = 0;
    for (std::size_t i = 0; i < prof.ratio.size(); ++i) {
      for (std::size_t j = 0; j < prof.ratio.size(); ++j) {
        if (prof.defined[i][j] && prof.p_observed[i][j] > 0.0) {
          dev += std::abs(prof.ratio[i][j] - 1.0);
          ++cells;
        }
      }
    }
    REQUIRE(cells > 0);
    CHECK(dev / cells <= 0.3);  // the ensemble-100 version runs in acceptance
  }
}

TEST_CASE("small-world metrics on a WS graph at reduced scale") {
  auto ws = gen_watts_strogatz(400, 10, 0.1, 7);
  auto g = giant_component(ws);
  CHECK(distance_stats(g).average_distance <= 8.0);
  CHECK(clustering_coefficient(g) >= 0.3);
}
