// corrnet command line: build correlation graphs from traffic CSVs and run
// the analysis pipeline (degree stats, box covering, skeleton, dismantling,
// correlation profile). All outputs are plain text / CSV / JSON.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "corrnet/fractal.hpp"
#include "corrnet/graph_io.hpp"
#include "corrnet/graphcore.hpp"
#include "corrnet/influence.hpp"
#include "corrnet/netstats.hpp"
#include "corrnet/skeleton.hpp"
#include "corrnet/synthgen.hpp"
#include "corrnet/traffic.hpp"

using nlohmann::json;
using namespace corrnet;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInternal = 3;
constexpr const char* kFormatVersion = "1";

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

void write_json_file(const std::string& path, json j) {
  j["format_version"] = kFormatVersion;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

std::string fmt(double v) {
  std::ostringstream ss;
  ss.precision(10);
  ss << v;
  return ss.str();
}

Graph load_graph(const std::string& edges, const std::string& nodes) {
  return read_graph_files(edges, nodes);
}

std::string boxcover_plot(const BoxCoveringResult& r) {
  std::ostringstream ss;
  ss << "# log_Lb log_Nb\n";
  for (std::size_t i = 0; i < r.sizes.size(); ++i)
    ss << fmt(std::log(static_cast<double>(r.sizes[i]))) << ' '
       << fmt(std::log(static_cast<double>(r.counts_min[i]))) << '\n';
  return ss.str();
}

json boxcover_json(const BoxCoveringResult& r) {
  return json{{"d_b", r.d_b},        {"r_squared", r.r_squared},
              {"sizes", r.sizes},    {"counts_min", r.counts_min},
              {"counts_max", r.counts_max},
              {"repetitions", r.repetitions}, {"seed", r.seed}};
}

std::string gq_plot(const DismantlingCurve& c) {
  std::ostringstream ss;
  ss << "# q G(q)\n";
  for (std::size_t i = 0; i < c.q_values.size(); ++i)
    ss << fmt(c.q_values[i]) << ' ' << fmt(c.g_values[i]) << '\n';
  return ss.str();
}

std::string profile_csv(const CorrelationProfile& p) {
  std::ostringstream ss;
  ss << "bin_edges";
  for (int e : p.bin_edges) ss << ',' << e;
  ss << "\n";
  const std::size_t nb = p.ratio.size();
  for (std::size_t i = 0; i < nb; ++i) {
    ss << "R_row" << i;
    for (std::size_t j = 0; j < nb; ++j)
      ss << ',' << (p.defined[i][j] ? fmt(p.ratio[i][j]) : std::string("nan"));
    ss << "\n";
  }
  return ss.str();
}

std::string influencers_csv(const std::vector<InfluencerRow>& rows) {
  std::ostringstream ss;
  ss << "rank,station_id,degree,lon,lat\n";
  for (const auto& r : rows) {
    std::string id = r.meta.station_id.empty() ? ("node_" + std::to_string(r.node))
                                               : r.meta.station_id;
    ss << r.rank << ',' << id << ',' << r.degree << ',' << fmt(r.meta.lon) << ','
       << fmt(r.meta.lat) << "\n";
  }
  return ss.str();
}

struct SweepRange {
  double lo = 0.0, hi = 0.0, step = 0.0;
  bool is_sweep = false;
};

// "--threshold 0.54" or "--threshold 0.50:0.70:0.02"
SweepRange parse_threshold(const std::string& s) {
  SweepRange r;
  auto c1 = s.find(':');
  if (c1 == std::string::npos) {
    r.lo = r.hi = std::stod(s);
    r.step = 1.0;
    return r;
  }
  auto c2 = s.find(':', c1 + 1);
  if (c2 == std::string::npos) throw CLI::ValidationError("threshold", "expected lo:hi:step");
  r.lo = std::stod(s.substr(0, c1));
  r.hi = std::stod(s.substr(c1 + 1, c2 - c1 - 1));
  r.step = std::stod(s.substr(c2 + 1));
  r.is_sweep = true;
  if (r.step <= 0.0) throw CLI::ValidationError("threshold", "step must be positive");
  return r;
}

int cmd_build(const std::string& input, const std::string& threshold_spec,
              const std::string& out_prefix) {
  auto range = parse_threshold(threshold_spec);
  for (double z : {range.lo, range.hi})
    if (z <= 0.0 || z >= 1.0)
      throw CLI::ValidationError("threshold", "must lie in (0,1)");

  std::ifstream in(input);
  if (!in) throw std::runtime_error("cannot open " + input);
  auto csv = read_traffic_csv(in);
  for (const auto& w : csv.warnings) std::cerr << "warning: " << w << '\n';

  if (!range.is_sweep) {
    auto full = build_graph(csv.matrix, range.lo);
    auto [g, rep] = remove_isolated(full);
    write_graph_files(g, out_prefix + ".edges", out_prefix + ".nodes.json");
    json j{{"threshold", range.lo},
           {"network_size", g.num_nodes()},
           {"isolated_count", rep.isolated_count},
           {"isolated_rate", rep.isolated_rate},
           {"config", {{"input", input}, {"threshold", threshold_spec}}}};
    write_json_file(out_prefix + ".report.json", j);
    std::cout << "built " << out_prefix << ".edges: n=" << g.num_nodes()
              << " m=" << g.num_edges() << " isolated=" << rep.isolated_count << '\n';
    return 0;
  }

  std::ostringstream table;
  table << "threshold,network_size,isolated_count,isolated_rate,degree_exponent_lambda\n";
  for (double z = range.lo; z <= range.hi + 1e-12; z += range.step) {
    auto full = build_graph(csv.matrix, z);
    auto [g, rep] = remove_isolated(full);
    std::string lambda = "nan";
    auto dd = degree_distribution(g);
    if (dd.fitted) lambda = fmt(dd.lambda);
    table << fmt(z) << ',' << g.num_nodes() << ',' << rep.isolated_count << ','
          << fmt(rep.isolated_rate) << ',' << lambda << "\n";
  }
  write_text_file(out_prefix + ".sweep.csv", table.str());
  std::cout << "wrote " << out_prefix << ".sweep.csv\n";
  return 0;
}

int cmd_analyze(const std::string& edges, const std::string& nodes, int reps,
                int ci_radius, int cutoff, std::uint64_t seed, int ensemble,
                const std::string& out_prefix) {
  auto g = load_graph(edges, nodes);
  auto giant = giant_component(g);

  json summary;
  summary["threshold"] = g.threshold;
  summary["network_size"] = g.num_nodes();
  summary["giant_component_size"] = giant.num_nodes();

  auto dd = degree_distribution(g);
  {
    std::ostringstream plot;
    plot << "# k P(k)\n";
    for (std::size_t i = 0; i < dd.k.size(); ++i)
      plot << dd.k[i] << ' ' << fmt(dd.p[i]) << '\n';
    write_text_file(out_prefix + ".degree_dist.txt", plot.str());
  }
  summary["degree_exponent_lambda"] = dd.fitted ? json(dd.lambda) : json();
  summary["degree_exponent_lambda_mle"] = dd.fitted ? json(dd.lambda_mle) : json();
  summary["degree_fit_r_squared"] = dd.fitted ? json(dd.r_squared) : json();

  auto ds = distance_stats(g);
  summary["average_distance"] = ds.average_distance;
  summary["diameter"] = ds.diameter;
  summary["sampled_sources"] = ds.sampled_sources;
  summary["clustering_coefficient"] = clustering_coefficient(g);
  auto r = assortativity(g);
  summary["assortativity"] = r ? json(*r) : json();

  auto skel = extract_skeleton(giant, 0);
  auto rand_tree = random_spanning_tree(giant, splitmix64(seed) + 11);
  auto cmp = compare_fractality(giant, skel, rand_tree, reps, seed);
  write_text_file(out_prefix + ".boxcover_original.txt", boxcover_plot(cmp.original));
  write_text_file(out_prefix + ".boxcover_skeleton.txt", boxcover_plot(cmp.skeleton));
  write_text_file(out_prefix + ".boxcover_random_tree.txt", boxcover_plot(cmp.random_tree));
  summary["fractal_dimension_d_b"] = cmp.original.d_b;
  summary["fractal_fit_r_squared"] = cmp.original.r_squared;
  summary["d_b_skeleton"] = cmp.skeleton.d_b;
  summary["d_b_random_tree"] = cmp.random_tree.d_b;
  auto skel_dd = degree_distribution(skel.as_graph());
  summary["lambda_skeleton"] = skel_dd.fitted ? json(skel_dd.lambda) : json();

  json qc;
  for (Strategy strategy : {Strategy::CI, Strategy::HD, Strategy::HDA}) {
    auto curve = dismantle(g, strategy, ci_radius, cutoff, seed);
    write_text_file(out_prefix + ".gq_" + strategy_name(strategy) + ".txt", gq_plot(curve));
    qc[strategy_name(strategy)] = curve.q_c;
    if (strategy == Strategy::CI) summary["dismantle_cutoff"] = curve.cutoff;
  }
  summary["q_c"] = qc;

  auto prof = correlation_profile(g, ensemble, 0, splitmix64(seed) + 23);
  write_text_file(out_prefix + ".profile.csv", profile_csv(prof));

  summary["config"] = {{"edges", edges},       {"nodes", nodes},     {"repetitions", reps},
                       {"ci_radius", ci_radius}, {"cutoff", cutoff}, {"seed", seed},
                       {"ensemble", ensemble},
                       {"clustering_convention", "k<2 counts as 0"},
                       {"distance_scope", "largest component"}};
  write_json_file(out_prefix + ".summary.json", summary);
  std::cout << "wrote " << out_prefix << ".summary.json\n";
  return 0;
}

int cmd_influence(const std::string& edges, const std::string& nodes, int count,
                  int ci_radius, std::uint64_t seed, const std::string& out) {
  auto g = load_graph(edges, nodes);
  if (count > g.num_nodes()) throw std::runtime_error("count exceeds node count");
  auto rows = top_influencers(g, count, ci_radius, seed);
  write_text_file(out, influencers_csv(rows));
  std::cout << "wrote " << out << '\n';
  return 0;
}

int cmd_skeleton(const std::string& edges, const std::string& nodes, int start, int reps,
                 std::uint64_t seed, const std::string& out_prefix) {
  auto giant = giant_component(load_graph(edges, nodes));
  auto skel = extract_skeleton(giant, start);
  std::ostringstream tree_out;
  for (auto [a, b, w] : skel.tree_edges) tree_out << a << ' ' << b << ' ' << fmt(w) << '\n';
  write_text_file(out_prefix + ".skeleton.edges", tree_out.str());
  auto tree_graph = skel.as_graph();
  auto dd = degree_distribution(tree_graph);
  auto box = box_cover_curve(tree_graph, reps, seed);
  json j{{"n", skel.n},
         {"start", skel.root},
         {"lambda_skeleton", dd.fitted ? json(dd.lambda) : json()},
         {"d_b_skeleton", box.d_b},
         {"config", {{"repetitions", reps}, {"seed", seed}}}};
  write_json_file(out_prefix + ".skeleton.json", j);
  std::cout << "wrote " << out_prefix << ".skeleton.json\n";
  return 0;
}

int cmd_fractal(const std::string& edges, const std::string& nodes, int reps,
                std::uint64_t seed, bool trim, const std::string& out_prefix) {
  auto giant = giant_component(load_graph(edges, nodes));
  auto box = box_cover_curve(giant, reps, seed, trim);
  write_text_file(out_prefix + ".boxcover.txt", boxcover_plot(box));
  json j = boxcover_json(box);
  j["config"] = {{"repetitions", reps}, {"seed", seed}, {"trim_diameter_point", trim}};
  write_json_file(out_prefix + ".boxcover.json", j);
  std::cout << "wrote " << out_prefix << ".boxcover.json\n";
  return 0;
}

int cmd_profile(const std::string& edges, const std::string& nodes, int ensemble, int swaps,
                std::uint64_t seed, const std::string& out_prefix) {
  auto g = load_graph(edges, nodes);
  auto prof = correlation_profile(g, ensemble, swaps, seed);
  write_text_file(out_prefix + ".profile.csv", profile_csv(prof));
  json j{{"bin_edges", prof.bin_edges},
         {"ensemble_size", prof.ensemble_size},
         {"swaps_per_sample", prof.swaps_per_sample},
         {"seed", prof.seed},
         {"config", {{"ensemble", ensemble}, {"swaps", swaps}, {"seed", seed}}}};
  write_json_file(out_prefix + ".profile.json", j);
  std::cout << "wrote " << out_prefix << ".profile.json\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spatial traffic correlation network toolkit"};
  app.require_subcommand(1);
  app.set_config("--config", "", "config file with key=value lines");
  app.allow_config_extras(false);

  // synth
  auto* synth = app.add_subcommand("synth", "generate synthetic traffic or benchmark graphs");
  std::string kind = "traffic";
  int blocks = 3, per_block = 50, T = 48;
  double noise = 0.2;
  int rows = 8, cols = 8, n = 100, m = 3, k = 10, u = 2, v = 2, generations = 3;
  double p = 0.1;
  std::uint64_t synth_seed = 0;
  std::string synth_out = "synth";
  synth->add_option("--kind", kind)
      ->check(CLI::IsMember({"traffic", "grid", "path", "flower", "ba", "er", "ws"}));
  synth->add_option("--blocks", blocks);
  synth->add_option("--per-block", per_block);
  synth->add_option("--T", T);
  synth->add_option("--noise", noise);
  synth->add_option("--rows", rows);
  synth->add_option("--cols", cols);
  synth->add_option("--n", n);
  synth->add_option("--m", m);
  synth->add_option("--k", k);
  synth->add_option("--p", p);
  synth->add_option("--u", u);
  synth->add_option("--v", v);
  synth->add_option("--generations", generations);
  synth->add_option("--seed", synth_seed);
  synth->add_option("--out", synth_out);

  // build
  auto* build = app.add_subcommand("build", "build a correlation graph from a traffic CSV");
  std::string build_input, build_threshold = "0.54", build_out = "graph";
  build->add_option("--input", build_input)->required();
  build->add_option("--threshold", build_threshold,
                    "Z in (0,1), or lo:hi:step for a sweep");
  build->add_option("--out", build_out);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "run the full analysis pipeline");
  std::string an_edges, an_nodes, an_out = "analysis";
  int an_reps = 100, an_ci_radius = 2, an_cutoff = -1, an_ensemble = 100;
  std::uint64_t an_seed = 0;
  analyze->add_option("--edges", an_edges)->required();
  analyze->add_option("--nodes", an_nodes)->required();
  analyze->add_option("--reps", an_reps)->check(CLI::PositiveNumber);
  analyze->add_option("--ci-radius", an_ci_radius)->check(CLI::PositiveNumber);
  analyze->add_option("--cutoff", an_cutoff);
  analyze->add_option("--seed", an_seed);
  analyze->add_option("--ensemble", an_ensemble)->check(CLI::PositiveNumber);
  analyze->add_option("--out", an_out);

  // influence
  auto* influence = app.add_subcommand("influence", "export the top influencers CSV");
  std::string in_edges, in_nodes, in_out = "influencers.csv";
  int in_count = 500, in_ci_radius = 2;
  std::uint64_t in_seed = 0;
  influence->add_option("--edges", in_edges)->required();
  influence->add_option("--nodes", in_nodes)->required();
  influence->add_option("--count", in_count)->check(CLI::PositiveNumber);
  influence->add_option("--ci-radius", in_ci_radius)->check(CLI::PositiveNumber);
  influence->add_option("--seed", in_seed);
  influence->add_option("--out", in_out);

  // skeleton
  auto* skeleton = app.add_subcommand("skeleton", "extract the max-betweenness spanning tree");
  std::string sk_edges, sk_nodes, sk_out = "skeleton";
  int sk_start = 0, sk_reps = 100;
  std::uint64_t sk_seed = 0;
  skeleton->add_option("--edges", sk_edges)->required();
  skeleton->add_option("--nodes", sk_nodes)->required();
  skeleton->add_option("--start", sk_start);
  skeleton->add_option("--reps", sk_reps)->check(CLI::PositiveNumber);
  skeleton->add_option("--seed", sk_seed);
  skeleton->add_option("--out", sk_out);

  // fractal
  auto* fractal = app.add_subcommand("fractal", "box-covering curve and dimension fit");
  std::string fr_edges, fr_nodes, fr_out = "fractal";
  int fr_reps = 1000;
  std::uint64_t fr_seed = 0;
  bool fr_trim = false;
  fractal->add_option("--edges", fr_edges)->required();
  fractal->add_option("--nodes", fr_nodes)->required();
  fractal->add_option("--reps", fr_reps)->check(CLI::PositiveNumber);
  fractal->add_option("--seed", fr_seed);
  fractal->add_flag("--trim-diameter", fr_trim, "drop the L_b = diameter point from the fit");
  fractal->add_option("--out", fr_out);

  // profile
  auto* profile = app.add_subcommand("profile", "correlation profile vs degree-preserving null");
  std::string pr_edges, pr_nodes, pr_out = "profile";
  int pr_ensemble = 100, pr_swaps = 0;
  std::uint64_t pr_seed = 0;
  profile->add_option("--edges", pr_edges)->required();
  profile->add_option("--nodes", pr_nodes)->required();
  profile->add_option("--ensemble", pr_ensemble)->check(CLI::PositiveNumber);
  profile->add_option("--swaps", pr_swaps);
  profile->add_option("--seed", pr_seed);
  profile->add_option("--out", pr_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (synth->parsed()) {
      if (kind == "traffic") {
        auto matrix = gen_traffic_blocks(blocks, per_block, T, noise, synth_seed);
        std::ofstream out(synth_out + ".csv");
        if (!out) throw std::runtime_error("cannot write " + synth_out + ".csv");
        write_traffic_csv(out, matrix);
        std::cout << "wrote " << synth_out << ".csv\n";
      } else {
        Graph g;
        if (kind == "grid") g = gen_grid(rows, cols);
        else if (kind == "path") g = gen_path(n);
        else if (kind == "flower") g = gen_flower(u, v, generations);
        else if (kind == "ba") g = gen_barabasi_albert(n, m, synth_seed);
        else if (kind == "er") g = gen_erdos_renyi(n, p, synth_seed);
        else g = gen_watts_strogatz(n, k, p, synth_seed);
        write_graph_files(g, synth_out + ".edges", synth_out + ".nodes.json");
        std::cout << "wrote " << synth_out << ".edges (n=" << g.num_nodes()
                  << " m=" << g.num_edges() << ")\n";
      }
      return 0;
    }
    if (build->parsed()) return cmd_build(build_input, build_threshold, build_out);
    if (analyze->parsed())
      return cmd_analyze(an_edges, an_nodes, an_reps, an_ci_radius, an_cutoff, an_seed,
                         an_ensemble, an_out);
    if (influence->parsed())
      return cmd_influence(in_edges, in_nodes, in_count, in_ci_radius, in_seed, in_out);
    if (skeleton->parsed())
      return cmd_skeleton(sk_edges, sk_nodes, sk_start, sk_reps, sk_seed, sk_out);
    if (fractal->parsed())
      return cmd_fractal(fr_edges, fr_nodes, fr_reps, fr_seed, fr_trim, fr_out);
    if (profile->parsed())
      return cmd_profile(pr_edges, pr_nodes, pr_ensemble, pr_swaps, pr_seed, pr_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}
