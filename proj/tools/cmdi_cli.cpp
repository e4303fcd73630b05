// Command-line front end: synth, simulate, extract, partition, cluster,
// distance, evaluate, experiment.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cmdi/cmdi.hpp"

namespace fs = std::filesystem;
using namespace cmdi;

namespace {

ordered_json g_manifest;

void record_manifest(int argc, char** argv) {
  std::string cmdline;
  for (int i = 0; i < argc; ++i) {
    if (i) cmdline += ' ';
    cmdline += argv[i];
  }
  g_manifest["command"] = cmdline;
}

void write_json(const ordered_json& payload, const std::string& path) {
  ordered_json j = payload;
  j["manifest"] = g_manifest;
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
  } else {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
  }
}

ordered_json extraction_json(const ResolvedExtraction& ext) {
  ordered_json j;
  j["method"] = ext.method;
  j["edge_rule"] = ext.edge_rule;
  if (ext.sigma > 0.0) j["sigma"] = ext.sigma;
  j["tau"] = ext.tau;
  j["n"] = ext.graph.num_vertices();
  j["m"] = ext.graph.num_edges();
  return j;
}

struct SynthOpts {
  std::string kind = "ring-of-cliques";
  int cliques = 6, size = 5;
  int rows = 5, cols = 6;
  int n = 30, m = 1;
  std::uint64_t seed = 0;
  std::string out;
};

Graph make_synth(const SynthOpts& o) {
  if (o.kind == "ring-of-cliques") return gen_ring_of_cliques(o.cliques, o.size);
  if (o.kind == "grid") return gen_grid(o.rows, o.cols);
  if (o.kind == "ba") return gen_barabasi_albert(o.n, o.m, o.seed);
  throw CLI::ValidationError("--kind must be ring-of-cliques, grid, or ba");
}

// 11-way proximity pipeline over per-node series rows (each row a feature
// vector): named metrics use the 1/(1+d) threshold rule; GAUS, e-NE and k-NN
// use their own edge rules on Euclidean distance.
Graph metric_pipeline(const std::string& name, const std::vector<std::vector<double>>& rows,
                      ExtractionConfig cfg, ResolvedExtraction* resolved = nullptr) {
  ResolvedExtraction ext;
  if (name == "GAUS") {
    cfg.metric = ProximityMetric::euc;
    ext = extract_from_points(rows, cfg, EdgeRule::gaussian_threshold);
  } else if (name == "e-NE" || name == "eps") {
    AffinityMatrix d = proximity_matrix(rows, ProximityMetric::euc);
    double eps = cfg.epsilon;
    if (!(eps > 0.0)) {
      // auto epsilon: distance quantile matching the target mean degree
      std::vector<double> v;
      for (int i = 0; i < d.size(); ++i)
        for (int j = i + 1; j < d.size(); ++j) v.push_back(d(i, j));
      std::sort(v.begin(), v.end());
      double target = cfg.target_mean_degree > 0.0
                          ? cfg.target_mean_degree
                          : 2.0 * std::log(static_cast<double>(d.size()));
      std::size_t keep = std::min(v.size() - 1,
                                  static_cast<std::size_t>(target * d.size() / 2.0));
      eps = v[keep];
    }
    ext.graph = eps_graph(d, eps);
    ext.method = "proximity";
    ext.edge_rule = "eps";
  } else if (name == "k-NN" || name == "knn") {
    ext.graph = knn_graph(proximity_matrix(rows, ProximityMetric::euc), cfg.k_neighbors);
    ext.method = "proximity";
    ext.edge_rule = "knn";
  } else {
    cfg.metric = parse_metric(name);
    ext = extract_from_points(rows, cfg, EdgeRule::raw_threshold);
  }
  if (resolved) *resolved = ext;
  return ext.graph;
}

std::vector<std::vector<double>> series_rows(const TimeSeriesMatrix& ts) {
  std::vector<std::vector<double>> rows(ts.n, std::vector<double>(ts.steps));
  for (int v = 0; v < ts.n; ++v)
    for (int t = 0; t < ts.steps; ++t) rows[v][t] = ts.at(v, t);
  return rows;
}

int run_experiment(const std::string& config_path, const std::string& out_dir) {
  std::ifstream in(config_path);
  if (!in) throw std::runtime_error("cannot open config: " + config_path);
  ordered_json cfg;
  in >> cfg;

  std::vector<std::uint64_t> seeds;
  for (const auto& s : cfg.value("seeds", ordered_json::array({0})))
    seeds.push_back(s.get<std::uint64_t>());
  int steps = cfg.value("steps", 2001);
  double coupling = cfg.value("coupling", 0.5);
  double target_degree = cfg.value("target_mean_degree", 0.0);
  double xi = cfg.value("xi", 1.0);

  fs::create_directories(out_dir);
  std::ofstream csv(fs::path(out_dir) / "results.csv");
  csv << "graph,model,metric,seeds,him_mean,di_mean,error\n";
  ordered_json rows = ordered_json::array();

  for (const auto& gspec : cfg.at("graphs")) {
    SynthOpts so;
    so.kind = gspec.value("kind", "ring-of-cliques");
    so.cliques = gspec.value("cliques", 6);
    so.size = gspec.value("size", 5);
    so.rows = gspec.value("rows", 5);
    so.cols = gspec.value("cols", 6);
    so.n = gspec.value("n", 30);
    so.m = gspec.value("m", 1);
    so.seed = gspec.value("seed", 0);
    Graph gt = make_synth(so);
    HimConfig him_cfg;
    him_cfg.xi = xi;
    him_cfg.gamma = resolve_gamma(him_cfg, gt.num_vertices());

    for (const auto& model : cfg.at("models")) {
      for (const auto& metric : cfg.at("metrics")) {
        std::string mname = metric.get<std::string>();
        double him_sum = 0.0, di_sum = 0.0;
        int ok_seeds = 0;
        std::string error;
        for (std::uint64_t seed : seeds) {
          try {
            DynamicsConfig dyn;
            dyn.model = model.get<std::string>();
            dyn.steps = steps;
            dyn.seed = seed;
            dyn.coupling = coupling;
            TimeSeriesMatrix ts = simulate(gt, dyn);
            ExtractionConfig ecfg;
            ecfg.seed = seed;
            ecfg.target_mean_degree =
                target_degree > 0.0 ? target_degree : gt.volume() / gt.num_vertices();
            Graph extracted;
            if (mname == "MLE" || mname == "mle" || mname == "MI" || mname == "mi") {
              ecfg.method = (mname == "MLE" || mname == "mle") ? "mle" : "mi";
              extracted = extract_from_series(ts, ecfg).graph;
            } else {
              extracted = metric_pipeline(mname, series_rows(ts), ecfg);
            }
            him_sum += him_distance(extracted, gt, him_cfg);
            di_sum += decoding_info(extracted, gdimaop(extracted).partition);
            ++ok_seeds;
          } catch (const std::exception& e) {
            error = e.what();
          }
        }
        ordered_json row;
        row["graph"] = so.kind;
        row["model"] = model;
        row["metric"] = mname;
        row["seeds"] = ok_seeds;
        if (ok_seeds > 0) {
          row["him_mean"] = him_sum / ok_seeds;
          row["di_mean"] = di_sum / ok_seeds;
        }
        if (!error.empty()) row["error"] = error;
        rows.push_back(row);
        csv << so.kind << ',' << model.get<std::string>() << ',' << mname << ',' << ok_seeds
            << ',';
        if (ok_seeds > 0)
          csv << him_sum / ok_seeds << ',' << di_sum / ok_seeds;
        else
          csv << ',';
        csv << ',' << error << '\n';
      }
    }
  }
  ordered_json summary;
  summary["rows"] = rows;
  write_json(summary, (fs::path(out_dir) / "results.json").string());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decoding-information graph clustering toolkit"};
  app.require_subcommand(1);
  record_manifest(argc, argv);

  // ---- synth ----
  SynthOpts synth;
  auto* cmd_synth = app.add_subcommand("synth", "generate a synthetic ground-truth graph");
  cmd_synth->add_option("--kind", synth.kind, "ring-of-cliques | grid | ba");
  cmd_synth->add_option("--cliques", synth.cliques);
  cmd_synth->add_option("--size", synth.size);
  cmd_synth->add_option("--rows", synth.rows);
  cmd_synth->add_option("--cols", synth.cols);
  cmd_synth->add_option("--n", synth.n);
  cmd_synth->add_option("--m", synth.m);
  cmd_synth->add_option("--seed", synth.seed);
  cmd_synth->add_option("--out", synth.out, "edge-list CSV path")->required();

  // ---- simulate ----
  std::string sim_graph, sim_out, sim_manifest;
  DynamicsConfig dyn;
  auto* cmd_sim = app.add_subcommand("simulate", "run spin dynamics on a graph");
  cmd_sim->add_option("--graph", sim_graph)->required();
  cmd_sim->add_option("--model", dyn.model, "kim | bm | igm");
  cmd_sim->add_option("--steps", dyn.steps);
  cmd_sim->add_option("--seed", dyn.seed);
  cmd_sim->add_option("--coupling", dyn.coupling);
  cmd_sim->add_option("--beta", dyn.beta);
  cmd_sim->add_option("--p-spread", dyn.p_spread);
  cmd_sim->add_option("--out", sim_out, "time-series CSV path")->required();
  cmd_sim->add_option("--manifest", sim_manifest, "run manifest JSON path");

  // ---- extract ----
  std::string ext_series, ext_points, ext_metric = "EUC", ext_out, ext_report;
  ExtractionConfig ecfg;
  auto* cmd_ext = app.add_subcommand("extract", "extract a graph from series or points");
  cmd_ext->add_option("--series", ext_series, "time-series CSV (rows = steps)");
  cmd_ext->add_option("--points", ext_points, "points CSV (rows = samples)");
  cmd_ext->add_option("--method", ecfg.method, "mi | mle (series) or proximity rule name");
  cmd_ext->add_option("--metric", ext_metric,
                      "EUC|MANH|MINK|CHEB|CANB|MAHA|ANGU|P-COR|GAUS|e-NE|k-NN");
  cmd_ext->add_option("--lambda", ecfg.minkowski_lambda, "Minkowski exponent");
  cmd_ext->add_option("--sigma", ecfg.sigma, "Gaussian width (0 = median heuristic)");
  cmd_ext->add_option("--tau", ecfg.threshold, "threshold (-1 = auto mean-degree rule)");
  cmd_ext->add_option("--target-degree", ecfg.target_mean_degree, "auto-tau mean degree");
  cmd_ext->add_option("--epsilon", ecfg.epsilon, "e-NE radius (0 = auto)");
  cmd_ext->add_option("--k", ecfg.k_neighbors, "k-NN neighbor count");
  cmd_ext->add_option("--alpha", ecfg.alpha, "MLE learning rate");
  cmd_ext->add_option("--epochs", ecfg.epochs, "MLE epochs");
  cmd_ext->add_option("--seed", ecfg.seed);
  cmd_ext->add_option("--out", ext_out, "extracted graph CSV")->required();
  cmd_ext->add_option("--report", ext_report, "extraction report JSON");

  // ---- partition ----
  std::string part_graph, part_algo = "gdimaop", part_pk, part_labels, part_report;
  auto* cmd_part = app.add_subcommand("partition", "partition a graph by (PK-)GDIMAOP");
  cmd_part->add_option("--graph", part_graph)->required();
  cmd_part->add_option("--algo", part_algo, "gdimaop | pk-gdimaop");
  cmd_part->add_option("--pk", part_pk, "prior-knowledge JSON");
  cmd_part->add_option("--labels", part_labels, "output labels JSON")->required();
  cmd_part->add_option("--report", part_report, "entropy report JSON");

  // ---- cluster (full pipeline) ----
  std::string cl_series, cl_points, cl_metric = "k-NN", cl_pk, cl_labels, cl_report, cl_graph_out;
  ExtractionConfig clcfg;
  auto* cmd_cluster = app.add_subcommand("cluster", "full pipeline: extract + partition + map");
  cmd_cluster->add_option("--series", cl_series);
  cmd_cluster->add_option("--points", cl_points);
  cmd_cluster->add_option("--method", clcfg.method, "mi | mle (series input)");
  cmd_cluster->add_option("--metric", cl_metric, "proximity rule (points input)");
  cmd_cluster->add_option("--lambda", clcfg.minkowski_lambda);
  cmd_cluster->add_option("--sigma", clcfg.sigma);
  cmd_cluster->add_option("--tau", clcfg.threshold);
  cmd_cluster->add_option("--target-degree", clcfg.target_mean_degree);
  cmd_cluster->add_option("--epsilon", clcfg.epsilon);
  cmd_cluster->add_option("--k", clcfg.k_neighbors);
  cmd_cluster->add_option("--alpha", clcfg.alpha);
  cmd_cluster->add_option("--epochs", clcfg.epochs);
  cmd_cluster->add_option("--seed", clcfg.seed);
  cmd_cluster->add_option("--pk", cl_pk, "prior-knowledge JSON");
  cmd_cluster->add_option("--labels", cl_labels, "output labels JSON")->required();
  cmd_cluster->add_option("--report", cl_report, "entropy report JSON");
  cmd_cluster->add_option("--graph-out", cl_graph_out, "extracted graph CSV");

  // ---- distance ----
  std::string d_g1, d_g2;
  HimConfig him_cfg;
  auto* cmd_dist = app.add_subcommand("distance", "HIM distance between two graphs");
  cmd_dist->add_option("--g1", d_g1)->required();
  cmd_dist->add_option("--g2", d_g2)->required();
  cmd_dist->add_option("--xi", him_cfg.xi);
  cmd_dist->add_option("--gamma", him_cfg.gamma, "IM width (0 = auto)");

  // ---- evaluate ----
  std::string ev_graph, ev_labels, ev_pk, ev_out;
  auto* cmd_eval = app.add_subcommand("evaluate", "H1 / DI / DI-R of a graph + partition");
  cmd_eval->add_option("--graph", ev_graph)->required();
  cmd_eval->add_option("--labels", ev_labels, "labels JSON ({\"labels\":[...]})");
  cmd_eval->add_option("--pk", ev_pk, "pk JSON; unassigned become singletons");
  cmd_eval->add_option("--out", ev_out, "report JSON (default stdout)");

  // ---- experiment ----
  std::string exp_config, exp_out = "experiment_out";
  auto* cmd_exp = app.add_subcommand("experiment", "sweep graphs x models x metrics");
  cmd_exp->add_option("--config", exp_config)->required();
  cmd_exp->add_option("--out", exp_out, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_synth) {
      Graph g = make_synth(synth);
      save_graph_file(g, synth.out);
      std::cout << "wrote " << synth.out << " (n=" << g.num_vertices() << ", m=" << g.num_edges()
                << ")\n";
      return 0;
    }

    if (*cmd_sim) {
      Graph g = load_graph_file(sim_graph);
      TimeSeriesMatrix ts = simulate(g, dyn);
      std::ofstream out(sim_out);
      if (!out) throw std::runtime_error("cannot write " + sim_out);
      save_timeseries_csv(ts, out);
      if (!sim_manifest.empty()) {
        ordered_json j;
        j["model"] = dyn.model;
        j["steps"] = dyn.steps;
        j["seed"] = dyn.seed;
        j["coupling"] = dyn.coupling;
        write_json(j, sim_manifest);
      }
      return 0;
    }

    if (*cmd_ext) {
      ResolvedExtraction ext;
      if (!ext_series.empty()) {
        TimeSeriesMatrix ts = load_timeseries_file(ext_series);
        if (ecfg.method == "mi" || ecfg.method == "mle") {
          ext = extract_from_series(ts, ecfg);
        } else {
          metric_pipeline(ext_metric, series_rows(ts), ecfg, &ext);
        }
      } else if (!ext_points.empty()) {
        metric_pipeline(ext_metric, load_points_file(ext_points), ecfg, &ext);
      } else {
        throw std::runtime_error("extract: need --series or --points");
      }
      save_graph_file(ext.graph, ext_out);
      if (!ext_report.empty()) write_json(extraction_json(ext), ext_report);
      return 0;
    }

    if (*cmd_part) {
      Graph g = load_graph_file(part_graph);
      std::optional<PriorKnowledge> pk;
      if (!part_pk.empty()) pk = load_pk_file(part_pk, g.num_vertices());
      if (part_algo == "pk-gdimaop" && !pk)
        throw std::runtime_error("partition: pk-gdimaop requires --pk");
      CmdiResult res = cmdi_on_graph(g, pk);
      write_json(labels_to_json(res.labels), part_labels);
      if (!part_report.empty()) write_json(report_to_json(res.report), part_report);
      return 0;
    }

    if (*cmd_cluster) {
      std::optional<PriorKnowledge> pk;
      CmdiResult res;
      if (!cl_series.empty()) {
        TimeSeriesMatrix ts = load_timeseries_file(cl_series);
        if (!cl_pk.empty()) pk = load_pk_file(cl_pk, ts.n);
        ResolvedExtraction ext;
        if (clcfg.method == "mi" || clcfg.method == "mle")
          ext = extract_from_series(ts, clcfg);
        else
          metric_pipeline(cl_metric, series_rows(ts), clcfg, &ext);
        res = cmdi_on_graph(ext.graph, pk);
        res.extraction = std::move(ext);
      } else if (!cl_points.empty()) {
        auto pts = load_points_file(cl_points);
        if (!cl_pk.empty()) pk = load_pk_file(cl_pk, static_cast<int>(pts.size()));
        ResolvedExtraction ext;
        metric_pipeline(cl_metric, pts, clcfg, &ext);
        res = cmdi_on_graph(ext.graph, pk);
        res.extraction = std::move(ext);
      } else {
        throw std::runtime_error("cluster: need --series or --points");
      }
      ordered_json labels = labels_to_json(res.labels);
      labels["extraction"] = extraction_json(res.extraction);
      write_json(labels, cl_labels);
      if (!cl_report.empty()) write_json(report_to_json(res.report), cl_report);
      if (!cl_graph_out.empty()) save_graph_file(res.extraction.graph, cl_graph_out);
      return 0;
    }

    if (*cmd_dist) {
      Graph g1 = load_graph_file(d_g1);
      Graph g2 = load_graph_file(d_g2);
      double gamma = resolve_gamma(him_cfg, g1.num_vertices());
      HimConfig resolved{him_cfg.xi, gamma};
      ordered_json j;
      j["hamming"] = hamming_distance(g1, g2);
      j["im"] = ipsen_mikhailov(g1, g2, resolved);
      j["him"] = him_distance(g1, g2, resolved);
      j["xi"] = resolved.xi;
      j["gamma"] = gamma;
      write_json(j, "-");
      return 0;
    }

    if (*cmd_eval) {
      Graph g = load_graph_file(ev_graph);
      Partition p = Partition::singletons(g.num_vertices());
      if (!ev_labels.empty()) {
        PriorKnowledge labels = load_pk_file(ev_labels, g.num_vertices());
        for (int l : labels.labels)
          if (l < 0) throw std::runtime_error("evaluate: labels must be >= 0");
        p = Partition::from_labels(labels.labels);
      } else if (!ev_pk.empty()) {
        PriorKnowledge pk = load_pk_file(ev_pk, g.num_vertices());
        // unassigned vertices become singleton blocks
        std::vector<int> labels = pk.labels;
        int next = 0;
        for (int l : labels) next = std::max(next, l + 1);
        for (auto& l : labels)
          if (l == kUnassigned) l = next++;
        p = Partition::from_labels(labels);
      }
      write_json(report_to_json(evaluate_partition(g, p)), ev_out);
      return 0;
    }

    if (*cmd_exp) return run_experiment(exp_config, exp_out);
  } catch (const std::exception& e) {
    std::cerr << "[" << app.get_subcommands().front()->get_name() << "] error: " << e.what()
              << '\n';
    return 1;
  }
  return 0;
}
