// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "cmdi/cmdi.hpp"
#include "cmdi/rng.hpp"

using namespace cmdi;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %2d: %-34s %s\n", ok ? "PASS" : "FAIL", id, name.c_str(),
              detail.c_str());
  if (!ok) ++failures;
}

double now_seconds() {
  using clock = std::chrono::steady_clock;
  static const clock::time_point start = clock::now();
  return std::chrono::duration<double>(clock::now() - start).count();
}

Graph random_connected(SplitMix& rng, int n, double extra_p) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({static_cast<int>(rng.bounded(v)), v, 1.0});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool have = false;
      for (const Edge& e : edges)
        if (e.u == std::min(i, j) && e.v == std::max(i, j)) have = true;
      if (!have && rng.uniform01() < extra_p) edges.push_back({i, j, 1.0});
    }
  return Graph(n, std::move(edges));
}

Partition random_partition(SplitMix& rng, int n) {
  std::vector<int> labels(n);
  int k = 1 + static_cast<int>(rng.bounded(n));
  for (int v = 0; v < n; ++v) labels[v] = static_cast<int>(rng.bounded(k));
  return Partition::from_labels(labels);
}

void criterion_1() {
  double t0 = now_seconds();
  Graph g = gen_ring_of_cliques(6, 5);
  GdimaopResult r = gdimaop(g);
  double di = decoding_info(g, r.partition);
  double elapsed = now_seconds() - t0;

  bool blocks_ok = r.partition.size() == 6;
  if (blocks_ok)
    for (int c = 0; c < 6; ++c)
      for (int i = 0; i < 5; ++i)
        if (r.partition.block_of[c * 5 + i] != c) blocks_ok = false;
  bool ok = blocks_ok && std::abs(di - 2.35) <= 0.01 && elapsed < 1.0;
  std::ostringstream d;
  d << "di=" << di << " blocks=" << r.partition.size() << " t=" << elapsed << "s";
  report(1, "ring-of-cliques DI", ok, d.str());
}

void criterion_2() {
  Graph g = gen_grid(5, 6);
  double di = decoding_info(g, gdimaop(g).partition);
  bool tol_ok = std::abs(di - 1.567) <= 0.08;

  Graph small = gen_grid(2, 3);
  double greedy = decoding_info(small, gdimaop(small).partition);
  double oracle = brute_force_optimal_partition(small).second;
  bool oracle_ok = std::abs(greedy - oracle) < 1e-9;

  std::ostringstream d;
  d << "di=" << di << " (target 1.567+-0.08), 2x3 greedy=" << greedy << " oracle=" << oracle;
  report(2, "grid DI", tol_ok && oracle_ok, d.str());
}

void criterion_3() {
  int in_range = 0;
  std::ostringstream d;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = gen_barabasi_albert(30, 1, seed);
    double di = decoding_info(g, gdimaop(g).partition);
    if (di >= 1.9 && di <= 2.3) ++in_range;
    d << (seed ? "," : "") << std::round(di * 1000) / 1000;
  }
  report(3, "scale-free DI range", in_range >= 7, d.str() + " in-range=" + std::to_string(in_range));
}

void criterion_4() {
  double t0 = now_seconds();
  SplitMix rng(20240612);
  bool ok = true;
  int matched = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + static_cast<int>(rng.bounded(6));  // n <= 8
    Graph g = random_connected(rng, n, 0.3);
    double greedy = decoding_info(g, gdimaop(g).partition);
    double oracle = brute_force_optimal_partition(g).second;
    if (greedy > oracle + 1e-9 || greedy < -1e-12) ok = false;
    if (std::abs(decoding_info(g, Partition::singletons(n))) > 0.0) ok = false;
    if (std::abs(decoding_info(g, Partition::whole(n))) > 0.0) ok = false;
    if (std::abs(greedy - oracle) < 1e-9) ++matched;
  }
  double elapsed = now_seconds() - t0;
  ok = ok && elapsed < 120.0;
  std::ostringstream d;
  d << "200 graphs, greedy=oracle on " << matched << ", t=" << elapsed << "s";
  report(4, "oracle dominance & extremes", ok, d.str());
}

void criterion_5() {
  SplitMix rng(555);
  int cases = 0;
  bool ok = true;
  double worst = 0.0;
  while (cases < 1000) {
    int n = 4 + static_cast<int>(rng.bounded(8));
    Graph g = random_connected(rng, n, 0.15);
    Partition p = random_partition(rng, n);
    for (std::size_t i = 0; i < p.size() && cases < 1000; ++i)
      for (std::size_t j = i + 1; j < p.size() && cases < 1000; ++j) {
        double wij = 0.0;
        for (int v : p.blocks[i])
          for (const auto& [u, w] : g.neighbors(v))
            if (p.block_of[u] == static_cast<int>(j)) wij += w;
        if (wij > 0.0) continue;
        double delta = merge_delta(g, p, static_cast<int>(i), static_cast<int>(j));
        worst = std::min(worst, delta);
        if (delta < -1e-12) ok = false;
        ++cases;
      }
  }
  std::ostringstream d;
  d << "1000 disconnected pairs, min delta=" << worst;
  report(5, "theorem-1 fuzz", ok, d.str());
}

void criterion_6() {
  SplitMix rng(666);
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    int n = 2 + static_cast<int>(rng.bounded(10));
    Graph g = random_connected(rng, n, 0.3);
    Partition p = random_partition(rng, n);
    worst = std::max(worst, std::abs(decoding_info(g, p) - (h1(g) - h2_partition(g, p))));
  }
  std::ostringstream d;
  d << "500 pairs, max |error|=" << worst;
  report(6, "DI identity", worst < 1e-9, d.str());
}

void criterion_7() {
  SplitMix rng(777);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    TimeSeriesMatrix ts;
    ts.n = 4;
    ts.steps = 50;
    ts.kind = SeriesKind::spin;
    ts.values.resize(200);
    for (auto& v : ts.values) v = rng.spin();
    SquareMatrix w(4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) w(i, j) = 0.5 * (2.0 * rng.uniform01() - 1.0);
    const double h = 1e-6;
    for (int i = 0; i < 4; ++i) {
      std::vector<double> grad;
      kim_gradient_row(ts, w, i, grad);
      for (int j = 0; j < 4; ++j) {
        SquareMatrix wp = w, wm = w;
        wp(i, j) += h;
        wm(i, j) -= h;
        double fd =
            (kim_log_likelihood_row(ts, wp, i) - kim_log_likelihood_row(ts, wm, i)) / (2.0 * h);
        worst = std::max(worst, std::abs(grad[j] - fd) / std::max(std::abs(fd), 1.0));
      }
    }
  }
  std::ostringstream d;
  d << "20 instances, max rel err=" << worst;
  report(7, "MLE gradient vs finite diff", worst < 1e-5, d.str());
}

void criterion_8() {
  Graph gt = gen_ring_of_cliques(6, 5);
  HimConfig him_cfg;
  him_cfg.gamma = resolve_gamma(him_cfg, 30);
  // tau per extraction picked so mean degree matches the ground truth's (4.4)
  double target_degree = gt.volume() / gt.num_vertices();
  int wins = 0;
  std::ostringstream d;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    DynamicsConfig dyn;
    dyn.coupling = 0.5;
    dyn.steps = 2001;
    dyn.seed = seed;
    TimeSeriesMatrix ts = simulate_kim(gt, dyn);

    ExtractionConfig cfg;
    cfg.seed = seed;
    cfg.target_mean_degree = target_degree;
    cfg.method = "mle";
    double him_mle = him_distance(extract_from_series(ts, cfg).graph, gt, him_cfg);
    cfg.method = "mi";
    double him_mi = him_distance(extract_from_series(ts, cfg).graph, gt, him_cfg);
    if (him_mle <= him_mi) ++wins;
    d << " s" << seed << ":mle=" << std::round(him_mle * 1000) / 1000
      << ",mi=" << std::round(him_mi * 1000) / 1000;
  }
  report(8, "MLE beats MI on HIM (KIM)", wins == 3, d.str() + " wins=" + std::to_string(wins));
}

void criterion_9() {
  bool ok = true;
  Graph g = gen_ring_of_cliques(4, 4);
  HimConfig cfg;
  cfg.gamma = resolve_gamma(cfg, g.num_vertices());
  if (him_distance(g, g, cfg) > 1e-9) ok = false;

  SplitMix rng(909);
  for (int trial = 0; trial < 200 && ok; ++trial) {
    std::vector<Edge> ea, eb;
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j) {
        if (rng.uniform01() < 0.4) ea.push_back({i, j, 1.0});
        if (rng.uniform01() < 0.4) eb.push_back({i, j, 1.0});
      }
    Graph a(8, std::move(ea)), b(8, std::move(eb));
    HimConfig c8;
    c8.gamma = resolve_gamma(c8, 8);
    c8.xi = 0.0;
    if (him_distance(a, b, c8) != hamming_distance(a, b)) ok = false;
    c8.xi = 1.0;
    for (double dval : {hamming_distance(a, b), ipsen_mikhailov(a, b, c8), him_distance(a, b, c8)})
      if (dval < 0.0 || dval > 1.0 + 1e-9) ok = false;
  }

  std::vector<Edge> full;
  for (int i = 0; i < 30; ++i)
    for (int j = i + 1; j < 30; ++j) full.push_back({i, j, 1.0});
  HimConfig c30;
  c30.gamma = resolve_gamma(c30, 30);
  double im = ipsen_mikhailov(Graph(30, {}), Graph(30, std::move(full)), c30);
  if (std::abs(im - 1.0) > 1e-6) ok = false;

  std::ostringstream d;
  d << "IM(empty30,complete30)=" << im;
  report(9, "HIM properties", ok, d.str());
}

void criterion_10() {
  bool bounds_ok = true;
  SplitMix rng(1010);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_connected(rng, 4 + static_cast<int>(rng.bounded(8)), 0.3);
    EntropyReport r = evaluate_partition(g, gdimaop(g).partition);
    if (r.di_ratio < 0.0 || r.di_ratio >= 1.0) bounds_ok = false;
  }

  // two-blob fixture: CMDI vs minibatch-kmeans(k=5) on the same k-NN graph
  SplitMix prng(31337);
  std::vector<std::vector<double>> pts;
  for (int i = 0; i < 10; ++i) pts.push_back({prng.uniform01(), prng.uniform01()});
  for (int i = 0; i < 10; ++i) pts.push_back({50.0 + prng.uniform01(), prng.uniform01()});
  ExtractionConfig cfg;
  cfg.k_neighbors = 3;
  CmdiResult res = cmdi_from_points(pts, cfg, EdgeRule::knn);

  BaselineConfig bcfg;
  bcfg.k = 5;
  bcfg.seed = 7;
  ClusterLabels km = minibatch_kmeans(pts, bcfg);
  double km_dir = di_ratio(res.extraction.graph, Partition::from_labels(km.labels));

  bool fixture_ok = res.report.di_ratio > km_dir;
  std::ostringstream d;
  d << "cmdi di_r=" << res.report.di_ratio << " kmeans(k=5) di_r=" << km_dir;
  report(10, "DI-R bounds & blob fixture", bounds_ok && fixture_ok, d.str());
}

void criterion_11() {
  // identical manifests -> byte-identical payloads
  auto run = []() {
    Graph g = gen_barabasi_albert(24, 2, 5);
    DynamicsConfig dyn;
    dyn.seed = 6;
    dyn.steps = 301;
    TimeSeriesMatrix ts = simulate_kim(g, dyn);
    ExtractionConfig cfg;
    cfg.method = "mi";
    CmdiResult res = cmdi_from_series(ts, cfg);
    std::ostringstream payload;
    payload << save_graph(res.extraction.graph) << labels_to_json(res.labels).dump()
            << report_to_json(res.report).dump();
    return payload.str();
  };
  std::string a = run(), b = run();
  report(11, "determinism", a == b, "payload bytes=" + std::to_string(a.size()));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  std::printf("%s (%d failure%s)\n", failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
              failures, failures == 1 ? "" : "s");
  return failures == 0 ? 0 : 1;
}
