#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "cmdi/dynamics.hpp"
#include "cmdi/extraction.hpp"

using namespace cmdi;
using Catch::Matchers::WithinAbs;

TEST_CASE("ring of cliques generator") {
  Graph g = gen_ring_of_cliques(6, 5);
  CHECK(g.num_vertices() == 30);
  CHECK(g.num_edges() == 66);

  Graph small = gen_ring_of_cliques(3, 2);
  CHECK(small.num_vertices() == 6);
  CHECK(small.num_edges() == 6);

  CHECK_THROWS_AS(gen_ring_of_cliques(2, 5), std::invalid_argument);
}

TEST_CASE("grid generator") {
  Graph g = gen_grid(5, 6);
  CHECK(g.num_vertices() == 30);
  CHECK(g.num_edges() == 49);

  Graph cyc = gen_grid(2, 2);
  CHECK(cyc.num_edges() == 4);
  for (int v = 0; v < 4; ++v) CHECK(cyc.weighted_degree(v) == 2.0);

  CHECK_THROWS_AS(gen_grid(1, 2), std::invalid_argument);
}

TEST_CASE("barabasi-albert generator") {
  Graph g = gen_barabasi_albert(30, 1, 7);
  CHECK(g.num_vertices() == 30);
  CHECK(g.num_edges() == 29);  // m_attach = 1 gives a tree

  double degsum = 0.0;
  for (int v = 0; v < 30; ++v) degsum += g.weighted_degree(v);
  CHECK(degsum == 2.0 * g.num_edges());

  Graph h = gen_barabasi_albert(30, 1, 7);
  CHECK(save_graph(g) == save_graph(h));  // seed determinism

  Graph g3 = gen_barabasi_albert(20, 3, 1);
  CHECK(g3.num_edges() == 6 + 16 * 3);

  CHECK_THROWS_AS(gen_barabasi_albert(5, 5, 0), std::invalid_argument);
}

TEST_CASE("kim with zero coupling is an iid fair coin") {
  Graph g = gen_grid(3, 3);
  DynamicsConfig cfg;
  cfg.coupling = 0.0;
  cfg.steps = 4001;
  cfg.seed = 5;
  TimeSeriesMatrix ts = simulate_kim(g, cfg);
  ts.validate();
  for (int v = 0; v < ts.n; ++v) {
    double mean = 0.0;
    for (int t = 0; t < ts.steps; ++t) mean += ts.at(v, t);
    mean /= ts.steps;
    CHECK(std::abs(mean) < 3.0 / std::sqrt(static_cast<double>(ts.steps)));
  }
}

TEST_CASE("kim single-spin transition probability matches the logistic form") {
  // vertex 1 is a leaf attached to vertex 0 by weight w; when sigma_0 = +1,
  // P(sigma_1 = +1) = e^w / (e^w + e^-w)
  const double w = 1.3;
  Graph g(2, {{0, 1, w}});
  DynamicsConfig cfg;
  cfg.coupling = 1.0;
  cfg.steps = 200001;
  cfg.seed = 11;
  TimeSeriesMatrix ts = simulate_kim(g, cfg);
  int up = 0, total = 0;
  for (int t = 0; t + 1 < ts.steps; ++t) {
    if (ts.at(0, t) > 0) {
      ++total;
      if (ts.at(1, t + 1) > 0) ++up;
    }
  }
  double expect = std::exp(w) / (std::exp(w) + std::exp(-w));
  CHECK_THAT(static_cast<double>(up) / total, WithinAbs(expect, 0.01));
}

TEST_CASE("kim on a ring of cliques couples within-clique pairs more strongly") {
  Graph g = gen_ring_of_cliques(6, 5);
  DynamicsConfig cfg;
  cfg.coupling = 1.0;
  cfg.steps = 2001;
  cfg.seed = 1;
  AffinityMatrix mi = mi_matrix(simulate_kim(g, cfg));
  double within = 0.0, across = 0.0;
  int nw = 0, na = 0;
  for (int u = 0; u < 30; ++u)
    for (int v = u + 1; v < 30; ++v) {
      if (u / 5 == v / 5) {
        within += mi(u, v);
        ++nw;
      } else {
        across += mi(u, v);
        ++na;
      }
    }
  CHECK(within / nw > across / na);
}

TEST_CASE("igm at beta zero flips with probability one half") {
  Graph g = gen_grid(2, 2);
  DynamicsConfig cfg;
  cfg.model = "igm";
  cfg.beta = 0.0;
  cfg.steps = 2001;
  cfg.seed = 2;
  TimeSeriesMatrix ts = simulate_igm(g, cfg);
  ts.validate();
  // field-independent coin: every vertex mean near zero
  for (int v = 0; v < 4; ++v) {
    double mean = 0.0;
    for (int t = 0; t < ts.steps; ++t) mean += ts.at(v, t);
    CHECK(std::abs(mean / ts.steps) < 0.1);
  }
}

TEST_CASE("bm with no spread has independent nodes") {
  Graph g = gen_grid(2, 3);
  DynamicsConfig cfg;
  cfg.model = "bm";
  cfg.p_spread = 0.0;
  cfg.steps = 20001;
  cfg.seed = 3;
  AffinityMatrix mi = mi_matrix(simulate_bm(g, cfg));
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) CHECK(mi(u, v) < 0.01);
}

TEST_CASE("bm with certain spread forces propagation along an edge") {
  Graph g(2, {{0, 1, 1.0}});
  DynamicsConfig cfg;
  cfg.model = "bm";
  cfg.p_spread = 1.0;
  cfg.steps = 501;
  cfg.seed = 4;
  TimeSeriesMatrix ts = simulate_bm(g, cfg);
  for (int t = 0; t + 1 < ts.steps; ++t)
    if (ts.at(0, t) > 0) CHECK(ts.at(1, t + 1) > 0);
}

TEST_CASE("simulators are deterministic and emit valid spins") {
  Graph g = gen_ring_of_cliques(3, 3);
  for (const char* model : {"kim", "igm", "bm"}) {
    DynamicsConfig cfg;
    cfg.model = model;
    cfg.steps = 101;
    cfg.seed = 99;
    TimeSeriesMatrix a = simulate(g, cfg);
    TimeSeriesMatrix b = simulate(g, cfg);
    a.validate();
    CHECK(a.values == b.values);
  }
}
