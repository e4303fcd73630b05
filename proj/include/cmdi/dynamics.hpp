#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cmdi/extraction.hpp"
#include "cmdi/graph.hpp"
#include "cmdi/rng.hpp"

namespace cmdi {

struct DynamicsConfig {
  std::string model = "kim";  // kim | bm | igm
  int steps = 2001;
  std::uint64_t seed = 0;
  double coupling = 0.5;       // maps adjacency weight to Ising coupling
  double beta = 1.0;           // inverse temperature (IGM)
  double p_spread = 0.3;       // branching activation probability (BM)
  double p_spontaneous = 0.01; // BM noise floor, keeps the chain out of absorption

  void validate() const {
    if (steps < 2) throw std::invalid_argument("dynamics: need steps >= 2");
    if (model == "bm" && (p_spread < 0.0 || p_spread > 1.0))
      throw std::invalid_argument("dynamics: p_spread outside [0,1]");
    if (model == "igm" && beta < 0.0) throw std::invalid_argument("dynamics: beta must be >= 0");
  }
};

// c cliques K_s on consecutive vertex ranges, plus c ring edges joining
// neighbor cliques. n = c*s, m = c*s*(s-1)/2 + c.
inline Graph gen_ring_of_cliques(int cliques, int size) {
  if (cliques < 3 || size < 2)
    throw std::invalid_argument("gen_ring_of_cliques: need cliques >= 3, size >= 2");
  std::vector<Edge> edges;
  for (int c = 0; c < cliques; ++c) {
    int base = c * size;
    for (int i = 0; i < size; ++i)
      for (int j = i + 1; j < size; ++j) edges.push_back({base + i, base + j, 1.0});
  }
  for (int c = 0; c < cliques; ++c) {
    int u = c * size + (size > 1 ? 1 : 0);  // border vertex of clique c
    int v = ((c + 1) % cliques) * size;     // entry vertex of the next clique
    edges.push_back({u, v, 1.0});
  }
  return Graph(cliques * size, std::move(edges));
}

inline Graph gen_grid(int rows, int cols) {
  if (rows < 2 || cols < 2) throw std::invalid_argument("gen_grid: need rows, cols >= 2");
  auto idx = [cols](int i, int j) { return i * cols + j; };
  std::vector<Edge> edges;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (j + 1 < cols) edges.push_back({idx(i, j), idx(i, j + 1), 1.0});
      if (i + 1 < rows) edges.push_back({idx(i, j), idx(i + 1, j), 1.0});
    }
  return Graph(rows * cols, std::move(edges));
}

// Preferential attachment from a seed clique of m_attach + 1 vertices; each
// later vertex attaches m_attach edges. m_attach = 1 yields a tree with n-1 edges.
inline Graph gen_barabasi_albert(int n, int m_attach, std::uint64_t seed) {
  if (m_attach < 1 || m_attach >= n)
    throw std::invalid_argument("gen_barabasi_albert: need 1 <= m_attach < n");
  SplitMix rng(seed);
  std::vector<Edge> edges;
  std::vector<int> endpoint_pool;  // vertex repeated once per incident edge
  for (int i = 0; i <= m_attach; ++i)
    for (int j = i + 1; j <= m_attach; ++j) {
      edges.push_back({i, j, 1.0});
      endpoint_pool.push_back(i);
      endpoint_pool.push_back(j);
    }
  std::vector<bool> used(n, false);
  for (int v = m_attach + 1; v < n; ++v) {
    std::vector<int> chosen;
    while (static_cast<int>(chosen.size()) < m_attach) {
      int u = endpoint_pool[rng.bounded(endpoint_pool.size())];
      if (!used[u]) {
        used[u] = true;
        chosen.push_back(u);
      }
    }
    for (int u : chosen) {
      used[u] = false;
      edges.push_back({u, v, 1.0});
      endpoint_pool.push_back(u);
      endpoint_pool.push_back(v);
    }
  }
  return Graph(n, std::move(edges));
}

// Synchronous kinetic-Ising dynamics: P[s_i(t+1)=+1] = e^{H_i}/(e^{H_i}+e^{-H_i})
// with H_i = coupling * sum_j A_ij s_j(t). Initial state uniform +-1.
inline TimeSeriesMatrix simulate_kim(const Graph& g, const DynamicsConfig& cfg) {
  cfg.validate();
  const int n = g.num_vertices();
  SplitMix rng(cfg.seed);
  TimeSeriesMatrix ts;
  ts.n = n;
  ts.steps = cfg.steps;
  ts.kind = SeriesKind::spin;
  ts.values.assign(static_cast<std::size_t>(n) * cfg.steps, 0.0);
  std::vector<double> state(n), next(n);
  for (int v = 0; v < n; ++v) state[v] = rng.spin();
  for (int v = 0; v < n; ++v) ts.at(v, 0) = state[v];
  for (int t = 1; t < cfg.steps; ++t) {
    for (int v = 0; v < n; ++v) {
      double field = 0.0;
      for (const auto& [u, w] : g.neighbors(v)) field += cfg.coupling * w * state[u];
      double p_up = 1.0 / (1.0 + std::exp(-2.0 * field));
      next[v] = rng.uniform01() < p_up ? 1.0 : -1.0;
    }
    state.swap(next);
    for (int v = 0; v < n; ++v) ts.at(v, t) = state[v];
  }
  return ts;
}

// Asynchronous Glauber dynamics: one random vertex per micro-step flips with
// probability 1/(1 + exp(2 beta s_i H_i)); state recorded every n micro-steps.
inline TimeSeriesMatrix simulate_igm(const Graph& g, const DynamicsConfig& cfg) {
  cfg.validate();
  const int n = g.num_vertices();
  SplitMix rng(cfg.seed);
  TimeSeriesMatrix ts;
  ts.n = n;
  ts.steps = cfg.steps;
  ts.kind = SeriesKind::spin;
  ts.values.assign(static_cast<std::size_t>(n) * cfg.steps, 0.0);
  std::vector<double> state(n);
  for (int v = 0; v < n; ++v) state[v] = rng.spin();
  for (int v = 0; v < n; ++v) ts.at(v, 0) = state[v];
  for (int t = 1; t < cfg.steps; ++t) {
    for (int micro = 0; micro < n; ++micro) {
      int v = static_cast<int>(rng.bounded(n));
      double field = 0.0;
      for (const auto& [u, w] : g.neighbors(v)) field += cfg.coupling * w * state[u];
      double p_flip = 1.0 / (1.0 + std::exp(2.0 * cfg.beta * state[v] * field));
      if (rng.uniform01() < p_flip) state[v] = -state[v];
    }
    for (int v = 0; v < n; ++v) ts.at(v, t) = state[v];
  }
  return ts;
}

// Branching-process cascade: an active vertex activates each neighbor next
// step with probability p_spread; spontaneous activation keeps activity alive.
// Activity is encoded as +1 (active) / -1 (inactive).
inline TimeSeriesMatrix simulate_bm(const Graph& g, const DynamicsConfig& cfg) {
  cfg.validate();
  const int n = g.num_vertices();
  SplitMix rng(cfg.seed);
  TimeSeriesMatrix ts;
  ts.n = n;
  ts.steps = cfg.steps;
  ts.kind = SeriesKind::spin;
  ts.values.assign(static_cast<std::size_t>(n) * cfg.steps, 0.0);
  std::vector<bool> active(n), next(n);
  for (int v = 0; v < n; ++v) active[v] = rng.uniform01() < 0.5;
  for (int v = 0; v < n; ++v) ts.at(v, 0) = active[v] ? 1.0 : -1.0;
  for (int t = 1; t < cfg.steps; ++t) {
    std::fill(next.begin(), next.end(), false);
    for (int v = 0; v < n; ++v) {
      if (!active[v]) continue;
      for (const auto& [u, w] : g.neighbors(v)) {
        (void)w;
        if (rng.uniform01() < cfg.p_spread) next[u] = true;
      }
    }
    for (int v = 0; v < n; ++v)
      if (rng.uniform01() < cfg.p_spontaneous) next[v] = true;
    active = next;
    for (int v = 0; v < n; ++v) ts.at(v, t) = active[v] ? 1.0 : -1.0;
  }
  return ts;
}

inline TimeSeriesMatrix simulate(const Graph& g, const DynamicsConfig& cfg) {
  if (cfg.model == "kim") return simulate_kim(g, cfg);
  if (cfg.model == "igm") return simulate_igm(g, cfg);
  if (cfg.model == "bm") return simulate_bm(g, cfg);
  throw std::invalid_argument("unknown dynamics model: " + cfg.model);
}

}  // namespace cmdi
