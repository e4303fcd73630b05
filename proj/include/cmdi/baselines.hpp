#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "cmdi/gdimaop.hpp"
#include "cmdi/rng.hpp"

namespace cmdi {

struct BaselineConfig {
  std::string algo = "kmeans";  // kmeans | dbscan
  int k = 2;
  int batch = 32;
  int iters = 100;
  double eps = 0.5;
  int min_pts = 3;
  std::uint64_t seed = 0;
};

namespace detail {

inline double sq_dist(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

}  // namespace detail

// Mini-batch Lloyd iterations with k-means++ seeding; deterministic under seed.
inline ClusterLabels minibatch_kmeans(const std::vector<std::vector<double>>& points,
                                      const BaselineConfig& cfg) {
  const int n = static_cast<int>(points.size());
  if (cfg.k < 1 || cfg.k > n) throw std::invalid_argument("minibatch_kmeans: need 1 <= k <= n");
  SplitMix rng(cfg.seed);

  // k-means++ seeding
  std::vector<std::vector<double>> centers;
  std::vector<double> d2(n, std::numeric_limits<double>::infinity());
  centers.push_back(points[rng.bounded(n)]);
  while (static_cast<int>(centers.size()) < cfg.k) {
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      d2[i] = std::min(d2[i], detail::sq_dist(points[i], centers.back()));
      total += d2[i];
    }
    int pick = 0;
    if (total > 0.0) {
      double r = rng.uniform01() * total, acc = 0.0;
      for (int i = 0; i < n; ++i) {
        acc += d2[i];
        if (acc >= r) {
          pick = i;
          break;
        }
      }
    } else {
      pick = static_cast<int>(rng.bounded(n));
    }
    centers.push_back(points[pick]);
  }

  std::vector<double> counts(cfg.k, 0.0);
  int batch = std::min(std::max(cfg.batch, 1), n);
  for (int it = 0; it < cfg.iters; ++it) {
    for (int b = 0; b < batch; ++b) {
      int i = static_cast<int>(rng.bounded(n));
      int best = 0;
      double bd = std::numeric_limits<double>::infinity();
      for (int c = 0; c < cfg.k; ++c) {
        double d = detail::sq_dist(points[i], centers[c]);
        if (d < bd) {
          bd = d;
          best = c;
        }
      }
      counts[best] += 1.0;
      double eta = 1.0 / counts[best];
      for (std::size_t f = 0; f < centers[best].size(); ++f)
        centers[best][f] += eta * (points[i][f] - centers[best][f]);
    }
  }

  std::vector<int> raw(n);
  for (int i = 0; i < n; ++i) {
    int best = 0;
    double bd = std::numeric_limits<double>::infinity();
    for (int c = 0; c < cfg.k; ++c) {
      double d = detail::sq_dist(points[i], centers[c]);
      if (d < bd) {
        bd = d;
        best = c;
      }
    }
    raw[i] = best;
  }
  // relabel to contiguous ids in order of first appearance
  std::vector<int> remap(cfg.k, -1);
  ClusterLabels out;
  out.labels.resize(n);
  for (int i = 0; i < n; ++i) {
    if (remap[raw[i]] == -1) remap[raw[i]] = out.k++;
    out.labels[i] = remap[raw[i]];
  }
  return out;
}

// Standard density clustering; noise points get kUnassigned so pk_gdimaop
// starts them as singletons.
inline PriorKnowledge dbscan(const std::vector<std::vector<double>>& points,
                             const BaselineConfig& cfg) {
  if (!(cfg.eps > 0.0)) throw std::invalid_argument("dbscan: eps must be positive");
  if (cfg.min_pts < 1) throw std::invalid_argument("dbscan: min_pts must be >= 1");
  const int n = static_cast<int>(points.size());
  const double eps2 = cfg.eps * cfg.eps;
  std::vector<std::vector<int>> nbrs(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && detail::sq_dist(points[i], points[j]) <= eps2) nbrs[i].push_back(j);

  PriorKnowledge pk;
  pk.labels.assign(n, kUnassigned);
  std::vector<bool> visited(n, false);
  int cluster = 0;
  for (int i = 0; i < n; ++i) {
    if (visited[i]) continue;
    visited[i] = true;
    if (static_cast<int>(nbrs[i].size()) + 1 < cfg.min_pts) continue;  // noise (for now)
    pk.labels[i] = cluster;
    std::vector<int> frontier = nbrs[i];
    for (std::size_t f = 0; f < frontier.size(); ++f) {
      int v = frontier[f];
      if (pk.labels[v] == kUnassigned) pk.labels[v] = cluster;
      if (visited[v]) continue;
      visited[v] = true;
      if (static_cast<int>(nbrs[v].size()) + 1 >= cfg.min_pts)
        frontier.insert(frontier.end(), nbrs[v].begin(), nbrs[v].end());
    }
    ++cluster;
  }
  return pk;
}

}  // namespace cmdi
