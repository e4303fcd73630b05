#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmdi/graph.hpp"
#include "cmdi/matrix.hpp"
#include "cmdi/rng.hpp"

namespace cmdi {

enum class SeriesKind { spin, real };

// n-node x T-step observation matrix, row v = trajectory of node v.
struct TimeSeriesMatrix {
  int n = 0;
  int steps = 0;
  std::vector<double> values;  // row-major n x T
  SeriesKind kind = SeriesKind::spin;

  double at(int node, int t) const { return values[static_cast<std::size_t>(node) * steps + t]; }
  double& at(int node, int t) { return values[static_cast<std::size_t>(node) * steps + t]; }

  void validate() const {
    if (n < 1 || steps < 2) throw std::invalid_argument("time series: need n >= 1, T >= 2");
    if (values.size() != static_cast<std::size_t>(n) * steps)
      throw std::invalid_argument("time series: shape mismatch");
    if (kind == SeriesKind::spin)
      for (double x : values)
        if (x != 1.0 && x != -1.0) throw std::invalid_argument("time series: spin values must be +-1");
  }
};

enum class ProximityMetric { euc, manh, mink, cheb, canb, maha, angu, pcor };

inline ProximityMetric parse_metric(const std::string& s) {
  if (s == "EUC" || s == "euc") return ProximityMetric::euc;
  if (s == "MANH" || s == "manh") return ProximityMetric::manh;
  if (s == "MINK" || s == "mink") return ProximityMetric::mink;
  if (s == "CHEB" || s == "cheb") return ProximityMetric::cheb;
  if (s == "CANB" || s == "canb") return ProximityMetric::canb;
  if (s == "MAHA" || s == "maha") return ProximityMetric::maha;
  if (s == "ANGU" || s == "angu") return ProximityMetric::angu;
  if (s == "P-COR" || s == "pcor" || s == "PCOR") return ProximityMetric::pcor;
  throw std::invalid_argument("unknown proximity metric: " + s);
}

inline std::string metric_name(ProximityMetric m) {
  switch (m) {
    case ProximityMetric::euc: return "EUC";
    case ProximityMetric::manh: return "MANH";
    case ProximityMetric::mink: return "MINK";
    case ProximityMetric::cheb: return "CHEB";
    case ProximityMetric::canb: return "CANB";
    case ProximityMetric::maha: return "MAHA";
    case ProximityMetric::angu: return "ANGU";
    case ProximityMetric::pcor: return "P-COR";
  }
  return "?";
}

struct ExtractionConfig {
  std::string method = "mi";  // mi | mle | proximity
  ProximityMetric metric = ProximityMetric::euc;
  double minkowski_lambda = 3.0;  // >= 1
  double sigma = 0.0;             // Gaussian width; 0 = median heuristic
  double threshold = -1.0;        // < 0 = auto (mean degree ~ 2 ln n)
  double target_mean_degree = 0.0;  // 0 = 2 ln n
  double epsilon = 1.0;
  int k_neighbors = 3;
  double alpha = 0.1;
  int epochs = 200;
  std::uint64_t seed = 0;
};

// Plug-in mutual information over the empirical 2x2 joint of a spin series pair.
inline AffinityMatrix mi_matrix(const TimeSeriesMatrix& ts) {
  ts.validate();
  if (ts.kind != SeriesKind::spin) throw std::invalid_argument("mi_matrix: spin series required");
  const int n = ts.n;
  const double T = static_cast<double>(ts.steps);
  AffinityMatrix mi(n);
  std::vector<double> p_plus(n, 0.0);
  for (int u = 0; u < n; ++u) {
    int c = 0;
    for (int t = 0; t < ts.steps; ++t)
      if (ts.at(u, t) > 0) ++c;
    p_plus[u] = c / T;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      int pp = 0, pm = 0, mp = 0;
      for (int t = 0; t < ts.steps; ++t) {
        bool a = ts.at(u, t) > 0, b = ts.at(v, t) > 0;
        pp += a && b;
        pm += a && !b;
        mp += !a && b;
      }
      double joint[2][2] = {{(T - pp - pm - mp) / T, mp / T}, {pm / T, pp / T}};
      double pu[2] = {1.0 - p_plus[u], p_plus[u]};
      double pv[2] = {1.0 - p_plus[v], p_plus[v]};
      double s = 0.0;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          if (joint[a][b] > 0.0 && pu[a] > 0.0 && pv[b] > 0.0)
            s += joint[a][b] * std::log2(joint[a][b] / (pu[a] * pv[b]));
      mi(u, v) = mi(v, u) = std::max(0.0, s);
    }
  }
  return mi;
}

// Gradient of the kinetic-Ising log-likelihood w.r.t. row i of the coupling
// matrix: sum_t [ sigma_i(t+1) sigma_j(t) - tanh(H_i(t)) sigma_j(t) ].
inline void kim_gradient_row(const TimeSeriesMatrix& ts, const SquareMatrix& w, int i,
                             std::vector<double>& grad) {
  const int n = ts.n;
  grad.assign(n, 0.0);
  for (int t = 0; t + 1 < ts.steps; ++t) {
    double field = 0.0;
    for (int j = 0; j < n; ++j) field += w(i, j) * ts.at(j, t);
    double err = ts.at(i, t + 1) - std::tanh(field);
    for (int j = 0; j < n; ++j) grad[j] += err * ts.at(j, t);
  }
}

// Kinetic-Ising log-likelihood of row i's transitions under coupling matrix w:
//   sum_t [ sigma_i(t+1) H_i(t) - ln(2 cosh H_i(t)) ]
inline double kim_log_likelihood_row(const TimeSeriesMatrix& ts, const SquareMatrix& w, int i) {
  double s = 0.0;
  for (int t = 0; t + 1 < ts.steps; ++t) {
    double field = 0.0;
    for (int j = 0; j < ts.n; ++j) field += w(i, j) * ts.at(j, t);
    s += ts.at(i, t + 1) * field - std::log(2.0 * std::cosh(field));
  }
  return s;
}

// Structure extraction by maximum-likelihood gradient ascent on kinetic-Ising
// couplings. Returns the symmetrized magnitude (|W| + |W^T|)/2 as affinity.
inline AffinityMatrix esmbmle(const TimeSeriesMatrix& ts, const ExtractionConfig& cfg) {
  ts.validate();
  if (ts.kind != SeriesKind::spin) throw std::invalid_argument("esmbmle: spin series required");
  if (!(cfg.alpha > 0.0)) throw std::invalid_argument("esmbmle: alpha must be positive");
  if (cfg.epochs < 1) throw std::invalid_argument("esmbmle: epochs must be >= 1");
  const int n = ts.n;
  SplitMix rng(cfg.seed);
  SquareMatrix w(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w(i, j) = 0.01 * (2.0 * rng.uniform01() - 1.0);
  const double step = cfg.alpha / (ts.steps - 1);
  std::vector<double> grad;
  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    for (int i = 0; i < n; ++i) {
      kim_gradient_row(ts, w, i, grad);
      for (int j = 0; j < n; ++j) {
        w(i, j) += step * grad[j];
        if (std::abs(w(i, j)) > 1e6)
          throw std::runtime_error("esmbmle: diverged (|W| > 1e6); reduce alpha=" +
                                   std::to_string(cfg.alpha));
      }
    }
  }
  AffinityMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) a(i, j) = 0.5 * (std::abs(w(i, j)) + std::abs(w(j, i)));
  return a;
}

namespace detail {

inline std::vector<double> row(const std::vector<std::vector<double>>& pts, int i) { return pts[i]; }

inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t d = x.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    mx += x[k];
    my += y[k];
  }
  mx /= d;
  my /= d;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    sxy += (x[k] - mx) * (y[k] - my);
    sxx += (x[k] - mx) * (x[k] - mx);
    syy += (y[k] - my) * (y[k] - my);
  }
  const double reg = 1e-12;
  return sxy / std::sqrt((sxx + reg) * (syy + reg));
}

}  // namespace detail

// Pairwise distances between point rows under the chosen metric.
inline AffinityMatrix proximity_matrix(const std::vector<std::vector<double>>& points,
                                       ProximityMetric metric, double minkowski_lambda = 3.0) {
  const int n = static_cast<int>(points.size());
  if (n < 2) throw std::invalid_argument("proximity_matrix: need at least 2 points");
  const std::size_t d = points[0].size();
  for (const auto& p : points)
    if (p.size() != d) throw std::invalid_argument("proximity_matrix: ragged point rows");
  if (metric == ProximityMetric::mink && minkowski_lambda < 1.0)
    throw std::invalid_argument("proximity_matrix: Minkowski lambda must be >= 1");

  // inverse covariance diagonalless setup for Mahalanobis
  std::vector<std::vector<double>> cov;
  if (metric == ProximityMetric::maha) {
    std::vector<double> mean(d, 0.0);
    for (const auto& p : points)
      for (std::size_t k = 0; k < d; ++k) mean[k] += p[k];
    for (auto& m : mean) m /= n;
    cov.assign(d, std::vector<double>(d, 0.0));
    for (const auto& p : points)
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
          cov[a][b] += (p[a] - mean[a]) * (p[b] - mean[b]);
    double trace = 0.0;
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) cov[a][b] /= (n > 1 ? n - 1 : 1);
      trace += cov[a][a];
    }
    double reg = (trace > 0 ? 1e-6 * trace / d : 1e-6);
    for (std::size_t a = 0; a < d; ++a) cov[a][a] += reg;
    // in-place Cholesky, cov = L L^T
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b <= a; ++b) {
        double s = cov[a][b];
        for (std::size_t k = 0; k < b; ++k) s -= cov[a][k] * cov[b][k];
        if (a == b)
          cov[a][a] = std::sqrt(std::max(s, 1e-300));
        else
          cov[a][b] = s / cov[b][b];
      }
      for (std::size_t b = a + 1; b < d; ++b) cov[a][b] = 0.0;
    }
  }

  auto maha = [&](const std::vector<double>& x, const std::vector<double>& y) {
    // solve L z = (x - y), distance = |z|
    std::vector<double> z(d);
    for (std::size_t a = 0; a < d; ++a) {
      double s = x[a] - y[a];
      for (std::size_t k = 0; k < a; ++k) s -= cov[a][k] * z[k];
      z[a] = s / cov[a][a];
    }
    double s = 0.0;
    for (double v : z) s += v * v;
    return std::sqrt(s);
  };

  AffinityMatrix dist(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto& x = points[i];
      const auto& y = points[j];
      double v = 0.0;
      switch (metric) {
        case ProximityMetric::euc: {
          for (std::size_t k = 0; k < d; ++k) v += (x[k] - y[k]) * (x[k] - y[k]);
          v = std::sqrt(v);
          break;
        }
        case ProximityMetric::manh: {
          for (std::size_t k = 0; k < d; ++k) v += std::abs(x[k] - y[k]);
          break;
        }
        case ProximityMetric::mink: {
          for (std::size_t k = 0; k < d; ++k)
            v += std::pow(std::abs(x[k] - y[k]), minkowski_lambda);
          v = std::pow(v, 1.0 / minkowski_lambda);
          break;
        }
        case ProximityMetric::cheb: {
          for (std::size_t k = 0; k < d; ++k) v = std::max(v, std::abs(x[k] - y[k]));
          break;
        }
        case ProximityMetric::canb: {
          for (std::size_t k = 0; k < d; ++k) {
            double den = std::abs(x[k]) + std::abs(y[k]);
            if (den > 0.0) v += std::abs(x[k] - y[k]) / den;
          }
          break;
        }
        case ProximityMetric::maha:
          v = maha(x, y);
          break;
        case ProximityMetric::angu: {
          double dot = 0.0, nx = 0.0, ny = 0.0;
          for (std::size_t k = 0; k < d; ++k) {
            dot += x[k] * y[k];
            nx += x[k] * x[k];
            ny += y[k] * y[k];
          }
          double c = dot / std::sqrt((nx + 1e-300) * (ny + 1e-300));
          v = std::acos(std::clamp(c, -1.0, 1.0)) / M_PI;
          break;
        }
        case ProximityMetric::pcor:
          v = 1.0 - detail::pearson(x, y);
          break;
      }
      dist(i, j) = dist(j, i) = v;
    }
  }
  return dist;
}

inline double median_pairwise_distance(const AffinityMatrix& dist) {
  const int n = dist.size();
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) v.push_back(dist(i, j));
  if (v.empty()) return 1.0;
  std::sort(v.begin(), v.end());
  std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

// A_{x,y} = exp(-d^2 / (2 sigma^2)), zero diagonal.
inline AffinityMatrix gaussian_affinity(const AffinityMatrix& dist, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("gaussian_affinity: sigma must be positive");
  const int n = dist.size();
  AffinityMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) a(i, j) = std::exp(-dist(i, j) * dist(i, j) / (2.0 * sigma * sigma));
  return a;
}

// Largest tau such that keeping entries > tau leaves mean degree ~ target.
inline double threshold_for_mean_degree(const AffinityMatrix& a, double target_mean_degree) {
  const int n = a.size();
  std::vector<double> v;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a(i, j) > 0.0) v.push_back(a(i, j));
  std::sort(v.begin(), v.end(), std::greater<>());
  std::size_t keep = static_cast<std::size_t>(std::lround(target_mean_degree * n / 2.0));
  if (keep >= v.size()) return 0.0;
  return v[keep];
}

// Keep entries with affinity strictly above tau as weighted edges.
inline Graph threshold_to_graph(const AffinityMatrix& a, double tau) {
  if (tau < 0.0) throw std::invalid_argument("threshold_to_graph: tau must be >= 0");
  if (!a.is_symmetric()) throw std::invalid_argument("threshold_to_graph: asymmetric input");
  std::vector<Edge> edges;
  for (int i = 0; i < a.size(); ++i)
    for (int j = i + 1; j < a.size(); ++j)
      if (a(i, j) > tau) edges.push_back({i, j, a(i, j)});
  return Graph(a.size(), std::move(edges));
}

// Union-symmetrized k-nearest-neighbor graph over a distance matrix; edge
// weight 1/(1+d). Equidistant neighbors break ties toward smaller vertex id.
inline Graph knn_graph(const AffinityMatrix& dist, int k) {
  const int n = dist.size();
  if (k < 1 || k >= n) throw std::invalid_argument("knn_graph: need 1 <= k < n");
  if (!dist.is_symmetric()) throw std::invalid_argument("knn_graph: asymmetric input");
  std::vector<Edge> edges;
  std::vector<std::vector<bool>> keep(n, std::vector<bool>(n, false));
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) {
    order.clear();
    for (int j = 0; j < n; ++j)
      if (j != i) order.push_back(j);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return dist(i, a) < dist(i, b); });
    for (int r = 0; r < k; ++r) keep[i][order[r]] = true;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (keep[i][j] || keep[j][i]) edges.push_back({i, j, 1.0 / (1.0 + dist(i, j))});
  return Graph(n, std::move(edges));
}

// epsilon-neighborhood graph: connect pairs with d <= eps, weight 1/(1+d).
inline Graph eps_graph(const AffinityMatrix& dist, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps_graph: epsilon must be positive");
  if (!dist.is_symmetric()) throw std::invalid_argument("eps_graph: asymmetric input");
  const int n = dist.size();
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (dist(i, j) <= eps) edges.push_back({i, j, 1.0 / (1.0 + dist(i, j))});
  return Graph(n, std::move(edges));
}

}  // namespace cmdi
