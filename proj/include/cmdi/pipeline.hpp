#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "cmdi/baselines.hpp"
#include "cmdi/dynamics.hpp"
#include "cmdi/entropy.hpp"
#include "cmdi/extraction.hpp"
#include "cmdi/gdimaop.hpp"
#include "cmdi/graph.hpp"

namespace cmdi {

struct ResolvedExtraction {
  Graph graph;
  std::string method;    // mi | mle | proximity
  std::string edge_rule; // gaussian | threshold | knn | eps
  double sigma = 0.0;    // resolved Gaussian width (0 if unused)
  double tau = 0.0;      // resolved threshold (0 if unused)
  bool zero_variance_flag = false;
};

enum class EdgeRule { gaussian_threshold, knn, eps, raw_threshold };

inline EdgeRule parse_edge_rule(const std::string& s) {
  if (s == "gaussian") return EdgeRule::gaussian_threshold;
  if (s == "knn" || s == "k-NN") return EdgeRule::knn;
  if (s == "eps" || s == "e-NE") return EdgeRule::eps;
  if (s == "threshold") return EdgeRule::raw_threshold;
  throw std::invalid_argument("unknown edge rule: " + s);
}

// Affinity -> graph with defaults resolved: tau picked so mean degree ~ 2 ln n
// unless the caller set one.
inline ResolvedExtraction affinity_to_graph(const AffinityMatrix& a, const ExtractionConfig& cfg,
                                            const std::string& method) {
  ResolvedExtraction out{Graph{}, method, "threshold"};
  double target = cfg.target_mean_degree > 0.0 ? cfg.target_mean_degree
                                               : 2.0 * std::log(static_cast<double>(a.size()));
  out.tau = cfg.threshold >= 0.0 ? cfg.threshold : threshold_for_mean_degree(a, target);
  out.graph = threshold_to_graph(a, out.tau);
  return out;
}

// Structure extraction from point data under a distance-based edge rule.
inline ResolvedExtraction extract_from_points(const std::vector<std::vector<double>>& points,
                                              const ExtractionConfig& cfg, EdgeRule rule) {
  AffinityMatrix dist = proximity_matrix(points, cfg.metric, cfg.minkowski_lambda);
  ResolvedExtraction out{Graph{}, "proximity", ""};
  switch (rule) {
    case EdgeRule::knn:
      out.edge_rule = "knn";
      out.graph = knn_graph(dist, cfg.k_neighbors);
      break;
    case EdgeRule::eps:
      out.edge_rule = "eps";
      out.graph = eps_graph(dist, cfg.epsilon);
      break;
    case EdgeRule::raw_threshold: {
      // distance-born weights: 1/(1+d)
      AffinityMatrix w(dist.size());
      for (int i = 0; i < dist.size(); ++i)
        for (int j = 0; j < dist.size(); ++j)
          if (i != j) w(i, j) = 1.0 / (1.0 + dist(i, j));
      auto r = affinity_to_graph(w, cfg, "proximity");
      out.edge_rule = "threshold";
      out.tau = r.tau;
      out.graph = r.graph;
      break;
    }
    case EdgeRule::gaussian_threshold: {
      out.sigma = cfg.sigma > 0.0 ? cfg.sigma : median_pairwise_distance(dist);
      AffinityMatrix aff = gaussian_affinity(dist, out.sigma);
      auto r = affinity_to_graph(aff, cfg, "proximity");
      out.edge_rule = "gaussian";
      out.tau = r.tau;
      out.graph = r.graph;
      break;
    }
  }
  return out;
}

inline ResolvedExtraction extract_from_series(const TimeSeriesMatrix& ts,
                                              const ExtractionConfig& cfg) {
  if (cfg.method == "mi") return affinity_to_graph(mi_matrix(ts), cfg, "mi");
  if (cfg.method == "mle") return affinity_to_graph(esmbmle(ts, cfg), cfg, "mle");
  throw std::invalid_argument("extract_from_series: method must be mi or mle");
}

struct CmdiResult {
  ClusterLabels labels;
  EntropyReport report;
  Partition partition;
  ResolvedExtraction extraction;
  int merges = 0;
};

// End-to-end driver: extract structure, partition by (PK-)GDIMAOP, map labels.
inline CmdiResult cmdi_on_graph(const Graph& g, const std::optional<PriorKnowledge>& pk) {
  CmdiResult res;
  GdimaopResult gr = pk ? pk_gdimaop(g, *pk) : gdimaop(g);
  res.partition = gr.partition;
  res.merges = gr.merges;
  res.labels = map_to_labels(res.partition);
  res.report = evaluate_partition(g, res.partition);
  return res;
}

inline CmdiResult cmdi_from_points(const std::vector<std::vector<double>>& points,
                                   const ExtractionConfig& cfg, EdgeRule rule,
                                   const std::optional<PriorKnowledge>& pk = std::nullopt) {
  ResolvedExtraction ext = extract_from_points(points, cfg, rule);
  CmdiResult res = cmdi_on_graph(ext.graph, pk);
  res.extraction = std::move(ext);
  return res;
}

inline CmdiResult cmdi_from_series(const TimeSeriesMatrix& ts, const ExtractionConfig& cfg,
                                   const std::optional<PriorKnowledge>& pk = std::nullopt) {
  ResolvedExtraction ext = extract_from_series(ts, cfg);
  CmdiResult res = cmdi_on_graph(ext.graph, pk);
  res.extraction = std::move(ext);
  return res;
}

}  // namespace cmdi
