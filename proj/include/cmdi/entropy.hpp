#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "cmdi/graph.hpp"

namespace cmdi {

struct EntropyReport {
  double h1 = 0.0;
  double h2p = 0.0;
  double di = 0.0;
  double di_ratio = 0.0;
  int partition_size = 0;
  bool degenerate = false;  // h1 == 0, di_ratio forced to 0
};

// f(x) = -x log2 x on [0,1], f(0) = f(1) = 0.
inline double f_entropy(double x) {
  if (x < 0.0 || x > 1.0) throw std::domain_error("f_entropy: argument outside [0,1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x);
}

namespace detail {

// Degree/volume ratios can land a few ulps outside [0,1]; clamp before f.
inline double f_ratio(double num, double den) {
  if (den <= 0.0) return 0.0;
  return f_entropy(std::min(1.0, std::max(0.0, num / den)));
}

}  // namespace detail

// One-dimensional structural information, in bits. Edgeless graphs give 0.
inline double h1(const Graph& g) {
  if (g.volume() <= 0.0) return 0.0;
  double s = 0.0;
  for (int v = 0; v < g.num_vertices(); ++v)
    s += detail::f_ratio(g.weighted_degree(v), g.volume());
  return s;
}

// Two-dimensional structural information under a partition, in bits:
//   sum_j [ (vol_j/volG) * sum_i f(deg_i/vol_j) + (g_j/vol_j) * f(vol_j/volG) ]
inline double h2_partition(const Graph& g, const Partition& p) {
  if (p.block_of.size() != static_cast<std::size_t>(g.num_vertices()))
    throw std::invalid_argument("h2_partition: partition size mismatch");
  if (g.volume() <= 0.0) return 0.0;
  double s = 0.0;
  for (const auto& block : p.blocks) {
    auto [vol, cut] = g.block_volume_and_cut(block);
    if (vol <= 0.0) continue;  // all-isolated block contributes nothing
    double inner = 0.0;
    for (int v : block) inner += detail::f_ratio(g.weighted_degree(v), vol);
    s += vol / g.volume() * inner + cut / vol * detail::f_ratio(vol, g.volume());
  }
  return s;
}

// Per-block decoding-information term: -((vol_j - g_j)/volG) log2(vol_j/volG).
inline double block_di_term(double block_vol, double block_cut, double graph_vol) {
  if (block_vol <= 0.0) return 0.0;
  return -(block_vol - block_cut) / graph_vol * std::log2(block_vol / graph_vol);
}

// Information saved by the partition; equals h1 - h2_partition.
inline double decoding_info(const Graph& g, const Partition& p) {
  if (p.block_of.size() != static_cast<std::size_t>(g.num_vertices()))
    throw std::invalid_argument("decoding_info: partition size mismatch");
  if (g.volume() <= 0.0) return 0.0;
  double s = 0.0;
  for (const auto& block : p.blocks) {
    auto [vol, cut] = g.block_volume_and_cut(block);
    s += block_di_term(vol, cut, g.volume());
  }
  return s;
}

// Merge gain of blocks i,j: D_(i) + D_(j) - D_(i,j). Merging changes DI by -delta.
inline double merge_delta(const Graph& g, const Partition& p, int i, int j) {
  if (i == j) throw std::invalid_argument("merge_delta: i == j");
  if (i < 0 || j < 0 || i >= static_cast<int>(p.size()) || j >= static_cast<int>(p.size()))
    throw std::invalid_argument("merge_delta: block index out of range");
  auto [vi, gi] = g.block_volume_and_cut(p.blocks[i]);
  auto [vj, gj] = g.block_volume_and_cut(p.blocks[j]);
  double wij = 0.0;
  for (int v : p.blocks[i])
    for (const auto& [u, w] : g.neighbors(v))
      if (p.block_of[u] == j) wij += w;
  double volG = g.volume();
  return block_di_term(vi, gi, volG) + block_di_term(vj, gj, volG) -
         block_di_term(vi + vj, gi + gj - 2.0 * wij, volG);
}

inline double di_ratio(const Graph& g, const Partition& p, bool* degenerate = nullptr) {
  double h = h1(g);
  if (degenerate) *degenerate = (h <= 0.0);
  if (h <= 0.0) return 0.0;
  return decoding_info(g, p) / h;
}

inline EntropyReport evaluate_partition(const Graph& g, const Partition& p) {
  EntropyReport r;
  r.h1 = h1(g);
  r.h2p = h2_partition(g, p);
  r.di = decoding_info(g, p);
  r.partition_size = static_cast<int>(p.size());
  r.degenerate = (r.h1 <= 0.0);
  r.di_ratio = r.degenerate ? 0.0 : r.di / r.h1;
  return r;
}

// Exhaustive optimal-partition oracle: argmin over all set partitions of H2^P.
// Enumerates restricted growth strings; the first partition attaining the
// minimum (within 1e-12) wins, which is the lexicographically smallest
// canonical block encoding.
inline std::pair<Partition, double> brute_force_optimal_partition(const Graph& g) {
  int n = g.num_vertices();
  if (n > 12) throw std::invalid_argument("brute_force_optimal_partition: n > 12");
  if (n == 0) throw std::invalid_argument("brute_force_optimal_partition: empty graph");
  std::vector<int> rgs(n, 0), best_rgs(n, 0);
  double best_h2 = std::numeric_limits<double>::infinity();
  std::vector<int> maxval(n, 0);
  auto eval = [&]() {
    Partition p = Partition::from_labels(rgs);
    double h2 = h2_partition(g, p);
    if (h2 < best_h2 - 1e-12) {
      best_h2 = h2;
      best_rgs = rgs;
    }
  };
  // iterate all restricted growth strings
  while (true) {
    eval();
    int i = n - 1;
    while (i > 0) {
      int cap = maxval[i - 1] + 1;
      if (rgs[i] < cap) {
        ++rgs[i];
        maxval[i] = std::max(maxval[i - 1], rgs[i]);
        for (int k = i + 1; k < n; ++k) {
          rgs[k] = 0;
          maxval[k] = maxval[k - 1];
        }
        break;
      }
      --i;
    }
    if (i == 0) break;
  }
  Partition best = Partition::from_labels(best_rgs);
  return {best, h1(g) - best_h2};
}

}  // namespace cmdi
