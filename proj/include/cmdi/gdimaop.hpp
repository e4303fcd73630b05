#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "cmdi/entropy.hpp"
#include "cmdi/graph.hpp"

namespace cmdi {

constexpr int kUnassigned = -1;

struct PriorKnowledge {
  std::vector<int> labels;  // cluster id >= 0, or kUnassigned
};

struct ClusterLabels {
  std::vector<int> labels;  // contiguous 0..k-1
  int k = 0;
};

struct GdimaopResult {
  Partition partition;
  int merges = 0;
  bool edgeless = false;
};

namespace detail {

// Accepted-merge threshold; deltas in (-1e-12, 0) are treated as ties, not gains.
constexpr double kDeltaTol = -1e-12;

struct BlockState {
  double vol = 0.0;
  double cut = 0.0;
  int anchor = 0;  // smallest member id, fixed under merges into this block
  std::vector<int> members;
  std::unordered_map<int, double> link;  // neighbor block id -> crossing weight
  int gen = 0;
  bool alive = true;
};

struct Candidate {
  double delta;
  int a, b;          // anchors, a < b
  int ia, ib;        // block ids
  int ga, gb;        // generations at evaluation time
};

struct CandidateOrder {
  bool operator()(const Candidate& x, const Candidate& y) const {
    if (x.delta != y.delta) return x.delta > y.delta;  // min-heap on delta
    if (x.a != y.a) return x.a > y.a;
    return x.b > y.b;
  }
};

}  // namespace detail

// Greedy agglomeration: starting from the given blocks, repeatedly merge the
// edge-adjacent block pair with the most negative merge delta until no pair
// improves. Ties broken by smallest (anchor_i, anchor_j). Final blocks sorted
// by smallest member id.
inline GdimaopResult gdimaop_from(const Graph& g, const Partition& init) {
  using namespace detail;
  const int n = g.num_vertices();
  const double volG = g.volume();
  GdimaopResult out;
  if (volG <= 0.0) {
    out.partition = init;
    out.edgeless = true;
    return out;
  }

  std::vector<BlockState> blocks(init.size());
  std::vector<int> owner = init.block_of;
  for (std::size_t j = 0; j < init.size(); ++j) {
    blocks[j].members = init.blocks[j];
    blocks[j].anchor = init.blocks[j].front();
  }
  for (const Edge& e : g.edges()) {
    int a = owner[e.u], b = owner[e.v];
    blocks[a].vol += e.w;
    blocks[b].vol += e.w;
    if (a != b) {
      blocks[a].cut += e.w;
      blocks[b].cut += e.w;
      blocks[a].link[b] += e.w;
      blocks[b].link[a] += e.w;
    }
  }

  auto pair_delta = [&](const BlockState& x, const BlockState& y, double wxy) {
    return block_di_term(x.vol, x.cut, volG) + block_di_term(y.vol, y.cut, volG) -
           block_di_term(x.vol + y.vol, x.cut + y.cut - 2.0 * wxy, volG);
  };

  std::priority_queue<Candidate, std::vector<Candidate>, CandidateOrder> heap;
  auto push_pair = [&](int i, int j) {
    const BlockState& x = blocks[i];
    const BlockState& y = blocks[j];
    double d = pair_delta(x, y, x.link.at(j));
    if (d >= kDeltaTol) return;
    Candidate c;
    c.delta = d;
    c.a = std::min(x.anchor, y.anchor);
    c.b = std::max(x.anchor, y.anchor);
    c.ia = i;
    c.ib = j;
    c.ga = x.gen;
    c.gb = y.gen;
    heap.push(c);
  };

  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (const auto& [j, w] : blocks[i].link)
      if (static_cast<int>(i) < j) push_pair(static_cast<int>(i), j);

  while (!heap.empty()) {
    Candidate c = heap.top();
    heap.pop();
    BlockState& x = blocks[c.ia];
    BlockState& y = blocks[c.ib];
    if (!x.alive || !y.alive || x.gen != c.ga || y.gen != c.gb) continue;

    // merge ib into ia
    double wxy = x.link.at(c.ib);
    x.vol += y.vol;
    x.cut += y.cut - 2.0 * wxy;
    x.anchor = std::min(x.anchor, y.anchor);
    x.members.insert(x.members.end(), y.members.begin(), y.members.end());
    x.link.erase(c.ib);
    for (const auto& [o, w] : y.link) {
      if (o == c.ia) continue;
      x.link[o] += w;
      blocks[o].link.erase(c.ib);
      blocks[o].link[c.ia] += w;
    }
    y.alive = false;
    y.link.clear();
    y.members.clear();
    ++x.gen;
    ++out.merges;

    for (const auto& [o, w] : x.link) push_pair(c.ia, o);
  }

  std::vector<std::vector<int>> final_blocks;
  for (auto& b : blocks)
    if (b.alive) final_blocks.push_back(std::move(b.members));
  out.partition = Partition::from_blocks(n, std::move(final_blocks));
  return out;
}

inline GdimaopResult gdimaop(const Graph& g) {
  return gdimaop_from(g, Partition::singletons(g.num_vertices()));
}

// Prior-knowledge variant: PK clusters seed the initial blocks, unassigned
// vertices start as singletons.
inline GdimaopResult pk_gdimaop(const Graph& g, const PriorKnowledge& pk) {
  const int n = g.num_vertices();
  if (static_cast<int>(pk.labels.size()) != n)
    throw std::invalid_argument("pk_gdimaop: prior-knowledge length mismatch");
  std::unordered_map<int, std::vector<int>> groups;
  std::vector<std::vector<int>> blocks;
  for (int v = 0; v < n; ++v) {
    if (pk.labels[v] == kUnassigned)
      blocks.push_back({v});
    else
      groups[pk.labels[v]].push_back(v);
  }
  for (auto& [_, b] : groups) blocks.push_back(std::move(b));
  return gdimaop_from(g, Partition::from_blocks(n, std::move(blocks)));
}

// Block containing vertex 0 gets label 0, next smallest new block 1, ...
inline ClusterLabels map_to_labels(const Partition& p) {
  ClusterLabels out;
  out.labels.assign(p.block_of.size(), -1);
  // Partition::from_blocks already orders blocks by smallest member.
  for (std::size_t j = 0; j < p.blocks.size(); ++j)
    for (int v : p.blocks[j]) out.labels[v] = static_cast<int>(j);
  out.k = static_cast<int>(p.blocks.size());
  return out;
}

}  // namespace cmdi
