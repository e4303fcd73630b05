#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace cmdi {

struct Edge {
  int u;
  int v;
  double w;
};

// Immutable weighted undirected graph. Vertex ids are dense 0..n-1;
// each edge is stored once per unordered pair with u < v.
class Graph {
 public:
  Graph() = default;

  Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    std::unordered_set<std::int64_t> seen;
    edges_.reserve(edges.size());
    for (const Edge& e : edges) {
      int u = std::min(e.u, e.v);
      int v = std::max(e.u, e.v);
      if (u < 0 || v >= n_) throw std::invalid_argument("graph: vertex id out of range");
      if (u == v) throw std::invalid_argument("graph: self-loop");
      if (!(e.w > 0.0)) throw std::invalid_argument("graph: non-positive edge weight");
      std::int64_t key = static_cast<std::int64_t>(u) * n_ + v;
      if (!seen.insert(key).second)
        throw std::invalid_argument("graph: duplicate edge");
      edges_.push_back({u, v, e.w});
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
      return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    adj_.assign(n_, {});
    deg_.assign(n_, 0.0);
    for (const Edge& e : edges_) {
      adj_[e.u].emplace_back(e.v, e.w);
      adj_[e.v].emplace_back(e.u, e.w);
      deg_[e.u] += e.w;
      deg_[e.v] += e.w;
      volume_ += 2.0 * e.w;
    }
  }

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  double volume() const { return volume_; }

  double weighted_degree(int v) const {
    check_vertex(v);
    return deg_[v];
  }

  const std::vector<std::pair<int, double>>& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  // vol(V_j) and g_j of a vertex block.
  std::pair<double, double> block_volume_and_cut(const std::vector<int>& block) const {
    if (block.empty()) throw std::invalid_argument("block_volume_and_cut: empty block");
    std::unordered_set<int> in(block.begin(), block.end());
    double vol = 0.0, cut = 0.0;
    for (int v : block) {
      check_vertex(v);
      vol += deg_[v];
      for (const auto& [u, w] : adj_[v])
        if (!in.count(u)) cut += w;
    }
    return {vol, cut};
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("graph: vertex id out of range");
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, double>>> adj_;
  std::vector<double> deg_;
  double volume_ = 0.0;
};

// Disjoint non-empty blocks covering all vertices.
struct Partition {
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of;

  static Partition from_blocks(int n, std::vector<std::vector<int>> blocks) {
    Partition p;
    p.block_of.assign(n, -1);
    for (auto& b : blocks) {
      if (b.empty()) throw std::invalid_argument("partition: empty block");
      std::sort(b.begin(), b.end());
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      for (int v : blocks[j]) {
        if (v < 0 || v >= n) throw std::invalid_argument("partition: vertex id out of range");
        if (p.block_of[v] != -1) throw std::invalid_argument("partition: overlapping blocks");
        p.block_of[v] = static_cast<int>(j);
      }
    }
    for (int v = 0; v < n; ++v)
      if (p.block_of[v] == -1) throw std::invalid_argument("partition: uncovered vertex");
    p.blocks = std::move(blocks);
    return p;
  }

  static Partition from_labels(const std::vector<int>& labels) {
    std::map<int, std::vector<int>> groups;
    for (std::size_t v = 0; v < labels.size(); ++v)
      groups[labels[v]].push_back(static_cast<int>(v));
    std::vector<std::vector<int>> blocks;
    for (auto& [_, b] : groups) blocks.push_back(std::move(b));
    return from_blocks(static_cast<int>(labels.size()), std::move(blocks));
  }

  static Partition singletons(int n) {
    std::vector<std::vector<int>> blocks(n);
    for (int v = 0; v < n; ++v) blocks[v] = {v};
    return from_blocks(n, std::move(blocks));
  }

  static Partition whole(int n) {
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    return from_blocks(n, {all});
  }

  std::size_t size() const { return blocks.size(); }
};

// Edge-list CSV "u,v[,w]", '#' comments, blank lines ignored.
inline Graph load_graph(std::istream& in) {
  std::vector<Edge> edges;
  std::string line;
  int max_id = -1;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    long long u, v;
    double w = 1.0;
    if (!(ls >> u >> v))
      throw std::runtime_error("edge list parse error at line " + std::to_string(lineno));
    ls >> w;
    std::string rest;
    if (ls >> rest)
      throw std::runtime_error("edge list parse error at line " + std::to_string(lineno));
    if (u < 0 || v < 0)
      throw std::runtime_error("edge list: negative vertex id at line " + std::to_string(lineno));
    if (u == v)
      throw std::runtime_error("edge list: self-loop at line " + std::to_string(lineno));
    if (!(w > 0.0))
      throw std::runtime_error("edge list: non-positive weight at line " + std::to_string(lineno));
    edges.push_back({static_cast<int>(u), static_cast<int>(v), w});
    max_id = std::max(max_id, static_cast<int>(std::max(u, v)));
  }
  return Graph(max_id + 1, std::move(edges));
}

inline Graph load_graph(const std::string& text) {
  std::istringstream in(text);
  return load_graph(in);
}

inline void save_graph(const Graph& g, std::ostream& out) {
  out.precision(17);
  for (const Edge& e : g.edges()) out << e.u << ',' << e.v << ',' << e.w << '\n';
}

inline std::string save_graph(const Graph& g) {
  std::ostringstream out;
  save_graph(g, out);
  return out.str();
}

}  // namespace cmdi
