#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmdi/entropy.hpp"
#include "cmdi/extraction.hpp"
#include "cmdi/gdimaop.hpp"
#include "cmdi/graph.hpp"

namespace cmdi {

using ordered_json = nlohmann::ordered_json;

inline std::vector<std::vector<double>> load_points_csv(std::istream& in) {
  std::vector<std::vector<double>> points;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw std::runtime_error("points csv: bad value at line " + std::to_string(lineno));
      }
    }
    if (!points.empty() && row.size() != points.front().size())
      throw std::runtime_error("points csv: ragged row at line " + std::to_string(lineno));
    points.push_back(std::move(row));
  }
  return points;
}

inline std::vector<std::vector<double>> load_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open points file: " + path);
  return load_points_csv(in);
}

// Time-series CSV: rows = time steps, columns = nodes.
inline TimeSeriesMatrix load_timeseries_csv(std::istream& in, SeriesKind kind = SeriesKind::spin) {
  auto rows = load_points_csv(in);
  if (rows.size() < 2) throw std::runtime_error("time-series csv: need at least 2 time steps");
  TimeSeriesMatrix ts;
  ts.steps = static_cast<int>(rows.size());
  ts.n = static_cast<int>(rows.front().size());
  ts.kind = kind;
  ts.values.assign(static_cast<std::size_t>(ts.n) * ts.steps, 0.0);
  for (int t = 0; t < ts.steps; ++t)
    for (int v = 0; v < ts.n; ++v) ts.at(v, t) = rows[t][v];
  ts.validate();
  return ts;
}

inline TimeSeriesMatrix load_timeseries_file(const std::string& path,
                                             SeriesKind kind = SeriesKind::spin) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open time-series file: " + path);
  return load_timeseries_csv(in, kind);
}

inline void save_timeseries_csv(const TimeSeriesMatrix& ts, std::ostream& out) {
  for (int t = 0; t < ts.steps; ++t) {
    for (int v = 0; v < ts.n; ++v) {
      if (v) out << ',';
      out << ts.at(v, t);
    }
    out << '\n';
  }
}

inline Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return load_graph(in);
}

inline void save_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file: " + path);
  save_graph(g, out);
}

// PK file: {"labels": [...]} with -1 for unassigned.
inline PriorKnowledge load_pk(std::istream& in) {
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("pk file: invalid json: ") + e.what());
  }
  if (!j.contains("labels") || !j["labels"].is_array())
    throw std::runtime_error("pk file: missing labels array");
  PriorKnowledge pk;
  for (const auto& v : j["labels"]) {
    if (!v.is_number_integer()) throw std::runtime_error("pk file: non-integer label");
    pk.labels.push_back(v.get<int>());
  }
  for (int l : pk.labels)
    if (l < kUnassigned) throw std::runtime_error("pk file: label below -1");
  return pk;
}

inline PriorKnowledge load_pk_file(const std::string& path, int expected_n = -1) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open pk file: " + path);
  PriorKnowledge pk = load_pk(in);
  if (expected_n >= 0 && static_cast<int>(pk.labels.size()) != expected_n)
    throw std::runtime_error("pk file: " + std::to_string(pk.labels.size()) +
                             " labels for a graph with " + std::to_string(expected_n) +
                             " vertices");
  return pk;
}

inline ordered_json labels_to_json(const ClusterLabels& labels) {
  ordered_json j;
  j["labels"] = labels.labels;
  j["k"] = labels.k;
  return j;
}

inline ordered_json report_to_json(const EntropyReport& r) {
  ordered_json j;
  j["h1"] = r.h1;
  j["h2p"] = r.h2p;
  j["di"] = r.di;
  j["di_r"] = r.di_ratio;
  j["L"] = r.partition_size;
  if (r.degenerate) j["degenerate"] = true;
  return j;
}

}  // namespace cmdi
