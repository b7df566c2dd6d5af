/*
 * Copyright 2026 The gtcent Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#ifndef GTCENT_GRAPH_HPP_
#define GTCENT_GRAPH_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gtcent/coalition.hpp"
#include "gtcent/errors.hpp"

namespace gtcent {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Arc {
  NodeId to;
  double weight;
};

struct Edge {
  NodeId u;
  NodeId v;
  double weight = 1.0;
};

// Immutable weighted graph over dense node ids 0..n-1. Undirected graphs
// store each edge as two arcs of equal weight.
class Graph {
 public:
  Graph() = default;

  // Builds a graph; throws InvalidInput on self-loops, out-of-range ids,
  // non-positive weights, or conflicting duplicate edges.
  Graph(int n, const std::vector<Edge>& edges, bool directed,
        std::vector<std::string> labels = {})
      : n_(n), directed_(directed), out_(n), in_(n) {
    require(n >= 0, "node count must be non-negative");
    if (labels.empty()) {
      labels.reserve(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    }
    require(static_cast<int>(labels.size()) == n,
            "label count does not match node count");
    labels_ = std::move(labels);
    for (int i = 0; i < n; ++i) {
      auto [it, fresh] = index_.emplace(labels_[i], i);
      require(fresh, "duplicate node label '" + labels_[i] + "'");
    }
    std::map<std::pair<int, int>, double> seen;
    for (const Edge& e : edges) {
      require(e.u >= 0 && e.u < n && e.v >= 0 && e.v < n,
              "edge endpoint out of range");
      require(e.u != e.v, "self-loop on node '" + labels_[e.u] + "'");
      require(std::isfinite(e.weight) && e.weight > 0.0,
              "edge weights must be positive and finite");
      auto key = directed ? std::make_pair(e.u, e.v)
                          : std::make_pair(std::min(e.u, e.v),
                                           std::max(e.u, e.v));
      auto found = seen.find(key);
      if (found != seen.end()) {
        require(found->second == e.weight,
                "conflicting weights for repeated edge " + labels_[e.u] +
                    "-" + labels_[e.v]);
        continue;
      }
      seen.emplace(key, e.weight);
      edges_.push_back({key.first, key.second, e.weight});
      out_[key.first].push_back({key.second, e.weight});
      in_[key.second].push_back({key.first, e.weight});
      if (!directed) {
        out_[key.second].push_back({key.first, e.weight});
        in_[key.first].push_back({key.second, e.weight});
      }
      if (e.weight != 1.0) unit_weights_ = false;
    }
    for (int v = 0; v < n; ++v) {
      auto by_target = [](const Arc& a, const Arc& b) { return a.to < b.to; };
      std::sort(out_[v].begin(), out_[v].end(), by_target);
      std::sort(in_[v].begin(), in_[v].end(), by_target);
    }
  }

  int num_nodes() const { return n_; }
  // Undirected edges count once.
  std::size_t num_edges() const { return edges_.size(); }
  bool directed() const { return directed_; }
  bool unit_weights() const { return unit_weights_; }

  const std::vector<Arc>& out_arcs(NodeId v) const { return out_.at(check(v)); }
  const std::vector<Arc>& in_arcs(NodeId v) const { return in_.at(check(v)); }
  const std::vector<Edge>& edges() const { return edges_; }

  const std::string& label(NodeId v) const { return labels_.at(check(v)); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<NodeId> find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  NodeId id(const std::string& label) const {
    auto v = find(label);
    require(v.has_value(), "unknown node '" + label + "'");
    return *v;
  }

  bool has_arc(NodeId u, NodeId v) const { return arc_weight(u, v) > 0.0; }
  // Weight of arc u->v, or 0 when absent.
  double arc_weight(NodeId u, NodeId v) const {
    const auto& arcs = out_arcs(u);
    auto it = std::lower_bound(
        arcs.begin(), arcs.end(), v,
        [](const Arc& a, NodeId x) { return a.to < x; });
    return (it != arcs.end() && it->to == v) ? it->weight : 0.0;
  }

  // Same nodes and labels, arcs reversed.
  Graph reversed() const {
    if (!directed_) return *this;
    std::vector<Edge> rev;
    rev.reserve(edges_.size());
    for (const Edge& e : edges_) rev.push_back({e.v, e.u, e.weight});
    return Graph(n_, rev, true, labels_);
  }

  // Same nodes with every arc read as an undirected edge.
  Graph undirected_view() const {
    if (!directed_) return *this;
    std::map<std::pair<int, int>, double> merged;
    for (const Edge& e : edges_) {
      auto key = std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v));
      auto it = merged.find(key);
      if (it == merged.end()) {
        merged.emplace(key, e.weight);
      } else {
        it->second = std::min(it->second, e.weight);
      }
    }
    std::vector<Edge> es;
    for (const auto& [key, w] : merged) es.push_back({key.first, key.second, w});
    return Graph(n_, es, false, labels_);
  }

 private:
  std::size_t check(NodeId v) const {
    require(v >= 0 && v < n_, "unknown node id " + std::to_string(v));
    return static_cast<std::size_t>(v);
  }

  int n_ = 0;
  bool directed_ = false;
  bool unit_weights_ = true;
  std::vector<std::vector<Arc>> out_;
  std::vector<std::vector<Arc>> in_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
};

// Convenience constructor from labelled edges; nodes appear in first-seen
// order.
inline Graph graph_from_labels(
    const std::vector<std::tuple<std::string, std::string, double>>& edges,
    bool directed, const std::vector<std::string>& extra_nodes = {}) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> ids;
  auto intern = [&](const std::string& s) {
    auto [it, fresh] = ids.emplace(s, static_cast<int>(labels.size()));
    if (fresh) labels.push_back(s);
    return it->second;
  };
  for (const auto& node : extra_nodes) intern(node);
  std::vector<Edge> es;
  for (const auto& [u, v, w] : edges) {
    const int a = intern(u);
    const int b = intern(v);
    es.push_back({a, b, w});
  }
  return Graph(static_cast<int>(labels.size()), es, directed, labels);
}

inline Graph graph_from_labels(
    const std::vector<std::pair<std::string, std::string>>& edges,
    bool directed, const std::vector<std::string>& extra_nodes = {}) {
  std::vector<std::tuple<std::string, std::string, double>> weighted;
  for (const auto& [u, v] : edges) weighted.emplace_back(u, v, 1.0);
  return graph_from_labels(weighted, directed, extra_nodes);
}

}  // namespace gtcent

#endif  // GTCENT_GRAPH_HPP_
