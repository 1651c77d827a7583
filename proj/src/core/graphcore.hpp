// Copyright 2026 The atgraph authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ATGRAPH_CORE_GRAPHCORE_HPP
#define ATGRAPH_CORE_GRAPHCORE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "core/status.hpp"

namespace atg {

// Immutable simple undirected graph in CSR form: sorted, duplicate-free
// adjacency lists, symmetric by construction. Safe to share across threads.
class Graph {
 public:
  // Canonical graph from an unordered edge list; duplicates collapse.
  // Throws SelfLoop / IndexOutOfRange.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  // Adjacency lists that are already per-vertex complete (each arc listed at
  // its source). Lists get sorted here; symmetry and simplicity are verified.
  static Graph from_adjacency(std::vector<std::vector<int>> adj,
                              std::vector<std::string> labels = {});

  int order() const { return n_; }
  std::int64_t edge_count() const { return arc_count() / 2; }
  std::int64_t arc_count() const {
    return static_cast<std::int64_t>(neighbors_.size());
  }

  std::span<const int> neighbors(int v) const {
    return {neighbors_.data() + offsets_[v],
            static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
  }
  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(int u, int v) const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

 private:
  Graph() = default;

  int n_ = 0;
  std::vector<int> offsets_;    // length n+1
  std::vector<int> neighbors_;  // concatenated sorted adjacency lists
  std::vector<std::string> labels_;
};

bool is_connected(const Graph& g);

// Max BFS eccentricity. Throws Disconnected (never reports a sentinel).
int diameter(const Graph& g);

// Early-exit predicate: true iff every eccentricity is <= k.
bool diameter_at_most(const Graph& g, int k);

// Shortest cycle length, or nullopt for forests (reported distinctly).
std::optional<int> girth(const Graph& g);

struct Regularity {
  bool is_regular = false;
  int degree = 0;                  // meaningful when is_regular
  std::vector<int> degree_multiset;  // sorted descending
};
Regularity regularity(const Graph& g);

// All 2m arcs, sorted by (source, target).
std::vector<std::pair<int, int>> arcs(const Graph& g);

// Single-source BFS distances; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

struct GraphCertificate {
  int order = 0;
  bool is_regular = false;
  int degree = 0;
  std::vector<int> degree_multiset;
  bool connected = false;
  std::optional<int> diameter;  // absent when disconnected
  std::optional<int> girth;     // absent when acyclic
};
GraphCertificate analyze(const Graph& g);

}  // namespace atg

#endif  // ATGRAPH_CORE_GRAPHCORE_HPP
