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

#include "core/graphcore.hpp"

#include <algorithm>
#include <queue>

namespace atg {
namespace {

void check_vertex(int v, int n) {
  if (v < 0 || v >= n)
    fail(Status::IndexOutOfRange,
         "vertex " + std::to_string(v) + " out of range [0," +
             std::to_string(n) + ")");
}

}  // namespace

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) fail(Status::BadArgument, "negative vertex count");
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : edges) {
    check_vertex(u, n);
    check_vertex(v, n);
    if (u == v)
      fail(Status::SelfLoop, "self-loop at vertex " + std::to_string(u));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  Graph g;
  g.n_ = n;
  g.offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v)
    g.offsets_[v + 1] = g.offsets_[v] + static_cast<int>(adj[v].size());
  g.neighbors_.reserve(g.offsets_[n]);
  for (const auto& list : adj)
    g.neighbors_.insert(g.neighbors_.end(), list.begin(), list.end());
  return g;
}

Graph Graph::from_adjacency(std::vector<std::vector<int>> adj,
                            std::vector<std::string> labels) {
  const int n = static_cast<int>(adj.size());
  Graph g;
  g.n_ = n;
  g.offsets_.assign(n + 1, 0);
  std::size_t total = 0;
  for (int v = 0; v < n; ++v) {
    auto& list = adj[v];
    std::sort(list.begin(), list.end());
    for (std::size_t i = 0; i < list.size(); ++i) {
      check_vertex(list[i], n);
      if (list[i] == v)
        fail(Status::SelfLoop, "self-loop at vertex " + std::to_string(v));
      if (i > 0 && list[i] == list[i - 1])
        fail(Status::BadArgument, "duplicate neighbor in adjacency list");
    }
    total += list.size();
    g.offsets_[v + 1] = static_cast<int>(total);
  }
  g.neighbors_.reserve(total);
  for (const auto& list : adj)
    g.neighbors_.insert(g.neighbors_.end(), list.begin(), list.end());
  // Symmetry check: u in adj(v) must imply v in adj(u).
  for (int v = 0; v < n; ++v)
    for (const int u : g.neighbors(v))
      if (!g.adjacent(u, v))
        fail(Status::BadArgument, "adjacency lists are not symmetric");
  if (!labels.empty()) g.set_labels(std::move(labels));
  return g;
}

bool Graph::adjacent(int u, int v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) != n_)
    fail(Status::ShapeMismatch, "label count differs from vertex count");
  labels_ = std::move(labels);
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  check_vertex(source, g.order());
  std::vector<int> dist(g.order(), -1);
  std::queue<int> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (const int w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](int d) { return d < 0; });
}

int diameter(const Graph& g) {
  if (g.order() == 0) fail(Status::BadArgument, "diameter of the empty graph");
  int best = 0;
  for (int v = 0; v < g.order(); ++v) {
    const auto dist = bfs_distances(g, v);
    for (const int d : dist) {
      if (d < 0) fail(Status::Disconnected, "graph is disconnected");
      best = std::max(best, d);
    }
  }
  return best;
}

bool diameter_at_most(const Graph& g, int k) {
  for (int v = 0; v < g.order(); ++v) {
    const auto dist = bfs_distances(g, v);
    for (const int d : dist)
      if (d < 0 || d > k) return false;
  }
  return true;
}

std::optional<int> girth(const Graph& g) {
  // Per-root BFS; a non-tree edge (u,w) closes a cycle of length at most
  // dist[u]+dist[w]+1, and the minimum over all roots is exact.
  int best = -1;
  std::vector<int> dist(g.order());
  std::vector<int> parent(g.order());
  for (int root = 0; root < g.order(); ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<int> queue;
    dist[root] = 0;
    queue.push(root);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (const int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push(w);
        } else if (w != parent[u]) {
          const int len = dist[u] + dist[w] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;  // forest
  return best;
}

Regularity regularity(const Graph& g) {
  Regularity r;
  r.degree_multiset.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) r.degree_multiset.push_back(g.degree(v));
  std::sort(r.degree_multiset.rbegin(), r.degree_multiset.rend());
  r.is_regular =
      g.order() == 0 || r.degree_multiset.front() == r.degree_multiset.back();
  r.degree = g.order() == 0 ? 0 : r.degree_multiset.front();
  return r;
}

std::vector<std::pair<int, int>> arcs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  out.reserve(g.arc_count());
  for (int v = 0; v < g.order(); ++v)
    for (const int w : g.neighbors(v)) out.emplace_back(v, w);
  return out;
}

GraphCertificate analyze(const Graph& g) {
  GraphCertificate c;
  c.order = g.order();
  const Regularity r = regularity(g);
  c.is_regular = r.is_regular;
  c.degree = r.degree;
  c.degree_multiset = r.degree_multiset;
  c.connected = is_connected(g);
  if (c.connected && g.order() > 0) c.diameter = diameter(g);
  if (g.edge_count() > 0) c.girth = girth(g);
  return c;
}

}  // namespace atg
