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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "core/graphcore.hpp"

using atg::Graph;

namespace {

using Edges = std::vector<std::pair<int, int>>;

Graph cycle(int n) {
  Edges e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

Graph complete(int n) {
  Edges e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

Graph path(int n) {
  Edges e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

constexpr int kInf = 1 << 28;

// Naive O(n^3) distance oracle.
std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (int w : g.neighbors(v)) d[v][w] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

int oracle_diameter(const Graph& g) {
  int best = 0;
  for (const auto& row : floyd_warshall(g))
    for (int d : row) {
      if (d >= kInf) return -1;  // disconnected
      best = std::max(best, d);
    }
  return best;
}

// Independent girth oracle: for each edge, the shortest cycle through it is
// 1 + the shortest u-v path avoiding that edge.
int oracle_girth(const Graph& g) {
  int best = kInf;
  for (int u = 0; u < g.order(); ++u) {
    for (int v : g.neighbors(u)) {
      if (v < u) continue;
      // BFS from u to v without using edge (u,v).
      std::vector<int> dist(g.order(), -1);
      std::vector<int> queue{u};
      dist[u] = 0;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const int x = queue[head];
        for (int y : g.neighbors(x)) {
          if ((x == u && y == v) || (x == v && y == u)) continue;
          if (dist[y] < 0) {
            dist[y] = dist[x] + 1;
            queue.push_back(y);
          }
        }
      }
      if (dist[v] >= 0) best = std::min(best, dist[v] + 1);
    }
  }
  return best >= kInf ? -1 : best;  // -1: acyclic
}

void check_against_oracles(const Graph& g) {
  const int od = oracle_diameter(g);
  if (od < 0) {
    CHECK_THROWS_AS((void)atg::diameter(g), atg::Error);
  } else {
    CHECK(atg::diameter(g) == od);
  }
  const int og = oracle_girth(g);
  const auto girth = atg::girth(g);
  if (og < 0) {
    CHECK_FALSE(girth.has_value());
  } else {
    REQUIRE(girth.has_value());
    CHECK(*girth == og);
  }
}

}  // namespace

TEST_CASE("from_edges canonicalizes") {
  const Graph tri = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(tri.order() == 3);
  CHECK(tri.edge_count() == 3);

  const Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(c4.edge_count() == 4);
  CHECK(c4.degree(0) == 2);

  // Duplicate edges collapse, order of endpoints is irrelevant.
  const Graph dup = Graph::from_edges(3, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(dup.edge_count() == 1);

  CHECK_THROWS_AS((void)Graph::from_edges(3, {{0, 0}}), atg::Error);
  CHECK_THROWS_AS((void)Graph::from_edges(3, {{0, 3}}), atg::Error);
  try {
    (void)Graph::from_edges(3, {{1, 1}});
  } catch (const atg::Error& e) {
    CHECK(e.status() == atg::Status::SelfLoop);
  }
}

TEST_CASE("from_adjacency validates symmetry") {
  const Graph g = Graph::from_adjacency({{1, 2}, {0}, {0}});
  CHECK(g.edge_count() == 2);
  CHECK_THROWS_AS((void)Graph::from_adjacency({{1}, {}}), atg::Error);
  CHECK_THROWS_AS((void)Graph::from_adjacency({{0}}), atg::Error);
}

TEST_CASE("diameter") {
  CHECK(atg::diameter(cycle(4)) == 2);
  CHECK(atg::diameter(complete(5)) == 1);
  CHECK(atg::diameter(path(4)) == 3);
  CHECK(atg::diameter_at_most(cycle(4), 2));
  CHECK_FALSE(atg::diameter_at_most(path(4), 2));

  const Graph disconnected = Graph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS((void)atg::diameter(disconnected), atg::Error);
  try {
    (void)atg::diameter(disconnected);
  } catch (const atg::Error& e) {
    CHECK(e.status() == atg::Status::Disconnected);
  }
  CHECK_FALSE(atg::is_connected(disconnected));
  CHECK(atg::is_connected(cycle(5)));
}

TEST_CASE("girth") {
  CHECK(atg::girth(cycle(4)) == 4);
  CHECK(atg::girth(cycle(3)) == 3);
  CHECK(atg::girth(cycle(9)) == 9);
  CHECK(atg::girth(complete(5)) == 3);
  CHECK_FALSE(atg::girth(path(5)).has_value());  // forest: distinct report

  // Petersen graph: girth 5, diameter 2.
  Edges pe;
  for (int i = 0; i < 5; ++i) {
    pe.emplace_back(i, (i + 1) % 5);          // outer cycle
    pe.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    pe.emplace_back(i, 5 + i);                // spokes
  }
  const Graph petersen = Graph::from_edges(10, pe);
  CHECK(atg::girth(petersen) == 5);
  CHECK(atg::diameter(petersen) == 2);
}

TEST_CASE("regularity and arcs") {
  const auto r1 = atg::regularity(cycle(4));
  CHECK(r1.is_regular);
  CHECK(r1.degree == 2);

  const Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto r2 = atg::regularity(star);
  CHECK_FALSE(r2.is_regular);
  CHECK(r2.degree_multiset == std::vector<int>{3, 1, 1, 1});

  CHECK(atg::arcs(cycle(3)).size() == 6);
  CHECK(atg::arcs(cycle(4)).size() == 8);
  const auto a = atg::arcs(star);
  CHECK(a.size() == 6);
  CHECK(std::is_sorted(a.begin(), a.end()));
}

TEST_CASE("metrics agree with naive oracles on a small corpus") {
  std::vector<Graph> corpus;
  corpus.push_back(cycle(3));
  corpus.push_back(cycle(4));
  corpus.push_back(cycle(7));
  corpus.push_back(complete(5));
  corpus.push_back(path(6));
  corpus.push_back(Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}));
  corpus.push_back(Graph::from_edges(5, {{0, 1}, {2, 3}, {3, 4}, {2, 4}}));
  // Petersen
  Edges pe;
  for (int i = 0; i < 5; ++i) {
    pe.emplace_back(i, (i + 1) % 5);
    pe.emplace_back(5 + i, 5 + (i + 2) % 5);
    pe.emplace_back(i, 5 + i);
  }
  corpus.push_back(Graph::from_edges(10, pe));
  // 4-cube
  Edges qe;
  for (int v = 0; v < 16; ++v)
    for (int b = 0; b < 4; ++b)
      if (v < (v ^ (1 << b))) qe.emplace_back(v, v ^ (1 << b));
  corpus.push_back(Graph::from_edges(16, qe));

  for (const auto& g : corpus) check_against_oracles(g);
}

TEST_CASE("analyze bundles the metrics") {
  const auto c = atg::analyze(cycle(4));
  CHECK(c.order == 4);
  CHECK(c.is_regular);
  CHECK(c.degree == 2);
  CHECK(c.connected);
  CHECK(c.diameter == 2);
  CHECK(c.girth == 4);

  const auto f = atg::analyze(path(3));
  CHECK_FALSE(f.girth.has_value());
  CHECK_FALSE(f.is_regular);
}
