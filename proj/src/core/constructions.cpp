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

#include "core/constructions.hpp"

#include "core/exact.hpp"

namespace atg {

const char* variant_name(FlagVariant v) {
  return v == FlagVariant::AsStated ? "as-stated" : "degree-consistent";
}

Graph hamming2(std::int64_t q) {
  if (q < 2) fail(Status::ParameterTooSmall, "H(2,q) needs q >= 2");
  const int n = static_cast<int>(q * q);
  std::vector<std::vector<int>> adj(n);
  std::vector<std::string> labels(n);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      const int v = static_cast<int>(a * q + b);
      labels[v] = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      auto& list = adj[v];
      list.reserve(2 * (q - 1));
      for (int b2 = 0; b2 < q; ++b2)
        if (b2 != b) list.push_back(static_cast<int>(a * q + b2));
      for (int a2 = 0; a2 < q; ++a2)
        if (a2 != a) list.push_back(static_cast<int>(a2 * q + b));
    }
  }
  return Graph::from_adjacency(std::move(adj), std::move(labels));
}

Graph flag_graph(const Geometry& geom, FlagVariant variant) {
  const bool exclude_meet_point = (variant == FlagVariant::DegreeConsistent);
  const int n = static_cast<int>(geom.flags.size());
  std::vector<std::vector<int>> adj(n);
  for (int fid = 0; fid < n; ++fid) {
    const Flag& fl = geom.flags[fid];
    auto& list = adj[fid];
    // Walk the intersection point p over the flag's line, then all other
    // lines through p; each intersecting line appears for exactly one p.
    for (const int p : geom.line_to_points[fl.line_id]) {
      if (exclude_meet_point && p == fl.point_id) continue;
      for (const int other : geom.point_to_lines[p]) {
        if (other == fl.line_id) continue;
        for (const int t : geom.line_to_points[other]) {
          if (exclude_meet_point && t == p) continue;
          list.push_back(geom.flag_index(t, other));
        }
      }
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const Flag& fl : geom.flags) labels.push_back(flag_label(geom, fl));
  return Graph::from_adjacency(std::move(adj), std::move(labels));
}

Graph flag_graph(int d, std::int64_t q, FlagVariant variant) {
  return flag_graph(build_geometry(d, q), variant);
}

std::pair<mpz_class, mpz_class> predicted_params(int d, std::int64_t q) {
  if (d < 3) fail(Status::DimensionTooSmall, "flag graphs need d >= 3");
  if (q < 2) fail(Status::ParameterTooSmall, "flag graphs need q >= 2");
  const mpz_class qz(static_cast<long>(q));
  return {flag_order_exact(d, qz), flag_degree_exact(d, qz)};
}

std::string point_label(const ProjPoint& pt) {
  std::string s;
  for (std::size_t i = 0; i < pt.coords.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(pt.coords[i]);
  }
  return s;
}

std::string line_label(const ProjLine& ln) {
  std::string s;
  for (int r = 0; r < 2; ++r) {
    if (r) s += "|";
    for (std::size_t i = 0; i < ln.basis[r].size(); ++i) {
      if (i) s += ",";
      s += std::to_string(ln.basis[r][i]);
    }
  }
  return s;
}

std::string flag_label(const Geometry& geom, const Flag& fl) {
  return point_label(geom.points[fl.point_id]) + ";" +
         line_label(geom.lines[fl.line_id]);
}

}  // namespace atg
