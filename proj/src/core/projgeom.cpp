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

#include "core/projgeom.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace atg {
namespace {

std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

void check_geometry_invariants(const Geometry& g) {
  const std::int64_t q = g.q();
  const std::int64_t n_points = (ipow(q, g.d) - 1) / (q - 1);
  const std::int64_t lines_per_point = (ipow(q, g.d - 1) - 1) / (q - 1);
  if (static_cast<std::int64_t>(g.points.size()) != n_points ||
      static_cast<std::int64_t>(g.flags.size()) != n_points * lines_per_point)
    fail(Status::BadArgument, "geometry invariant violated: counts");
  for (const auto& pts : g.line_to_points)
    if (static_cast<std::int64_t>(pts.size()) != q + 1)
      fail(Status::BadArgument, "geometry invariant violated: line size");
  for (const auto& lns : g.point_to_lines)
    if (static_cast<std::int64_t>(lns.size()) != lines_per_point)
      fail(Status::BadArgument, "geometry invariant violated: point degree");
}

}  // namespace

ProjPoint canonical_point(const FieldCtx& f, std::vector<int> coords) {
  int first = -1;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] != 0) {
      first = static_cast<int>(i);
      break;
    }
  }
  if (first < 0) fail(Status::BadArgument, "zero vector has no projective class");
  if (coords[first] != 1) {
    const int scale = f.inv(coords[first]);
    for (auto& c : coords) c = f.mul(c, scale);
  }
  return ProjPoint{std::move(coords)};
}

ProjLine line_through(const FieldCtx& f, const std::vector<int>& a,
                      const std::vector<int>& b) {
  FMatrix m{a, b};
  if (rref(f, m) != 2)
    fail(Status::BadArgument, "line_through needs two independent vectors");
  return ProjLine{{m[0], m[1]}};
}

bool point_on_line(const FieldCtx& f, const ProjPoint& pt, const ProjLine& ln) {
  FMatrix m{ln.basis[0], ln.basis[1], pt.coords};
  return rref(f, m) == 2;
}

std::optional<ProjPoint> intersect_lines(const FieldCtx& f, const ProjLine& a,
                                         const ProjLine& b) {
  FMatrix stacked{a.basis[0], a.basis[1], b.basis[0], b.basis[1]};
  const int r = rank_of(f, stacked);
  if (r == 2) fail(Status::IdenticalLines, "lines are identical");
  if (r == 4) return std::nullopt;  // skew

  // rank 3: the left null space of the stacked matrix is one-dimensional;
  // a null vector (x0..x3) gives the common point x0*a0 + x1*a1.
  const int d = static_cast<int>(a.basis[0].size());
  const FMatrix rows{a.basis[0], a.basis[1], b.basis[0], b.basis[1]};
  FMatrix t(d, std::vector<int>(4, 0));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < 4; ++j) t[i][j] = rows[j][i];
  const int tr = rref(f, t);
  // Pivot of each row of the RREF is its first nonzero entry; the single
  // remaining column is free.
  std::vector<int> pivot_col(tr, -1);
  std::vector<bool> is_pivot(4, false);
  for (int r2 = 0; r2 < tr; ++r2) {
    for (int c = 0; c < 4; ++c) {
      if (t[r2][c] != 0) {
        pivot_col[r2] = c;
        is_pivot[c] = true;
        break;
      }
    }
  }
  int free_col = -1;
  for (int c = 0; c < 4; ++c)
    if (!is_pivot[c]) free_col = c;
  std::vector<int> x(4, 0);
  x[free_col] = 1;
  for (int r2 = 0; r2 < tr; ++r2)
    x[pivot_col[r2]] = f.neg(t[r2][free_col]);

  // x0, x1 cannot both vanish (the basis rows of b are independent), so v
  // is a nonzero vector of both row spaces.
  std::vector<int> v(d, 0);
  for (int i = 0; i < d; ++i)
    v[i] = f.add(f.mul(x[0], rows[0][i]), f.mul(x[1], rows[1][i]));
  return canonical_point(f, std::move(v));
}

int Geometry::point_index(const ProjPoint& pt) const {
  auto it = std::lower_bound(points.begin(), points.end(), pt);
  if (it == points.end() || !(*it == pt)) return -1;
  return static_cast<int>(it - points.begin());
}

int Geometry::line_index(const ProjLine& ln) const {
  auto it = std::lower_bound(lines.begin(), lines.end(), ln);
  if (it == lines.end() || !(*it == ln)) return -1;
  return static_cast<int>(it - lines.begin());
}

int Geometry::flag_index(int point_id, int line_id) const {
  const auto& lns = point_to_lines[point_id];
  auto it = std::lower_bound(lns.begin(), lns.end(), line_id);
  if (it == lns.end() || *it != line_id) return -1;
  return flag_offset[point_id] + static_cast<int>(it - lns.begin());
}

const std::vector<int>& lines_through(const Geometry& g, int point_id) {
  if (point_id < 0 || point_id >= static_cast<int>(g.points.size()))
    fail(Status::IndexOutOfRange,
         "point id " + std::to_string(point_id) + " out of range");
  return g.point_to_lines[point_id];
}

Geometry build_geometry(int d, std::int64_t q) {
  if (d < 3) fail(Status::DimensionTooSmall, "PG(d-1,q) needs d >= 3 here");
  Geometry g{d, make_field(q)};
  const FieldCtx& f = g.field;

  // Canonical points: first nonzero coordinate is 1, remaining coordinates
  // free; generated per leading position, then sorted lexicographically.
  for (int lead = d - 1; lead >= 0; --lead) {
    const int tail = d - 1 - lead;
    std::vector<int> counter(tail, 0);
    while (true) {
      std::vector<int> coords(d, 0);
      coords[lead] = 1;
      for (int i = 0; i < tail; ++i) coords[lead + 1 + i] = counter[i];
      g.points.push_back(ProjPoint{std::move(coords)});
      int carry = tail - 1;
      while (carry >= 0 && ++counter[carry] == static_cast<int>(q)) {
        counter[carry] = 0;
        --carry;
      }
      if (carry < 0) break;
    }
  }
  std::sort(g.points.begin(), g.points.end());

  // Lines: canonical RREF spans of all point pairs, deduplicated.
  std::set<ProjLine> line_set;
  const int n_points = static_cast<int>(g.points.size());
  for (int i = 0; i < n_points; ++i)
    for (int j = i + 1; j < n_points; ++j)
      line_set.insert(line_through(f, g.points[i].coords, g.points[j].coords));
  g.lines.assign(line_set.begin(), line_set.end());

  // Incidence: the q+1 points of span{r0,r1} are r1 and r0 + t*r1.
  g.line_to_points.resize(g.lines.size());
  g.point_to_lines.resize(g.points.size());
  for (std::size_t lid = 0; lid < g.lines.size(); ++lid) {
    const auto& basis = g.lines[lid].basis;
    std::vector<int>& pts = g.line_to_points[lid];
    pts.reserve(q + 1);
    pts.push_back(g.point_index(canonical_point(f, basis[1])));
    for (int t = 0; t < static_cast<int>(q); ++t) {
      std::vector<int> v(d);
      for (int i = 0; i < d; ++i)
        v[i] = f.add(basis[0][i], f.mul(t, basis[1][i]));
      pts.push_back(g.point_index(canonical_point(f, std::move(v))));
    }
    std::sort(pts.begin(), pts.end());
    for (const int pid : pts)
      g.point_to_lines[pid].push_back(static_cast<int>(lid));
  }
  for (auto& lns : g.point_to_lines) std::sort(lns.begin(), lns.end());

  // Flags ordered by (point_id, line_id).
  g.flag_offset.resize(g.points.size() + 1, 0);
  for (std::size_t pid = 0; pid < g.points.size(); ++pid) {
    g.flag_offset[pid] = static_cast<int>(g.flags.size());
    for (const int lid : g.point_to_lines[pid])
      g.flags.push_back(Flag{static_cast<int>(pid), lid});
  }
  g.flag_offset[g.points.size()] = static_cast<int>(g.flags.size());

  check_geometry_invariants(g);
  return g;
}

}  // namespace atg
