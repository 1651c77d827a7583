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

#ifndef ATGRAPH_CORE_PROJGEOM_HPP
#define ATGRAPH_CORE_PROJGEOM_HPP

#include <array>
#include <utility>
#include <cstdint>
#include <optional>
#include <vector>

#include "core/fmatrix.hpp"
#include "core/gf.hpp"

namespace atg {

// Point of PG(d-1,q): a length-d coordinate vector (element indices),
// canonicalized so the first nonzero coordinate equals 1.
struct ProjPoint {
  std::vector<int> coords;
  bool operator==(const ProjPoint&) const = default;
  auto operator<=>(const ProjPoint&) const = default;
};

// Line of PG(d-1,q): a rank-2 subspace, stored as its unique reduced
// row echelon basis (2 rows of length d).
struct ProjLine {
  std::array<std::vector<int>, 2> basis;
  bool operator==(const ProjLine&) const = default;
  auto operator<=>(const ProjLine&) const = default;
};

// Incident (point, line) pair, stored by enumeration indices.
struct Flag {
  int point_id = 0;
  int line_id = 0;
  bool operator==(const Flag&) const = default;
};

// Fully enumerated PG(d-1,q): points in coordinate-lexicographic order,
// lines in basis-lexicographic order, flags ordered by (point_id, line_id).
// Immutable after build_geometry; queries are pure.
struct Geometry {
  Geometry(int dim, FieldCtx f) : d(dim), field(std::move(f)) {}

  int d = 0;
  FieldCtx field;
  std::vector<ProjPoint> points;
  std::vector<ProjLine> lines;
  std::vector<Flag> flags;
  std::vector<std::vector<int>> point_to_lines;  // sorted line ids per point
  std::vector<std::vector<int>> line_to_points;  // sorted point ids per line
  std::vector<int> flag_offset;  // flags of point p start at flag_offset[p]

  std::int64_t q() const { return field.q(); }
  int point_index(const ProjPoint& pt) const;  // -1 when absent
  int line_index(const ProjLine& ln) const;    // -1 when absent
  int flag_index(int point_id, int line_id) const;  // -1 when not incident
};

// Canonicalizes a nonzero vector: scales so the first nonzero coord is 1.
// Throws BadArgument on the zero vector.
ProjPoint canonical_point(const FieldCtx& f, std::vector<int> coords);

// Line spanned by two distinct projective points (must be independent).
ProjLine line_through(const FieldCtx& f, const std::vector<int>& a,
                      const std::vector<int>& b);

// True iff the point's vector lies in the row space of the line's basis.
bool point_on_line(const FieldCtx& f, const ProjPoint& pt, const ProjLine& ln);

// Unique common point of two distinct lines, empty for skew lines (d >= 4).
// Throws IdenticalLines when both arguments describe the same line.
std::optional<ProjPoint> intersect_lines(const FieldCtx& f, const ProjLine& a,
                                         const ProjLine& b);

// Sorted ids of the (q^(d-1)-1)/(q-1) lines through a point.
// Throws IndexOutOfRange on a bad point id.
const std::vector<int>& lines_through(const Geometry& g, int point_id);

// Enumerates PG(d-1,q). Throws DimensionTooSmall (d < 3) or NotAPrimePower.
Geometry build_geometry(int d, std::int64_t q);

}  // namespace atg

#endif  // ATGRAPH_CORE_PROJGEOM_HPP
