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

#ifndef ATGRAPH_CORE_CONSTRUCTIONS_HPP
#define ATGRAPH_CORE_CONSTRUCTIONS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

#include "core/graphcore.hpp"
#include "core/projgeom.hpp"

namespace atg {

// Adjacency rule for the projective flag graph. Two flags (s,L), (t,N) with
// distinct intersecting lines and common point p are adjacent
//   - LinesIntersect: always (adjacency depends on the lines only);
//   - DegreeConsistent: only when s != p and t != p, which is the variant
//     whose degree equals q^3(q^(d-2)-1)/(q-1).
// DegreeConsistent adjacency is a subset of LinesIntersect adjacency.
enum class FlagVariant {
  AsStated,          // "lines intersect" rule
  DegreeConsistent,  // excludes flags standing on the intersection point
};

const char* variant_name(FlagVariant v);

// Hamming graph H(2,q) on Z_q x Z_q, adjacency = differ in one coordinate.
// Vertices are labeled "(a,b)" and indexed a*q + b. Any integer q >= 2.
// Throws ParameterTooSmall.
Graph hamming2(std::int64_t q);

// Projective flag graph on the flags of PG(d-1,q). Vertex order equals the
// flag enumeration order of the Geometry, so output is reproducible.
Graph flag_graph(const Geometry& geom, FlagVariant variant);
Graph flag_graph(int d, std::int64_t q, FlagVariant variant);

// Exact (order, degree) predicted for the degree-consistent flag graph.
std::pair<mpz_class, mpz_class> predicted_params(int d, std::int64_t q);

// Label helpers shared with the serialization layer.
std::string point_label(const ProjPoint& pt);
std::string line_label(const ProjLine& ln);
std::string flag_label(const Geometry& geom, const Flag& fl);

}  // namespace atg

#endif  // ATGRAPH_CORE_CONSTRUCTIONS_HPP
