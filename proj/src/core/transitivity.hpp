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

#ifndef ATGRAPH_CORE_TRANSITIVITY_HPP
#define ATGRAPH_CORE_TRANSITIVITY_HPP

#include <cstdint>
#include <vector>

#include "core/fmatrix.hpp"
#include "core/graphcore.hpp"
#include "core/projgeom.hpp"

namespace atg {

// Invertible d x d matrix over GF(q), acting projectively: on points by
// vector-matrix product plus canonicalization, on lines by basis transform
// plus row reduction, on flags componentwise.
struct ProjGen {
  FMatrix matrix;
};

// Fixed generating set of GL(d,q): the transvection I + E12, the d-cycle
// permutation matrix, and diag(w,1,...,1) for w the smallest primitive
// element (dropped for q = 2, where it degenerates to the identity).
std::vector<ProjGen> gl_generators(int d, std::int64_t q);

// A vertex permutation as an image array.
using VertexPerm = std::vector<int>;

VertexPerm induced_point_perm(const ProjGen& gen, const Geometry& geom);
VertexPerm induced_line_perm(const ProjGen& gen, const Geometry& geom);

// Action of a ProjGen on the flag set. Throws NonInvertible.
VertexPerm induced_flag_perm(const ProjGen& gen, const Geometry& geom);

// Coordinatewise p-th power (the Frobenius twist beyond the linear action).
// The identity permutation on prime fields.
VertexPerm frobenius_flag_perm(const Geometry& geom);

// Three automorphisms of H(2,q): alphabet transposition (0 1) on the first
// coordinate, alphabet q-cycle on the first coordinate, coordinate swap.
// Each is verified against the graph. Throws ShapeMismatch when the graph
// is not hamming2(q).
std::vector<VertexPerm> hamming_generators(std::int64_t q, const Graph& graph);

bool is_automorphism(const Graph& g, const VertexPerm& perm);

struct OrbitCertificate {
  int vertex_orbit_count = 0;
  std::int64_t arc_orbit_count = 0;
  int generators_used = 0;
  bool witness_checked = false;  // every generator verified as automorphism
};

// Orbit counts of the generated group on vertices and arcs, by breadth-first
// closure. Every generator is verified first; throws NotAnAutomorphism
// naming the offending generator. A count of 1 certifies transitivity; a
// larger count does not refute it (the generators may undershoot).
OrbitCertificate orbit_certificate(const Graph& graph,
                                   const std::vector<VertexPerm>& gens);

// Orbit count of the generated group on ordered pairs of distinct indices;
// 1 certifies double transitivity of the permutation action.
std::int64_t orbit_count_on_pairs(int n, const std::vector<VertexPerm>& gens);

inline constexpr int kDefaultBruteBudget = 120;

// Independent oracle: true iff for the fixed base arc (first arc in order)
// and every arc (u,v) some automorphism maps the base arc to (u,v), found by
// backtracking with degree- and distance-profile pruning. Automorphisms
// found along the way act as witnesses for whole orbits of arcs.
// Throws BudgetExceeded when the graph has more than vertex_budget vertices.
bool brute_force_arc_transitive(const Graph& graph,
                                int vertex_budget = kDefaultBruteBudget);

}  // namespace atg

#endif  // ATGRAPH_CORE_TRANSITIVITY_HPP
