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
#include <random>
#include <set>
#include <vector>

#include "core/constructions.hpp"
#include "core/transitivity.hpp"

using atg::FlagVariant;
using atg::FMatrix;
using atg::Geometry;
using atg::Graph;
using atg::ProjGen;
using atg::VertexPerm;

namespace {

// Size of the matrix group generated by gens, by breadth-first closure.
std::size_t closure_order(const atg::FieldCtx& f,
                          const std::vector<ProjGen>& gens) {
  std::set<FMatrix> seen;
  std::vector<FMatrix> stack;
  const FMatrix id = atg::mat_identity(static_cast<int>(gens[0].matrix.size()));
  seen.insert(id);
  stack.push_back(id);
  while (!stack.empty()) {
    const FMatrix m = std::move(stack.back());
    stack.pop_back();
    for (const auto& g : gens) {
      FMatrix next = atg::mat_mul(f, m, g.matrix);
      if (seen.insert(next).second) stack.push_back(std::move(next));
    }
  }
  return seen.size();
}

std::int64_t gl_order(int d, std::int64_t q) {
  std::int64_t qd = 1;
  for (int i = 0; i < d; ++i) qd *= q;
  std::int64_t res = 1, qi = 1;
  for (int i = 0; i < d; ++i) {
    res *= qd - qi;
    qi *= q;
  }
  return res;
}

Graph path3() { return Graph::from_edges(3, {{0, 1}, {1, 2}}); }

}  // namespace

TEST_CASE("gl_generators produce the full general linear group") {
  // (2,2): exactly the transvection and the swap.
  const auto g22 = atg::gl_generators(2, 2);
  REQUIRE(g22.size() == 2);
  CHECK(g22[0].matrix == FMatrix{{1, 1}, {0, 1}});
  CHECK(g22[1].matrix == FMatrix{{0, 1}, {1, 0}});

  for (auto [d, q] : std::vector<std::pair<int, std::int64_t>>{
           {2, 2}, {3, 2}, {2, 3}, {2, 4}, {3, 3}}) {
    CAPTURE(d);
    CAPTURE(q);
    const auto f = atg::make_field(q);
    const auto gens = atg::gl_generators(d, q);
    CHECK(closure_order(f, gens) == static_cast<std::size_t>(gl_order(d, q)));
  }
}

TEST_CASE("GL action is doubly transitive on points for d <= 4, q <= 4") {
  for (auto [d, q] : std::vector<std::pair<int, std::int64_t>>{
           {3, 2}, {3, 3}, {3, 4}, {4, 2}, {4, 3}, {4, 4}}) {
    CAPTURE(d);
    CAPTURE(q);
    const Geometry geom = atg::build_geometry(d, q);
    std::vector<VertexPerm> perms;
    for (const auto& gen : atg::gl_generators(d, q))
      perms.push_back(atg::induced_point_perm(gen, geom));
    CHECK(atg::orbit_count_on_pairs(static_cast<int>(geom.points.size()),
                                    perms) == 1);
  }
}

TEST_CASE("induced_flag_perm") {
  const Geometry geom = atg::build_geometry(3, 2);

  const ProjGen identity{atg::mat_identity(3)};
  const VertexPerm id_perm = atg::induced_flag_perm(identity, geom);
  for (std::size_t i = 0; i < id_perm.size(); ++i)
    CHECK(id_perm[i] == static_cast<int>(i));

  // Every generator is an automorphism of both adjacency variants.
  const Graph dc = atg::flag_graph(geom, FlagVariant::DegreeConsistent);
  const Graph as = atg::flag_graph(geom, FlagVariant::AsStated);
  for (const auto& gen : atg::gl_generators(3, 2)) {
    const VertexPerm p = atg::induced_flag_perm(gen, geom);
    CHECK(atg::is_automorphism(dc, p));
    CHECK(atg::is_automorphism(as, p));
  }

  // A singular matrix is rejected.
  FMatrix singular(3, std::vector<int>(3, 0));
  CHECK_THROWS_AS((void)atg::induced_flag_perm(ProjGen{singular}, geom),
                  atg::Error);
}

TEST_CASE("frobenius twist") {
  // Prime field: the twist is the identity.
  const Geometry g32 = atg::build_geometry(3, 2);
  const VertexPerm id = atg::frobenius_flag_perm(g32);
  for (std::size_t i = 0; i < id.size(); ++i)
    CHECK(id[i] == static_cast<int>(i));

  // Extension field: a genuine automorphism of both variants, and adding it
  // to the generator set keeps the single orbit.
  const Geometry g34 = atg::build_geometry(3, 4);
  const VertexPerm frob = atg::frobenius_flag_perm(g34);
  bool nontrivial = false;
  for (std::size_t i = 0; i < frob.size(); ++i)
    if (frob[i] != static_cast<int>(i)) nontrivial = true;
  CHECK(nontrivial);
  const Graph dc = atg::flag_graph(g34, FlagVariant::DegreeConsistent);
  const Graph as = atg::flag_graph(g34, FlagVariant::AsStated);
  CHECK(atg::is_automorphism(dc, frob));
  CHECK(atg::is_automorphism(as, frob));

  std::vector<VertexPerm> perms;
  for (const auto& gen : atg::gl_generators(3, 4))
    perms.push_back(atg::induced_flag_perm(gen, g34));
  perms.push_back(frob);
  const auto cert = atg::orbit_certificate(dc, perms);
  CHECK(cert.vertex_orbit_count == 1);
  CHECK(cert.arc_orbit_count == 1);
}

TEST_CASE("projective action kills scalars") {
  const Geometry geom = atg::build_geometry(3, 5);
  FMatrix twice = atg::mat_identity(3);
  for (int i = 0; i < 3; ++i) twice[i][i] = 2;
  const VertexPerm p = atg::induced_flag_perm(ProjGen{twice}, geom);
  for (std::size_t i = 0; i < p.size(); ++i)
    CHECK(p[i] == static_cast<int>(i));
}

TEST_CASE("hamming_generators") {
  const Graph h2 = atg::hamming2(2);
  const auto gens2 = atg::hamming_generators(2, h2);
  REQUIRE(gens2.size() == 3);
  const auto cert2 = atg::orbit_certificate(h2, gens2);
  CHECK(cert2.vertex_orbit_count == 1);
  CHECK(cert2.arc_orbit_count == 1);

  const Graph h3 = atg::hamming2(3);
  const auto gens3 = atg::hamming_generators(3, h3);
  const auto cert3 = atg::orbit_certificate(h3, gens3);
  CHECK(cert3.vertex_orbit_count == 1);
  CHECK(cert3.arc_orbit_count == 1);
  CHECK(atg::arcs(h3).size() == 36);

  // Coordinate swap applied twice is the identity.
  const VertexPerm& swap = gens3.back();
  for (int v = 0; v < h3.order(); ++v) CHECK(swap[swap[v]] == v);

  // Wrong graph shape is rejected.
  CHECK_THROWS_AS((void)atg::hamming_generators(2, h3), atg::Error);
}

TEST_CASE("orbit_certificate") {
  const Geometry geom = atg::build_geometry(3, 2);
  const Graph dc = atg::flag_graph(geom, FlagVariant::DegreeConsistent);
  std::vector<VertexPerm> perms;
  for (const auto& gen : atg::gl_generators(3, 2))
    perms.push_back(atg::induced_flag_perm(gen, geom));
  const auto cert = atg::orbit_certificate(dc, perms);
  CHECK(cert.vertex_orbit_count == 1);
  CHECK(cert.arc_orbit_count == 1);
  CHECK(cert.generators_used == 2);
  CHECK(cert.witness_checked);

  const Graph h4 = atg::hamming2(4);
  const auto cert4 = atg::orbit_certificate(h4, atg::hamming_generators(4, h4));
  CHECK(cert4.vertex_orbit_count == 1);
  CHECK(cert4.arc_orbit_count == 1);
  CHECK(atg::arcs(h4).size() == 96);

  // Identity only: nothing merges.
  const Graph p3 = path3();
  const VertexPerm identity{0, 1, 2};
  const auto cert_p3 = atg::orbit_certificate(p3, {identity});
  CHECK(cert_p3.vertex_orbit_count == 3);
  CHECK(cert_p3.arc_orbit_count == 4);

  // A non-automorphism is reported as such.
  const VertexPerm bad{1, 0, 2};
  CHECK_THROWS_AS((void)atg::orbit_certificate(p3, {bad}), atg::Error);
  try {
    (void)atg::orbit_certificate(p3, {bad});
  } catch (const atg::Error& e) {
    CHECK(e.status() == atg::Status::NotAnAutomorphism);
  }
}

TEST_CASE("orbit counts are independent of generator order") {
  const Graph h4 = atg::hamming2(4);
  auto gens = atg::hamming_generators(4, h4);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(gens.begin(), gens.end(), rng);
    const auto cert = atg::orbit_certificate(h4, gens);
    CHECK(cert.vertex_orbit_count == 1);
    CHECK(cert.arc_orbit_count == 1);
  }
}

TEST_CASE("brute_force_arc_transitive") {
  CHECK(atg::brute_force_arc_transitive(
      Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})));
  CHECK_FALSE(atg::brute_force_arc_transitive(path3()));
  CHECK(atg::brute_force_arc_transitive(
      atg::flag_graph(3, 2, FlagVariant::DegreeConsistent)));

  // Petersen is a classic arc-transitive graph.
  std::vector<std::pair<int, int>> pe;
  for (int i = 0; i < 5; ++i) {
    pe.emplace_back(i, (i + 1) % 5);
    pe.emplace_back(5 + i, 5 + (i + 2) % 5);
    pe.emplace_back(i, 5 + i);
  }
  CHECK(atg::brute_force_arc_transitive(Graph::from_edges(10, pe)));

  // Star: vertex orbits differ, so certainly not arc-transitive.
  CHECK_FALSE(atg::brute_force_arc_transitive(
      Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}})));

  // Triangular prism: regular and vertex-transitive, but triangle edges and
  // rung edges lie in different orbits, so the oracle must refuse.
  const Graph prism = Graph::from_edges(
      6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4},
          {2, 5}});
  CHECK(atg::regularity(prism).is_regular);
  CHECK_FALSE(atg::brute_force_arc_transitive(prism));

  // The default budget is meant to cover H(2,q) up to q = 10.
  CHECK(atg::brute_force_arc_transitive(atg::hamming2(10)));

  CHECK_THROWS_AS(
      (void)atg::brute_force_arc_transitive(atg::hamming2(2), /*budget=*/3),
      atg::Error);
  try {
    (void)atg::brute_force_arc_transitive(atg::hamming2(2), 3);
  } catch (const atg::Error& e) {
    CHECK(e.status() == atg::Status::BudgetExceeded);
  }
}

TEST_CASE("oracle agrees with orbit certification") {
  // Wherever the generated group certifies one arc orbit, the brute-force
  // oracle must confirm.
  {
    const Graph h5 = atg::hamming2(5);
    const auto cert = atg::orbit_certificate(h5, atg::hamming_generators(5, h5));
    REQUIRE(cert.arc_orbit_count == 1);
    CHECK(atg::brute_force_arc_transitive(h5));
  }
  {
    const Geometry geom = atg::build_geometry(3, 3);
    const Graph dc = atg::flag_graph(geom, FlagVariant::DegreeConsistent);
    std::vector<VertexPerm> perms;
    for (const auto& gen : atg::gl_generators(3, 3))
      perms.push_back(atg::induced_flag_perm(gen, geom));
    const auto cert = atg::orbit_certificate(dc, perms);
    REQUIRE(cert.arc_orbit_count == 1);
    CHECK(atg::brute_force_arc_transitive(dc));
  }
}
