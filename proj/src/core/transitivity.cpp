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

#include "core/transitivity.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace atg {
namespace {

void check_permutation(const VertexPerm& perm, int n) {
  if (static_cast<int>(perm.size()) != n)
    fail(Status::ShapeMismatch, "permutation length differs from order");
  std::vector<bool> seen(n, false);
  for (const int v : perm) {
    if (v < 0 || v >= n || seen[v])
      fail(Status::BadArgument, "image array is not a permutation");
    seen[v] = true;
  }
}

// Generic breadth-first orbit closure over an index space.
template <typename Apply>
std::int64_t count_orbits(std::int64_t size, int n_gens, Apply&& apply) {
  std::vector<bool> visited(size, false);
  std::int64_t orbits = 0;
  std::vector<std::int64_t> stack;
  for (std::int64_t start = 0; start < size; ++start) {
    if (visited[start]) continue;
    ++orbits;
    visited[start] = true;
    stack.assign(1, start);
    while (!stack.empty()) {
      const std::int64_t x = stack.back();
      stack.pop_back();
      for (int g = 0; g < n_gens; ++g) {
        const std::int64_t y = apply(g, x);
        if (!visited[y]) {
          visited[y] = true;
          stack.push_back(y);
        }
      }
    }
  }
  return orbits;
}

// Arc id of (u,v) in the CSR layout: position of v within neighbors(u).
std::int64_t arc_id(const Graph& g, const std::vector<std::int64_t>& offsets,
                    int u, int v) {
  const auto nb = g.neighbors(u);
  const auto it = std::lower_bound(nb.begin(), nb.end(), v);
  return offsets[u] + (it - nb.begin());
}

}  // namespace

std::vector<ProjGen> gl_generators(int d, std::int64_t q) {
  if (d < 2) fail(Status::BadArgument, "gl_generators needs d >= 2");
  const FieldCtx f = make_field(q);

  std::vector<ProjGen> gens;
  FMatrix transvection = mat_identity(d);
  transvection[0][1] = 1;
  gens.push_back(ProjGen{std::move(transvection)});

  FMatrix cycle(d, std::vector<int>(d, 0));
  for (int i = 0; i < d; ++i) cycle[i][(i + 1) % d] = 1;
  gens.push_back(ProjGen{std::move(cycle)});

  if (q > 2) {
    // Smallest element that generates the multiplicative group.
    int omega = -1;
    for (int a = 2; a < q; ++a) {
      if (f.mult_order(a) == q - 1) {
        omega = a;
        break;
      }
    }
    FMatrix diag = mat_identity(d);
    diag[0][0] = omega;
    gens.push_back(ProjGen{std::move(diag)});
  }
  return gens;
}

VertexPerm induced_point_perm(const ProjGen& gen, const Geometry& geom) {
  const FieldCtx& f = geom.field;
  if (!is_invertible(f, gen.matrix))
    fail(Status::NonInvertible, "generator matrix is singular");
  VertexPerm perm(geom.points.size());
  for (std::size_t pid = 0; pid < geom.points.size(); ++pid) {
    const auto image =
        canonical_point(f, vec_mat_mul(f, geom.points[pid].coords, gen.matrix));
    const int new_id = geom.point_index(image);
    if (new_id < 0) fail(Status::BadArgument, "point image not found");
    perm[pid] = new_id;
  }
  return perm;
}

VertexPerm induced_line_perm(const ProjGen& gen, const Geometry& geom) {
  const FieldCtx& f = geom.field;
  if (!is_invertible(f, gen.matrix))
    fail(Status::NonInvertible, "generator matrix is singular");
  VertexPerm perm(geom.lines.size());
  for (std::size_t lid = 0; lid < geom.lines.size(); ++lid) {
    const auto& basis = geom.lines[lid].basis;
    const ProjLine image = line_through(f, vec_mat_mul(f, basis[0], gen.matrix),
                                        vec_mat_mul(f, basis[1], gen.matrix));
    const int new_id = geom.line_index(image);
    if (new_id < 0) fail(Status::BadArgument, "line image not found");
    perm[lid] = new_id;
  }
  return perm;
}

VertexPerm induced_flag_perm(const ProjGen& gen, const Geometry& geom) {
  const VertexPerm pt_perm = induced_point_perm(gen, geom);
  const VertexPerm ln_perm = induced_line_perm(gen, geom);
  VertexPerm perm(geom.flags.size());
  for (std::size_t fid = 0; fid < geom.flags.size(); ++fid) {
    const Flag& fl = geom.flags[fid];
    const int image = geom.flag_index(pt_perm[fl.point_id], ln_perm[fl.line_id]);
    if (image < 0)
      fail(Status::BadArgument, "flag image is not incident");  // cannot happen
    perm[fid] = image;
  }
  check_permutation(perm, static_cast<int>(geom.flags.size()));
  return perm;
}

VertexPerm frobenius_flag_perm(const Geometry& geom) {
  const FieldCtx& f = geom.field;
  const auto frob = [&](const std::vector<int>& v) {
    std::vector<int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      out[i] = f.pow(v[i], f.p());
    return out;
  };
  VertexPerm pt_perm(geom.points.size());
  for (std::size_t pid = 0; pid < geom.points.size(); ++pid) {
    pt_perm[pid] =
        geom.point_index(canonical_point(f, frob(geom.points[pid].coords)));
  }
  VertexPerm ln_perm(geom.lines.size());
  for (std::size_t lid = 0; lid < geom.lines.size(); ++lid) {
    const auto& basis = geom.lines[lid].basis;
    ln_perm[lid] =
        geom.line_index(line_through(f, frob(basis[0]), frob(basis[1])));
  }
  VertexPerm perm(geom.flags.size());
  for (std::size_t fid = 0; fid < geom.flags.size(); ++fid) {
    const Flag& fl = geom.flags[fid];
    perm[fid] = geom.flag_index(pt_perm[fl.point_id], ln_perm[fl.line_id]);
  }
  check_permutation(perm, static_cast<int>(geom.flags.size()));
  return perm;
}

std::vector<VertexPerm> hamming_generators(std::int64_t q, const Graph& graph) {
  if (graph.order() != q * q)
    fail(Status::ShapeMismatch, "graph order is not q^2");
  const Regularity r = regularity(graph);
  if (!r.is_regular || r.degree != 2 * (q - 1))
    fail(Status::ShapeMismatch, "graph is not 2(q-1)-regular");

  const int n = graph.order();
  auto build = [&](auto&& image_of) {
    VertexPerm perm(n);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b)
        perm[a * q + b] = image_of(a, b);
    return perm;
  };
  std::vector<VertexPerm> gens;
  gens.push_back(build([&](std::int64_t a, std::int64_t b) {
    const std::int64_t a2 = a == 0 ? 1 : (a == 1 ? 0 : a);
    return static_cast<int>(a2 * q + b);
  }));
  gens.push_back(build([&](std::int64_t a, std::int64_t b) {
    return static_cast<int>((a + 1) % q * q + b);
  }));
  gens.push_back(build([&](std::int64_t a, std::int64_t b) {
    return static_cast<int>(b * q + a);
  }));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!is_automorphism(graph, gens[i]))
      fail(Status::NotAnAutomorphism,
           "hamming generator " + std::to_string(i) + " fails");
  }
  return gens;
}

bool is_automorphism(const Graph& g, const VertexPerm& perm) {
  check_permutation(perm, g.order());
  for (int u = 0; u < g.order(); ++u)
    for (const int v : g.neighbors(u))
      if (!g.adjacent(perm[u], perm[v])) return false;
  return true;
}

OrbitCertificate orbit_certificate(const Graph& graph,
                                   const std::vector<VertexPerm>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    check_permutation(gens[i], graph.order());
    for (int u = 0; u < graph.order(); ++u) {
      for (const int v : graph.neighbors(u)) {
        if (!graph.adjacent(gens[i][u], gens[i][v]))
          fail(Status::NotAnAutomorphism,
               "generator " + std::to_string(i) + " breaks edge (" +
                   std::to_string(u) + "," + std::to_string(v) + ")");
      }
    }
  }

  OrbitCertificate cert;
  cert.generators_used = static_cast<int>(gens.size());
  cert.witness_checked = true;
  cert.vertex_orbit_count = static_cast<int>(count_orbits(
      graph.order(), static_cast<int>(gens.size()),
      [&](int g, std::int64_t v) { return gens[g][v]; }));

  std::vector<std::int64_t> offsets(graph.order() + 1, 0);
  for (int v = 0; v < graph.order(); ++v)
    offsets[v + 1] = offsets[v] + graph.degree(v);
  const auto all_arcs = arcs(graph);
  cert.arc_orbit_count = count_orbits(
      static_cast<std::int64_t>(all_arcs.size()), static_cast<int>(gens.size()),
      [&](int g, std::int64_t a) {
        const auto [u, v] = all_arcs[a];
        return arc_id(graph, offsets, gens[g][u], gens[g][v]);
      });
  return cert;
}

std::int64_t orbit_count_on_pairs(int n, const std::vector<VertexPerm>& gens) {
  for (const auto& p : gens) check_permutation(p, n);
  // Index ordered pairs (i,j), i != j, as i*(n-1) + (j - (j > i)).
  const std::int64_t size = static_cast<std::int64_t>(n) * (n - 1);
  return count_orbits(size, static_cast<int>(gens.size()),
                      [&](int g, std::int64_t x) {
                        const int i = static_cast<int>(x / (n - 1));
                        int j = static_cast<int>(x % (n - 1));
                        if (j >= i) ++j;
                        const int gi = gens[g][i];
                        const int gj = gens[g][j];
                        return static_cast<std::int64_t>(gi) * (n - 1) + gj -
                               (gj > gi ? 1 : 0);
                      });
}

namespace {

// Backtracking search for an automorphism extending base -> target on the
// arc level; bitset adjacency keeps the consistency checks cheap.
class AutomorphismSearcher {
 public:
  explicit AutomorphismSearcher(const Graph& g) : g_(g), n_(g.order()) {
    words_ = (n_ + 63) / 64;
    rows_.assign(static_cast<std::size_t>(n_) * words_, 0);
    for (int v = 0; v < n_; ++v)
      for (const int w : g.neighbors(v))
        rows_[static_cast<std::size_t>(v) * words_ + w / 64] |= 1ull
                                                               << (w % 64);

    // Degree and distance-profile invariants for pruning.
    profile_.resize(n_);
    for (int v = 0; v < n_; ++v) {
      const auto dist = bfs_distances(g, v);
      std::vector<int> hist;
      for (const int d : dist) {
        if (d >= static_cast<int>(hist.size())) hist.resize(d + 1, 0);
        if (d >= 0) ++hist[d];
      }
      profile_[v] = std::move(hist);
    }
  }

  // Static assignment order: the base arc first, then most-constrained-first.
  void set_base(int u0, int v0) {
    order_.clear();
    order_.push_back(u0);
    order_.push_back(v0);
    std::vector<bool> placed(n_, false);
    placed[u0] = placed[v0] = true;
    std::vector<int> anchored(n_, 0);
    auto touch = [&](int x) {
      for (const int w : g_.neighbors(x)) ++anchored[w];
    };
    touch(u0);
    touch(v0);
    for (int step = 2; step < n_; ++step) {
      int best = -1;
      for (int v = 0; v < n_; ++v) {
        if (placed[v]) continue;
        if (best < 0 || anchored[v] > anchored[best]) best = v;
      }
      order_.push_back(best);
      placed[best] = true;
      touch(best);
    }
  }

  bool find(int u, int v, VertexPerm* out) {
    map_.assign(n_, -1);
    used_.assign(words_, 0);
    if (!assign(0, u) || !assign(1, v)) return false;
    if (search(2)) {
      if (out) *out = map_;
      return true;
    }
    return false;
  }

 private:
  bool compatible(int x, int y) const {
    return g_.degree(x) == g_.degree(y) && profile_[x] == profile_[y];
  }

  bool assign(int depth, int y) {
    const int x = order_[depth];
    if (!compatible(x, y)) return false;
    if (used_[y / 64] >> (y % 64) & 1) return false;
    // Consistency against every already-mapped vertex.
    for (int t = 0; t < depth; ++t) {
      const int o = order_[t];
      const bool adj_src = adj(x, o);
      if (adj_src != adj(y, map_[o])) return false;
    }
    map_[x] = y;
    used_[y / 64] |= 1ull << (y % 64);
    return true;
  }

  bool adj(int a, int b) const {
    return rows_[static_cast<std::size_t>(a) * words_ + b / 64] >> (b % 64) & 1;
  }

  bool search(int depth) {
    if (depth == n_) return true;
    const int x = order_[depth];
    // Candidate images: intersect neighbor rows of mapped anchors.
    std::vector<std::uint64_t> cand(words_, ~0ull);
    if (n_ % 64) cand[words_ - 1] = (1ull << (n_ % 64)) - 1;
    for (int w = 0; w < words_; ++w) cand[w] &= ~used_[w];
    for (int t = 0; t < depth; ++t) {
      const int o = order_[t];
      const std::uint64_t* row =
          &rows_[static_cast<std::size_t>(map_[o]) * words_];
      if (adj(x, o))
        for (int w = 0; w < words_; ++w) cand[w] &= row[w];
      else
        for (int w = 0; w < words_; ++w) cand[w] &= ~row[w];
    }
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bits = cand[w];
      while (bits) {
        const int y = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        if (!compatible(x, y)) continue;
        map_[x] = y;
        used_[y / 64] |= 1ull << (y % 64);
        if (search(depth + 1)) return true;
        used_[y / 64] &= ~(1ull << (y % 64));
        map_[x] = -1;
      }
    }
    return false;
  }

  const Graph& g_;
  int n_;
  int words_;
  std::vector<std::uint64_t> rows_;
  std::vector<std::vector<int>> profile_;
  std::vector<int> order_;
  VertexPerm map_;
  std::vector<std::uint64_t> used_;
};

}  // namespace

bool brute_force_arc_transitive(const Graph& graph, int vertex_budget) {
  if (graph.order() > vertex_budget)
    fail(Status::BudgetExceeded,
         "order " + std::to_string(graph.order()) + " exceeds budget " +
             std::to_string(vertex_budget));
  const auto all_arcs = arcs(graph);
  if (all_arcs.empty()) return true;  // vacuous

  std::vector<std::int64_t> offsets(graph.order() + 1, 0);
  for (int v = 0; v < graph.order(); ++v)
    offsets[v + 1] = offsets[v] + graph.degree(v);

  const auto [u0, v0] = all_arcs.front();
  AutomorphismSearcher searcher(graph);
  searcher.set_base(u0, v0);

  // Arcs already witnessed: the orbit of the base arc under the
  // automorphisms found so far (compositions are witnesses too).
  std::vector<VertexPerm> found;
  std::vector<bool> reached(all_arcs.size(), false);
  auto recompute_closure = [&] {
    std::fill(reached.begin(), reached.end(), false);
    std::vector<std::int64_t> stack{0};  // base arc has id 0
    reached[0] = true;
    while (!stack.empty()) {
      const std::int64_t a = stack.back();
      stack.pop_back();
      for (const auto& perm : found) {
        const auto [au, av] = all_arcs[a];
        const std::int64_t b = arc_id(graph, offsets, perm[au], perm[av]);
        if (!reached[b]) {
          reached[b] = true;
          stack.push_back(b);
        }
      }
    }
  };
  recompute_closure();

  for (std::size_t a = 0; a < all_arcs.size(); ++a) {
    if (reached[a]) continue;
    VertexPerm witness;
    if (!searcher.find(all_arcs[a].first, all_arcs[a].second, &witness))
      return false;
    found.push_back(std::move(witness));
    recompute_closure();
  }
  return true;
}

}  // namespace atg
