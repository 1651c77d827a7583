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

#include "core/report.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <sstream>

#include "core/exact.hpp"

namespace atg {
namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

std::int64_t to_i64_checked(const mpz_class& v) {
  if (!v.fits_slong_p())
    fail(Status::BadArgument, "value exceeds 64-bit range");
  return v.get_si();
}

// Shared tail of every certification: metrics, orbit closure, oracle.
Certificate certify_graph(Certificate cert, const Graph& graph,
                          const std::vector<VertexPerm>& generators,
                          const CertifyOptions& opts) {
  cert.budget = opts.budget;

  auto t0 = Clock::now();
  const GraphCertificate metrics = analyze(graph);
  cert.order = metrics.order;
  cert.regular = metrics.is_regular;
  cert.degree = metrics.degree;
  cert.connected = metrics.connected;
  cert.diameter = metrics.diameter;
  cert.girth = metrics.girth;
  cert.timing_ms.emplace_back("metrics", ms_since(t0));

  cert.match = cert.regular && cert.predicted_order == cert.order &&
               cert.predicted_degree == cert.degree;

  const bool run_orbit =
      opts.mode == CertMode::Orbit || opts.mode == CertMode::Both;
  const bool run_brute =
      opts.mode == CertMode::Brute || opts.mode == CertMode::Both;

  if (run_orbit) {
    t0 = Clock::now();
    cert.orbit = orbit_certificate(graph, generators);
    cert.timing_ms.emplace_back("orbit", ms_since(t0));
  }
  if (run_brute) {
    t0 = Clock::now();
    cert.brute_arc_transitive = brute_force_arc_transitive(graph, opts.budget);
    cert.timing_ms.emplace_back("brute", ms_since(t0));
  }

  const bool oracle_ok = cert.brute_arc_transitive.value_or(false);
  // The oracle proves arc-transitivity; on a connected graph with edges that
  // covers vertex-transitivity as well.
  cert.vertex_transitive =
      (cert.orbit && cert.orbit->vertex_orbit_count == 1)
          ? Evidence::GroupCertified
          : (oracle_ok ? Evidence::OracleCertified : Evidence::Unverified);
  cert.arc_transitive = (cert.orbit && cert.orbit->arc_orbit_count == 1)
                            ? Evidence::GroupCertified
                            : (oracle_ok ? Evidence::OracleCertified
                                         : Evidence::Unverified);

  const bool claims_girth3 = cert.family == "flag_graph";
  cert.ok = cert.match && cert.connected && cert.diameter == 2 &&
            (!claims_girth3 || cert.girth == 3) &&
            cert.vertex_transitive != Evidence::Unverified &&
            cert.arc_transitive != Evidence::Unverified;
  return cert;
}

ordered_json evidence_json(Evidence e) { return evidence_name(e); }

}  // namespace

const char* evidence_name(Evidence e) {
  switch (e) {
    case Evidence::GroupCertified: return "group-certified";
    case Evidence::OracleCertified: return "oracle-certified";
    case Evidence::Unverified: return "unverified";
  }
  return "unverified";
}

Certificate certify_hamming(std::int64_t q, const CertifyOptions& opts) {
  Certificate cert;
  cert.family = "hamming2";
  cert.q = q;
  cert.predicted_order = mpz_class(static_cast<long>(q)) * q;
  cert.predicted_degree = 2 * (mpz_class(static_cast<long>(q)) - 1);

  const auto t0 = Clock::now();
  const Graph graph = hamming2(q);
  const auto generators = hamming_generators(q, graph);
  cert.timing_ms.emplace_back("construct", ms_since(t0));
  return certify_graph(std::move(cert), graph, generators, opts);
}

Certificate certify_flag(int d, std::int64_t q, FlagVariant variant,
                         const CertifyOptions& opts) {
  Certificate cert;
  cert.family = "flag_graph";
  cert.d = d;
  cert.q = q;
  cert.variant = variant;
  const auto [order, degree] = predicted_params(d, q);
  cert.predicted_order = order;
  cert.predicted_degree = degree;

  const auto t0 = Clock::now();
  const Geometry geom = build_geometry(d, q);
  const Graph graph = flag_graph(geom, variant);
  std::vector<VertexPerm> generators;
  for (const auto& gen : gl_generators(d, q))
    generators.push_back(induced_flag_perm(gen, geom));
  if (opts.include_frobenius && geom.field.k() > 1)
    generators.push_back(frobenius_flag_perm(geom));
  cert.timing_ms.emplace_back("construct", ms_since(t0));
  return certify_graph(std::move(cert), graph, generators, opts);
}

Certificate certify_bundle(const GraphBundle& bundle,
                           const CertifyOptions& opts) {
  // Rebuild the declared construction and insist the file agrees with it.
  GraphBundle rebuilt =
      bundle.family == "hamming2"
          ? make_hamming_bundle(bundle.q)
          : make_flag_bundle(bundle.d, bundle.q,
                             bundle.variant.value_or(
                                 FlagVariant::DegreeConsistent));
  const Graph& a = bundle.graph;
  const Graph& b = rebuilt.graph;
  bool same = a.order() == b.order() && a.arc_count() == b.arc_count();
  for (int v = 0; same && v < a.order(); ++v) {
    const auto na = a.neighbors(v);
    const auto nb = b.neighbors(v);
    same = std::equal(na.begin(), na.end(), nb.begin(), nb.end());
  }
  if (!same)
    fail(Status::ParseError,
         "edge list does not match the construction in its header");
  if (bundle.family == "hamming2") return certify_hamming(bundle.q, opts);
  return certify_flag(bundle.d, bundle.q,
                      bundle.variant.value_or(FlagVariant::DegreeConsistent),
                      opts);
}

std::string certificate_json(const Certificate& cert, bool include_timing) {
  ordered_json j;
  j["tool_version"] = kToolVersion;
  j["family"] = cert.family;
  ordered_json params;
  if (cert.family == "flag_graph") {
    params["d"] = cert.d;
    params["q"] = cert.q;
    params["variant"] = variant_name(*cert.variant);
  } else {
    params["q"] = cert.q;
  }
  j["params"] = params;
  j["order"] = cert.order;
  j["regular"] = cert.regular;
  j["degree"] = cert.degree;
  j["connected"] = cert.connected;
  j["diameter"] =
      cert.diameter ? ordered_json(*cert.diameter) : ordered_json(nullptr);
  j["girth"] = cert.girth ? ordered_json(*cert.girth) : ordered_json(nullptr);
  j["predicted_order"] = to_i64_checked(cert.predicted_order);
  j["predicted_degree"] = to_i64_checked(cert.predicted_degree);
  j["match"] = cert.match;
  j["vertex_transitive"] = evidence_json(cert.vertex_transitive);
  j["arc_transitive"] = evidence_json(cert.arc_transitive);
  if (cert.orbit) {
    j["orbit"] = {{"vertex_orbit_count", cert.orbit->vertex_orbit_count},
                  {"arc_orbit_count", cert.orbit->arc_orbit_count},
                  {"generators_used", cert.orbit->generators_used},
                  {"witness_checked", cert.orbit->witness_checked}};
  } else {
    j["orbit"] = nullptr;
  }
  if (cert.brute_arc_transitive) {
    j["brute_force"] = {{"arc_transitive", *cert.brute_arc_transitive},
                        {"budget", cert.budget}};
  } else {
    j["brute_force"] = nullptr;
  }
  j["ok"] = cert.ok;
  if (include_timing) {
    ordered_json t;
    for (const auto& [stage, ms] : cert.timing_ms)
      t[stage] = std::round(ms * 1000.0) / 1000.0;
    j["timing_ms"] = t;
  } else {
    j["timing_ms"] = nullptr;
  }
  return j.dump(2) + "\n";
}

GraphBundle make_hamming_bundle(std::int64_t q) {
  return GraphBundle{"hamming2", q, 0, std::nullopt, hamming2(q)};
}

GraphBundle make_flag_bundle(int d, std::int64_t q, FlagVariant variant) {
  return GraphBundle{"flag_graph", q, d, variant, flag_graph(d, q, variant)};
}

std::string edge_list_text(const GraphBundle& bundle) {
  std::ostringstream out;
  out << "# atgraph edge-list v1\n";
  out << "# family " << bundle.family << "\n";
  if (bundle.family == "flag_graph") {
    out << "# d " << bundle.d << "\n";
    out << "# q " << bundle.q << "\n";
    out << "# variant " << variant_name(*bundle.variant) << "\n";
  } else {
    out << "# q " << bundle.q << "\n";
  }
  const Graph& g = bundle.graph;
  out << "# order " << g.order() << "\n";
  out << "# edges " << g.edge_count() << "\n";
  if (g.has_labels()) {
    for (int v = 0; v < g.order(); ++v)
      out << "# vertex " << v << " " << g.labels()[v] << "\n";
  }
  for (int v = 0; v < g.order(); ++v)
    for (const int w : g.neighbors(v))
      if (v < w) out << v << " " << w << "\n";
  return out.str();
}

GraphBundle parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::string family;
  std::int64_t q = -1;
  int d = 0;
  std::optional<FlagVariant> variant;
  std::int64_t order = -1;
  std::int64_t edge_count = -1;
  std::vector<std::pair<int, std::string>> labels;
  std::vector<std::pair<int, int>> edges;

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (line[0] == '#') {
      std::string hash, key;
      ls >> hash >> key;
      if (key == "family") {
        ls >> family;
      } else if (key == "q") {
        ls >> q;
      } else if (key == "d") {
        ls >> d;
      } else if (key == "variant") {
        std::string name;
        ls >> name;
        if (name == "degree-consistent")
          variant = FlagVariant::DegreeConsistent;
        else if (name == "as-stated")
          variant = FlagVariant::AsStated;
        else
          fail(Status::ParseError, "unknown variant '" + name + "'");
      } else if (key == "order") {
        ls >> order;
      } else if (key == "edges") {
        ls >> edge_count;
      } else if (key == "vertex") {
        int id = -1;
        std::string label;
        ls >> id >> label;
        labels.emplace_back(id, label);
      }
      // Unknown header keys are ignored.
      continue;
    }
    int u = -1, v = -1;
    if (!(ls >> u >> v))
      fail(Status::ParseError, "malformed edge line: '" + line + "'");
    edges.emplace_back(u, v);
  }

  if (family != "hamming2" && family != "flag_graph")
    fail(Status::ParseError, "missing or unknown family header");
  if (q < 2 || order < 0)
    fail(Status::ParseError, "missing q/order headers");
  if (family == "flag_graph" && (d < 3 || !variant))
    fail(Status::ParseError, "flag_graph needs d and variant headers");
  if (edge_count >= 0 && edge_count != static_cast<std::int64_t>(edges.size()))
    fail(Status::ParseError, "edge count header disagrees with the body");

  Graph g = [&] {
    try {
      return Graph::from_edges(static_cast<int>(order), edges);
    } catch (const Error& e) {
      fail(Status::ParseError, std::string("bad edge list: ") + e.what());
    }
  }();
  if (!labels.empty()) {
    std::vector<std::string> by_id(order);
    for (const auto& [id, label] : labels) {
      if (id < 0 || id >= order)
        fail(Status::ParseError, "vertex label id out of range");
      by_id[id] = label;
    }
    g.set_labels(std::move(by_id));
  }
  return GraphBundle{family, q, d, variant, std::move(g)};
}

std::string graph_json(const GraphBundle& bundle) {
  ordered_json j;
  j["format"] = "atgraph-graph";
  j["version"] = 1;
  j["family"] = bundle.family;
  ordered_json params;
  if (bundle.family == "flag_graph") {
    params["d"] = bundle.d;
    params["q"] = bundle.q;
    params["variant"] = variant_name(*bundle.variant);
  } else {
    params["q"] = bundle.q;
  }
  j["params"] = params;
  const Graph& g = bundle.graph;
  j["order"] = g.order();
  j["edges"] = ordered_json::array();
  for (int v = 0; v < g.order(); ++v)
    for (const int w : g.neighbors(v))
      if (v < w) j["edges"].push_back({v, w});
  if (g.has_labels()) j["labels"] = g.labels();
  return j.dump(2) + "\n";
}

std::string interval_string(const QInterval& v) {
  if (v.exact()) return rational_string(v.lo);
  return decimal_string(v.lo, 6) + ".." + decimal_string(v.hi, 6, true);
}

namespace {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string render(TableFormat format) const {
    std::ostringstream out;
    if (format == TableFormat::Csv) {
      for (std::size_t i = 0; i < header.size(); ++i)
        out << (i ? "," : "") << header[i];
      out << "\n";
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
          out << (i ? "," : "") << row[i];
        out << "\n";
      }
    } else {
      out << "|";
      for (const auto& h : header) out << " " << h << " |";
      out << "\n|";
      for (std::size_t i = 0; i < header.size(); ++i) out << " --- |";
      out << "\n";
      for (const auto& row : rows) {
        out << "|";
        for (const auto& cell : row) out << " " << cell << " |";
        out << "\n";
      }
    }
    return out.str();
  }
};

std::string opt_cell(const std::optional<mpz_class>& v) {
  return v ? v->get_str() : "";
}

// Integers print plainly; a non-integral rational carries its decimal
// approximation alongside the exact fraction.
std::string opt_cell(const std::optional<mpq_class>& v) {
  if (!v) return "";
  if (v->get_den() == 1) return v->get_num().get_str();
  return rational_string(*v) + "~" + decimal_string(*v, 6);
}

}  // namespace

std::string bounds_table(std::int64_t delta_min, std::int64_t delta_max,
                         TableFormat format) {
  if (delta_min < 1 || delta_min > delta_max)
    fail(Status::BadArgument, "need 1 <= delta_min <= delta_max");
  Table t;
  t.header = {"delta", "moore", "moore_refined", "brown",
              "mms",   "ans",   "ss",            "hamming"};
  for (std::int64_t delta = delta_min; delta <= delta_max; ++delta) {
    const BoundReport r = bound_report(delta);
    t.rows.push_back({r.delta.get_str(), r.moore_upper.get_str(),
                      r.moore_refined.get_str(), opt_cell(r.brown),
                      opt_cell(r.mms), opt_cell(r.ans),
                      r.ss ? interval_string(*r.ss) : "",
                      opt_cell(r.hamming)});
  }
  return t.render(format);
}

std::string scan_table(const mpq_class& eps, int d_max, std::int64_t q_max,
                       TableFormat format) {
  Table t;
  t.header = {"d", "q", "delta", "n", "eps_threshold", "bound", "strict"};
  for (const ScanRow& row : scan(eps, d_max, q_max)) {
    t.rows.push_back({std::to_string(row.d), std::to_string(row.q),
                      row.delta.get_str(), row.order_n.get_str(),
                      rational_string(row.eps_threshold),
                      interval_string(row.bound),
                      row.strict ? "true" : "false"});
  }
  return t.render(format);
}

}  // namespace atg
