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

#ifndef ATGRAPH_CORE_REPORT_HPP
#define ATGRAPH_CORE_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/bounds.hpp"
#include "core/constructions.hpp"
#include "core/transitivity.hpp"

namespace atg {

inline constexpr const char* kToolVersion = "atgraph 0.1.0";

enum class CertMode { Orbit, Brute, Both };
enum class TableFormat { Csv, Md };

struct CertifyOptions {
  CertMode mode = CertMode::Orbit;
  int budget = kDefaultBruteBudget;
  bool include_timing = true;
  // Adds the Frobenius twist to the flag-graph generator set when the
  // field is a proper extension. Off by default.
  bool include_frobenius = false;
};

// How a transitivity claim was established. "Unverified" means only that
// this run produced no witness, never that the property fails.
enum class Evidence { GroupCertified, OracleCertified, Unverified };
const char* evidence_name(Evidence e);

struct Certificate {
  std::string family;  // "hamming2" or "flag_graph"
  std::int64_t q = 0;
  int d = 0;  // 0 for the Hamming family
  std::optional<FlagVariant> variant;

  std::int64_t order = 0;
  bool regular = false;
  std::int64_t degree = 0;  // max degree when irregular
  bool connected = false;
  std::optional<int> diameter;
  std::optional<int> girth;

  mpz_class predicted_order;
  mpz_class predicted_degree;
  bool match = false;  // measured (order, degree) equals predicted

  Evidence vertex_transitive = Evidence::Unverified;
  Evidence arc_transitive = Evidence::Unverified;
  std::optional<OrbitCertificate> orbit;
  std::optional<bool> brute_arc_transitive;
  int budget = kDefaultBruteBudget;

  bool ok = false;  // every family-claimed property verified this run
  std::vector<std::pair<std::string, double>> timing_ms;
};

Certificate certify_hamming(std::int64_t q, const CertifyOptions& opts);
Certificate certify_flag(int d, std::int64_t q, FlagVariant variant,
                         const CertifyOptions& opts);

std::string certificate_json(const Certificate& cert, bool include_timing);

// A graph together with the family parameters it was built from; this is
// what file serialization carries.
struct GraphBundle {
  std::string family;
  std::int64_t q = 0;
  int d = 0;
  std::optional<FlagVariant> variant;
  Graph graph;
};

GraphBundle make_hamming_bundle(std::int64_t q);
GraphBundle make_flag_bundle(int d, std::int64_t q, FlagVariant variant);

// Deterministic text edge list: '#' header lines carrying the family
// parameters and the vertex-label map, then one "u v" line per edge with
// u < v, sorted. UTF-8, LF line endings.
std::string edge_list_text(const GraphBundle& bundle);
GraphBundle parse_edge_list(const std::string& text);  // throws ParseError

std::string graph_json(const GraphBundle& bundle);

// Re-certifies a parsed bundle. The declared construction is rebuilt and
// must agree edge-for-edge with the parsed graph (throws ParseError when a
// file does not match its own header).
Certificate certify_bundle(const GraphBundle& bundle,
                           const CertifyOptions& opts);

std::string bounds_table(std::int64_t delta_min, std::int64_t delta_max,
                         TableFormat format);
std::string scan_table(const mpq_class& eps, int d_max, std::int64_t q_max,
                       TableFormat format);

// "a/b" when exact, outward-rounded "lo..hi" decimals otherwise.
std::string interval_string(const QInterval& v);

}  // namespace atg

#endif  // ATGRAPH_CORE_REPORT_HPP
