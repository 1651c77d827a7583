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

#include "atgraph.h"

#include <cstring>
#include <new>
#include <string>

#include "core/report.hpp"

struct atg_graph {
  atg::GraphBundle bundle;
};

namespace {

int status_of(const atg::Error& e) { return static_cast<int>(e.status()); }

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return ATG_OK;
  } catch (const atg::Error& e) {
    return status_of(e);
  } catch (const std::bad_alloc&) {
    return ATG_INTERNAL_ERROR;
  } catch (const std::exception&) {
    return ATG_INTERNAL_ERROR;
  }
}

atg::FlagVariant to_variant(int variant) {
  if (variant == ATG_VARIANT_AS_STATED) return atg::FlagVariant::AsStated;
  if (variant == ATG_VARIANT_DEGREE_CONSISTENT)
    return atg::FlagVariant::DegreeConsistent;
  atg::fail(atg::Status::BadArgument, "unknown variant code");
}

atg::CertifyOptions to_options(int mode, int64_t budget, int with_timing) {
  atg::CertifyOptions opts;
  switch (mode) {
    case ATG_MODE_ORBIT: opts.mode = atg::CertMode::Orbit; break;
    case ATG_MODE_BRUTE: opts.mode = atg::CertMode::Brute; break;
    case ATG_MODE_BOTH: opts.mode = atg::CertMode::Both; break;
    default: atg::fail(atg::Status::BadArgument, "unknown certify mode");
  }
  if (budget < 1) atg::fail(atg::Status::BadArgument, "budget must be >= 1");
  opts.budget = static_cast<int>(budget);
  opts.include_timing = with_timing != 0;
  return opts;
}

atg::TableFormat to_format(int format) {
  if (format == ATG_FORMAT_CSV) return atg::TableFormat::Csv;
  if (format == ATG_FORMAT_MD) return atg::TableFormat::Md;
  atg::fail(atg::Status::BadArgument, "unknown table format");
}

void emit_certificate(const atg::Certificate& cert, bool with_timing,
                      char** json_out, int* all_ok) {
  if (json_out) *json_out = dup_string(certificate_json(cert, with_timing));
  if (all_ok) *all_ok = cert.ok ? 1 : 0;
}

}  // namespace

extern "C" {

const char* atg_version(void) { return atg::kToolVersion; }

const char* atg_status_name(int status) {
  if (status == ATG_INTERNAL_ERROR) return "internal-error";
  return atg::status_name(static_cast<atg::Status>(status));
}

void atg_string_free(char* s) { delete[] s; }

int atg_hamming2(int64_t q, atg_graph** out) {
  return guarded([&] {
    if (!out) atg::fail(atg::Status::BadArgument, "null output pointer");
    *out = new atg_graph{atg::make_hamming_bundle(q)};
  });
}

int atg_flag_graph(int64_t d, int64_t q, int variant, atg_graph** out) {
  return guarded([&] {
    if (!out) atg::fail(atg::Status::BadArgument, "null output pointer");
    if (d < 3)
      atg::fail(atg::Status::DimensionTooSmall, "flag graphs need d >= 3");
    *out = new atg_graph{
        atg::make_flag_bundle(static_cast<int>(d), q, to_variant(variant))};
  });
}

int atg_graph_parse_edge_list(const char* text, atg_graph** out) {
  return guarded([&] {
    if (!text || !out)
      atg::fail(atg::Status::BadArgument, "null argument");
    *out = new atg_graph{atg::parse_edge_list(text)};
  });
}

void atg_graph_free(atg_graph* g) { delete g; }

int64_t atg_graph_order(const atg_graph* g) {
  return g ? g->bundle.graph.order() : 0;
}

int64_t atg_graph_edge_count(const atg_graph* g) {
  return g ? g->bundle.graph.edge_count() : 0;
}

int atg_graph_diameter(const atg_graph* g, int64_t* out) {
  return guarded([&] {
    if (!g || !out) atg::fail(atg::Status::BadArgument, "null argument");
    *out = atg::diameter(g->bundle.graph);
  });
}

int atg_graph_girth(const atg_graph* g, int64_t* out) {
  return guarded([&] {
    if (!g || !out) atg::fail(atg::Status::BadArgument, "null argument");
    const auto girth = atg::girth(g->bundle.graph);
    *out = girth ? *girth : 0;
  });
}

int atg_graph_regularity(const atg_graph* g, int* is_regular, int64_t* degree) {
  return guarded([&] {
    if (!g) atg::fail(atg::Status::BadArgument, "null argument");
    const auto r = atg::regularity(g->bundle.graph);
    if (is_regular) *is_regular = r.is_regular ? 1 : 0;
    if (degree) *degree = r.degree;
  });
}

const char* atg_graph_vertex_label(const atg_graph* g, int64_t v) {
  if (!g || !g->bundle.graph.has_labels()) return nullptr;
  if (v < 0 || v >= g->bundle.graph.order()) return nullptr;
  return g->bundle.graph.labels()[static_cast<std::size_t>(v)].c_str();
}

int atg_graph_edge_list_text(const atg_graph* g, char** out) {
  return guarded([&] {
    if (!g || !out) atg::fail(atg::Status::BadArgument, "null argument");
    *out = dup_string(atg::edge_list_text(g->bundle));
  });
}

int atg_graph_json(const atg_graph* g, char** out) {
  return guarded([&] {
    if (!g || !out) atg::fail(atg::Status::BadArgument, "null argument");
    *out = dup_string(atg::graph_json(g->bundle));
  });
}

int atg_certify_hamming(int64_t q, int mode, int64_t budget, int with_timing,
                        char** json_out, int* all_ok) {
  return guarded([&] {
    const auto opts = to_options(mode, budget, with_timing);
    emit_certificate(atg::certify_hamming(q, opts), opts.include_timing,
                     json_out, all_ok);
  });
}

int atg_certify_flag(int64_t d, int64_t q, int variant, int mode,
                     int64_t budget, int with_timing, int use_frobenius,
                     char** json_out, int* all_ok) {
  return guarded([&] {
    if (d < 3)
      atg::fail(atg::Status::DimensionTooSmall, "flag graphs need d >= 3");
    auto opts = to_options(mode, budget, with_timing);
    opts.include_frobenius = use_frobenius != 0;
    emit_certificate(atg::certify_flag(static_cast<int>(d), q,
                                       to_variant(variant), opts),
                     opts.include_timing, json_out, all_ok);
  });
}

int atg_certify_edge_list(const char* text, int mode, int64_t budget,
                          int with_timing, char** json_out, int* all_ok) {
  return guarded([&] {
    if (!text) atg::fail(atg::Status::BadArgument, "null text");
    const auto opts = to_options(mode, budget, with_timing);
    emit_certificate(atg::certify_bundle(atg::parse_edge_list(text), opts),
                     opts.include_timing, json_out, all_ok);
  });
}

int atg_bounds_table(int64_t delta_min, int64_t delta_max, int format,
                     char** out) {
  return guarded([&] {
    if (!out) atg::fail(atg::Status::BadArgument, "null output pointer");
    *out = dup_string(
        atg::bounds_table(delta_min, delta_max, to_format(format)));
  });
}

int atg_scan_table(int64_t eps_num, int64_t eps_den, int64_t d_max,
                   int64_t q_max, int format, char** out) {
  return guarded([&] {
    if (!out) atg::fail(atg::Status::BadArgument, "null output pointer");
    if (eps_den <= 0)
      atg::fail(atg::Status::EpsOutOfRange, "eps denominator must be > 0");
    mpq_class eps(static_cast<long>(eps_num), static_cast<long>(eps_den));
    eps.canonicalize();
    *out = dup_string(atg::scan_table(eps, static_cast<int>(d_max), q_max,
                                      to_format(format)));
  });
}

}  // extern "C"
