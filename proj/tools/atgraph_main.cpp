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

// atgraph command line front end. All graph work happens behind the C API
// in libatgraph; this file only parses arguments, moves bytes, and maps
// statuses to exit codes:
//   0 success, 1 certificate mismatch, 2 invalid parameters,
//   3 I/O failure, 4 brute-force budget exceeded, 5 internal error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "atgraph.h"

namespace {

int exit_for_status(int status) {
  switch (status) {
    case ATG_OK:
      return 0;
    case ATG_NOT_A_PRIME_POWER:
    case ATG_DIMENSION_TOO_SMALL:
    case ATG_PARAMETER_TOO_SMALL:
    case ATG_EPS_OUT_OF_RANGE:
    case ATG_BAD_ARGUMENT:
    case ATG_PARSE_ERROR:
    case ATG_INDEX_OUT_OF_RANGE:
    case ATG_SELF_LOOP:
      return 2;
    case ATG_IO_ERROR:
      return 3;
    case ATG_BUDGET_EXCEEDED:
      return 4;
    default:
      return 5;
  }
}

int complain(int status) {
  std::cerr << "atgraph: error: " << atg_status_name(status) << "\n";
  return exit_for_status(status);
}

// Writes to the path, or to standard output when the path is empty.
int emit(const std::string& out_path, const char* text) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << text;
  out.close();
  if (!out) {
    std::cerr << "atgraph: error: cannot write " << out_path << "\n";
    return 3;
  }
  return 0;
}

struct StringGuard {
  char* ptr = nullptr;
  ~StringGuard() { atg_string_free(ptr); }
};

struct GraphGuard {
  atg_graph* ptr = nullptr;
  ~GraphGuard() { atg_graph_free(ptr); }
};

bool parse_rational(const std::string& text, std::int64_t* num,
                    std::int64_t* den) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      *num = std::stoll(text);
      *den = 1;
    } else {
      *num = std::stoll(text.substr(0, slash));
      *den = std::stoll(text.substr(slash + 1));
    }
  } catch (const std::exception&) {
    return false;
  }
  return *den > 0;
}

int to_variant(const std::string& name) {
  return name == "as-stated" ? ATG_VARIANT_AS_STATED
                             : ATG_VARIANT_DEGREE_CONSISTENT;
}

int to_mode(const std::string& name) {
  if (name == "brute") return ATG_MODE_BRUTE;
  if (name == "both") return ATG_MODE_BOTH;
  return ATG_MODE_ORBIT;
}

struct FamilyArgs {
  std::string family;
  std::vector<std::int64_t> params;

  bool valid() const {
    if (family == "hamming") return params.size() == 1;
    if (family == "flag") return params.size() == 2;
    return false;
  }
};

int run_generate(const FamilyArgs& args, const std::string& variant,
                 const std::string& format, const std::string& out_path) {
  if (!args.valid()) {
    std::cerr << "atgraph: generate expects 'hamming <q>' or 'flag <d> <q>'\n";
    return 2;
  }
  if (format != "edges" && format != "json") {
    std::cerr << "atgraph: unknown generate format '" << format << "'\n";
    return 2;
  }
  GraphGuard graph;
  const int status =
      args.family == "hamming"
          ? atg_hamming2(args.params[0], &graph.ptr)
          : atg_flag_graph(args.params[0], args.params[1], to_variant(variant),
                           &graph.ptr);
  if (status != ATG_OK) return complain(status);
  StringGuard text;
  const int tstatus = format == "json"
                          ? atg_graph_json(graph.ptr, &text.ptr)
                          : atg_graph_edge_list_text(graph.ptr, &text.ptr);
  if (tstatus != ATG_OK) return complain(tstatus);
  return emit(out_path, text.ptr);
}

int run_certify(const FamilyArgs& args, const std::string& input,
                const std::string& variant, const std::string& mode,
                std::int64_t budget, bool no_timing, bool frobenius,
                const std::string& out_path) {
  StringGuard json;
  int all_ok = 0;
  int status = ATG_OK;
  if (!input.empty()) {
    std::ifstream in(input, std::ios::binary);
    if (!in) {
      std::cerr << "atgraph: error: cannot read " << input << "\n";
      return 3;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    status = atg_certify_edge_list(text.c_str(), to_mode(mode), budget,
                                   no_timing ? 0 : 1, &json.ptr, &all_ok);
  } else {
    if (!args.valid()) {
      std::cerr
          << "atgraph: certify expects 'hamming <q>', 'flag <d> <q>', or "
             "--input <file>\n";
      return 2;
    }
    status = args.family == "hamming"
                 ? atg_certify_hamming(args.params[0], to_mode(mode), budget,
                                       no_timing ? 0 : 1, &json.ptr, &all_ok)
                 : atg_certify_flag(args.params[0], args.params[1],
                                    to_variant(variant), to_mode(mode), budget,
                                    no_timing ? 0 : 1, frobenius ? 1 : 0,
                                    &json.ptr, &all_ok);
  }
  if (status != ATG_OK) return complain(status);
  const int emit_status = emit(out_path, json.ptr);
  if (emit_status != 0) return emit_status;
  return all_ok ? 0 : 1;
}

int run_bounds(std::int64_t delta_min, std::int64_t delta_max,
               const std::string& format, const std::string& out_path) {
  if (delta_min < 1 || delta_min > delta_max) {
    std::cerr << "atgraph: need 1 <= --delta-min <= --delta-max\n";
    return 2;
  }
  if (format != "csv" && format != "md") {
    std::cerr << "atgraph: unknown table format '" << format << "'\n";
    return 2;
  }
  StringGuard text;
  const int status =
      atg_bounds_table(delta_min, delta_max,
                       format == "md" ? ATG_FORMAT_MD : ATG_FORMAT_CSV,
                       &text.ptr);
  if (status != ATG_OK) return complain(status);
  return emit(out_path, text.ptr);
}

int run_scan(const std::string& eps, std::int64_t d_max, std::int64_t q_max,
             const std::string& format, const std::string& out_path) {
  std::int64_t num = 0, den = 1;
  if (!parse_rational(eps, &num, &den) || num <= 0 || num >= den) {
    std::cerr << "atgraph: --eps must be a rational a/b with 0 < a/b < 1\n";
    return 2;
  }
  if (format != "csv" && format != "md") {
    std::cerr << "atgraph: unknown table format '" << format << "'\n";
    return 2;
  }
  StringGuard text;
  const int status =
      atg_scan_table(num, den, d_max, q_max,
                     format == "md" ? ATG_FORMAT_MD : ATG_FORMAT_CSV,
                     &text.ptr);
  if (status != ATG_OK) return complain(status);
  return emit(out_path, text.ptr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arc-transitive diameter-2 graph families: construction, "
               "certification, and exact degree-diameter bounds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", atg_version());

  FamilyArgs gen_args, cert_args;
  std::string gen_variant = "degree-consistent", cert_variant =
                                                     "degree-consistent";
  std::string gen_format = "edges", gen_out, cert_out, cert_input;
  std::string cert_mode = "orbit";
  std::int64_t budget = 120;
  bool no_timing = false;
  bool frobenius = false;

  auto* generate =
      app.add_subcommand("generate", "write a graph as an edge list or JSON");
  generate->add_option("family", gen_args.family, "hamming or flag")
      ->required();
  generate->add_option("params", gen_args.params, "q, or d q");
  generate->add_option("--variant", gen_variant, "flag adjacency rule")
      ->check(CLI::IsMember({"degree-consistent", "as-stated"}));
  generate->add_option("--format", gen_format, "edges or json")
      ->check(CLI::IsMember({"edges", "json"}));
  generate->add_option("-o,--output", gen_out, "output path (default stdout)");

  auto* certify = app.add_subcommand(
      "certify", "construct, measure, and certify one family member");
  certify->add_option("family", cert_args.family, "hamming or flag");
  certify->add_option("params", cert_args.params, "q, or d q");
  certify->add_option("--variant", cert_variant, "flag adjacency rule")
      ->check(CLI::IsMember({"degree-consistent", "as-stated"}));
  certify->add_option("--mode", cert_mode, "orbit, brute, or both")
      ->check(CLI::IsMember({"orbit", "brute", "both"}));
  certify->add_option("--budget", budget, "brute-force vertex budget");
  certify->add_flag("--no-timing", no_timing,
                    "omit timing for byte-reproducible output");
  certify->add_flag("--frobenius", frobenius,
                    "include the Frobenius twist in the flag generator set");
  certify->add_option("--input", cert_input,
                      "re-certify a generated edge-list file");
  certify->add_option("-o,--output", cert_out, "output path (default stdout)");

  std::int64_t delta_min = 1, delta_max = 100;
  std::string bounds_format = "csv", bounds_out;
  auto* bounds = app.add_subcommand(
      "bounds", "tabulate the diameter-2 degree-diameter bounds");
  bounds->add_option("--delta-min", delta_min, "first degree");
  bounds->add_option("--delta-max", delta_max, "last degree");
  bounds->add_option("--format", bounds_format, "csv or md")
      ->check(CLI::IsMember({"csv", "md"}));
  bounds->add_option("-o,--output", bounds_out, "output path (default stdout)");

  std::string scan_eps = "1/2", scan_format = "csv", scan_out;
  std::int64_t d_max = 9, q_max = 9;
  auto* scan = app.add_subcommand(
      "scan", "flag-family parameter scan against the eps bound");
  scan->add_option("--eps", scan_eps, "rational 0 < a/b < 1");
  scan->add_option("--d-max", d_max, "largest dimension");
  scan->add_option("--q-max", q_max, "largest field order");
  scan->add_option("--format", scan_format, "csv or md")
      ->check(CLI::IsMember({"csv", "md"}));
  scan->add_option("-o,--output", scan_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (generate->parsed())
    return run_generate(gen_args, gen_variant, gen_format, gen_out);
  if (certify->parsed())
    return run_certify(cert_args, cert_input, cert_variant, cert_mode, budget,
                       no_timing, frobenius, cert_out);
  if (bounds->parsed())
    return run_bounds(delta_min, delta_max, bounds_format, bounds_out);
  if (scan->parsed())
    return run_scan(scan_eps, d_max, q_max, scan_format, scan_out);
  return 2;
}
