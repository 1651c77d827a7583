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

#include "core/exact.hpp"

namespace atg {

mpz_class zpow(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0)
    fail(Status::InexactDivision,
         b.get_str() + " does not divide " + a.get_str());
  return q;
}

mpz_class flag_order_exact(int d, const mpz_class& q) {
  const mpz_class qm1 = q - 1;
  return exact_div((zpow(q, d) - 1) * (zpow(q, d - 1) - 1), qm1 * qm1);
}

mpz_class flag_degree_exact(int d, const mpz_class& q) {
  return exact_div(zpow(q, 3) * (zpow(q, d - 2) - 1), q - 1);
}

mpz_class flag_degree_line_only_exact(int d, const mpz_class& q) {
  return exact_div(q * (q + 1) * (q + 1) * (zpow(q, d - 2) - 1), q - 1);
}

mpz_class iroot(const mpz_class& x, unsigned long k, bool* exact) {
  mpz_class root, rem;
  mpz_rootrem(root.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t(), k);
  if (exact) *exact = (rem == 0);
  return root;
}

std::string decimal_string(const mpq_class& v, int digits, bool round_up) {
  const mpz_class scale = zpow(10, digits);
  mpz_class scaled;
  if (round_up) {
    mpz_cdiv_q(scaled.get_mpz_t(), mpz_class(v.get_num() * scale).get_mpz_t(),
               v.get_den().get_mpz_t());
  } else {
    mpz_fdiv_q(scaled.get_mpz_t(), mpz_class(v.get_num() * scale).get_mpz_t(),
               v.get_den().get_mpz_t());
  }
  const bool negative = scaled < 0;
  mpz_class abs_scaled = negative ? mpz_class(-scaled) : scaled;
  mpz_class whole = abs_scaled / scale;
  mpz_class frac = abs_scaled % scale;
  std::string fs = frac.get_str();
  fs.insert(fs.begin(), digits - static_cast<int>(fs.size()), '0');
  std::string out = (negative ? "-" : "") + whole.get_str();
  if (digits > 0) out += "." + fs;
  return out;
}

std::string rational_string(const mpq_class& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace atg
