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

#ifndef ATGRAPH_CORE_BOUNDS_HPP
#define ATGRAPH_CORE_BOUNDS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/status.hpp"

namespace atg {

// Certified rational enclosure of a real value; exact() when pinned.
struct QInterval {
  mpq_class lo, hi;
  bool exact() const { return lo == hi; }
};

// Integer constant plus a sum of terms coeff * base^(num/den). This is the
// shape of every fractional-exponent bound handled here, and it admits an
// exact comparator: a term is rational exactly when base^num is a perfect
// den-th power, and the remaining irrational terms are bracketed by integer
// root extraction at increasing precision.
struct PowerSum {
  struct Term {
    mpz_class coeff;
    mpz_class base;
    unsigned long num = 1;
    unsigned long den = 1;
  };
  std::vector<Term> terms;
  mpz_class constant;
};

// Enclosure of the sum with absolute error below 2^-prec_bits per term.
QInterval enclose(const PowerSum& s, unsigned prec_bits);

enum class Cmp { Less, Equal, Greater };

// Exact ordering of the sum's value relative to target (Less: sum < target).
// Doubles the working precision until the sign is decided; Equal is only
// reported when every term is individually exact. Throws PrecisionExhausted
// at the iteration cap instead of guessing.
Cmp compare_sum(const PowerSum& s, const mpq_class& target);

// Moore bound for diameter 2: (upper, refined). Equality is possible only
// for degrees 1, 2, 3, 7 and (unresolved) 57; any other degree has
// refined = delta^2 - 1.
std::pair<mpz_class, mpz_class> moore(const mpz_class& delta);

// delta^2 - delta + 1 when delta - 1 is prime.
std::optional<mpz_class> brown(const mpz_class& delta);

// (8/9)(delta + 1/2)^2 when delta = (3q-1)/2 for a prime power q = 1 mod 4.
std::optional<mpq_class> mms(const mpz_class& delta);

// (delta+1)^2/2 when delta = 2q-1 for a prime power q != 1 mod 4.
std::optional<mpq_class> ans(const mpz_class& delta);

// delta^2 - 6*sqrt(2)*delta^(3/2) when delta = 2^(2m+d') + (2+d')2^(m+1) - 6
// for some m >= 1, d' in {0,1}.
std::optional<QInterval> ss(const mpz_class& delta);

// (delta+2)^2/4 for even delta.
std::optional<mpq_class> hamming_lb(const mpz_class& delta);

// Exact (degree, order) of the flag family; both divisions are exact by
// construction and verified.
std::pair<mpz_class, mpz_class> flag_params(int d, const mpz_class& q);

// Exact rational identity n = delta^2/q^3 + (2/q + 1/q^2) delta + (q+1).
bool flag_expansion_check(int d, const mpz_class& q);

struct QDeltaResult {
  bool holds = false;
  bool equality = false;
};
// q <= delta^(1/d) as the exact integer comparison q^d <= delta.
QDeltaResult q_delta_inequality(int d, const mpz_class& q);

// delta^(2-eps) + 2 delta^(1-eps/3) + delta^(1-2eps/3) + 3 for rational
// 0 < eps <= 1 (eps = 1 is the d = 3 boundary; the CLI layer is stricter).
// Throws EpsOutOfRange.
PowerSum eps_bound_expr(const mpz_class& delta, const mpq_class& eps);
QInterval eps_bound(const mpz_class& delta, const mpq_class& eps);

// The same bound at eps = 3/d, the form attached to the flag family.
PowerSum flag_lb_expr(int d, const mpz_class& delta);
QInterval flag_lb(int d, const mpz_class& delta);
Cmp flag_lb_compare(int d, const mpz_class& delta, const mpz_class& order_n);

struct ScanRow {
  int d = 0;
  std::int64_t q = 0;
  mpz_class delta;
  mpz_class order_n;
  mpq_class eps_threshold;  // 3/d
  QInterval bound;
  bool strict = false;  // order_n > bound, decided exactly
};

// All rows with odd d in [max(3, ceil(3/eps)) rounded up to odd, d_max] and
// odd prime-power q <= q_max, sorted by (d, q).
std::vector<ScanRow> scan(const mpq_class& eps, int d_max, std::int64_t q_max);

struct BoundReport {
  mpz_class delta;
  mpz_class moore_upper;
  mpz_class moore_refined;
  std::string moore_note;  // set for the unresolved degree-57 case
  std::optional<mpz_class> brown;
  std::optional<mpq_class> mms;
  std::optional<mpq_class> ans;
  std::optional<QInterval> ss;
  std::optional<mpq_class> hamming;
};

BoundReport bound_report(const mpz_class& delta);

}  // namespace atg

#endif  // ATGRAPH_CORE_BOUNDS_HPP
