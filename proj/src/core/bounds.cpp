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

#include "core/bounds.hpp"

#include <algorithm>

#include "core/exact.hpp"
#include "core/gf.hpp"

namespace atg {
namespace {

constexpr unsigned kStartBits = 32;
constexpr unsigned kMaxBits = 1u << 16;
constexpr unsigned long kMaxExponent = 4096;  // keeps base^num desk-scale

std::int64_t to_i64(const mpz_class& v, const char* what) {
  if (!v.fits_slong_p())
    fail(Status::BadArgument,
         std::string(what) + " exceeds the supported desk-scale range");
  return v.get_si();
}

// Enclosure of coeff * base^(num/den) with 2^-prec_bits resolution;
// *term_exact reports whether the value is exactly rational.
QInterval enclose_term(const PowerSum::Term& t, unsigned prec_bits,
                       bool* term_exact) {
  if (t.num > kMaxExponent || t.den > kMaxExponent || t.den == 0)
    fail(Status::BadArgument, "exponent outside the supported range");
  if (t.base < 0) fail(Status::BadArgument, "negative base");
  const mpz_class x = zpow(t.base, t.num);
  bool exact = false;
  const mpz_class plain_root = iroot(x, t.den, &exact);
  if (term_exact) *term_exact = exact;
  if (exact) {
    const mpq_class v = mpq_class(t.coeff) * plain_root;
    return {v, v};
  }
  // floor((x * 2^(prec*den))^(1/den)) brackets x^(1/den) * 2^prec.
  mpz_class shifted = x << (static_cast<unsigned long>(prec_bits) * t.den);
  const mpz_class r = iroot(shifted, t.den);
  mpz_class scale = mpz_class(1) << prec_bits;
  mpq_class lo(r, scale);
  mpq_class hi(r + 1, scale);
  lo.canonicalize();
  hi.canonicalize();
  lo *= t.coeff;
  hi *= t.coeff;
  if (t.coeff < 0) std::swap(lo, hi);
  return {lo, hi};
}

bool is_prime_power_i64(std::int64_t q) {
  return prime_power_decompose(q).has_value();
}

}  // namespace

QInterval enclose(const PowerSum& s, unsigned prec_bits) {
  QInterval total{mpq_class(s.constant), mpq_class(s.constant)};
  for (const auto& t : s.terms) {
    const QInterval ti = enclose_term(t, prec_bits, nullptr);
    total.lo += ti.lo;
    total.hi += ti.hi;
  }
  return total;
}

Cmp compare_sum(const PowerSum& s, const mpq_class& target) {
  // Split off the exactly-rational part once.
  mpq_class exact_part(s.constant);
  std::vector<PowerSum::Term> inexact;
  for (const auto& t : s.terms) {
    bool term_exact = false;
    const QInterval ti = enclose_term(t, kStartBits, &term_exact);
    if (term_exact) {
      exact_part += ti.lo;
    } else {
      inexact.push_back(t);
    }
  }
  if (inexact.empty()) {
    const int c = cmp(exact_part, target);
    return c < 0 ? Cmp::Less : (c > 0 ? Cmp::Greater : Cmp::Equal);
  }
  for (unsigned bits = kStartBits; bits <= kMaxBits; bits *= 2) {
    mpq_class lo = exact_part;
    mpq_class hi = exact_part;
    for (const auto& t : inexact) {
      const QInterval ti = enclose_term(t, bits, nullptr);
      lo += ti.lo;
      hi += ti.hi;
    }
    if (hi < target) return Cmp::Less;
    if (lo > target) return Cmp::Greater;
  }
  fail(Status::PrecisionExhausted,
       "comparison undecided at the precision cap");
}

std::pair<mpz_class, mpz_class> moore(const mpz_class& delta) {
  if (delta < 1) fail(Status::BadArgument, "degree must be >= 1");
  const mpz_class upper = delta * delta + 1;
  const bool exceptional = delta == 1 || delta == 2 || delta == 3 ||
                           delta == 7 || delta == 57;
  return {upper, exceptional ? upper : mpz_class(delta * delta - 1)};
}

std::optional<mpz_class> brown(const mpz_class& delta) {
  if (delta < 2) return std::nullopt;
  if (!is_prime(to_i64(delta - 1, "delta"))) return std::nullopt;
  return delta * delta - delta + 1;
}

std::optional<mpq_class> mms(const mpz_class& delta) {
  // delta = (3q-1)/2 for a prime power q = 1 (mod 4).
  const mpz_class twice = 2 * delta + 1;
  if (twice % 3 != 0) return std::nullopt;
  const std::int64_t q = to_i64(twice / 3, "q");
  if (q % 4 != 1 || !is_prime_power_i64(q)) return std::nullopt;
  const mpq_class half_plus = mpq_class(delta) + mpq_class(1, 2);
  return mpq_class(8, 9) * half_plus * half_plus;
}

std::optional<mpq_class> ans(const mpz_class& delta) {
  // delta = 2q-1 for a prime power q != 1 (mod 4).
  const mpz_class dp1 = delta + 1;
  if (dp1 % 2 != 0) return std::nullopt;
  const std::int64_t q = to_i64(dp1 / 2, "q");
  if (q % 4 == 1 || !is_prime_power_i64(q)) return std::nullopt;
  return mpq_class(dp1 * dp1) / 2;
}

std::optional<QInterval> ss(const mpz_class& delta) {
  bool matches = false;
  for (int shift = 0; !matches; ++shift) {
    // shift encodes (m, d') with m = shift/2 + 1, d' = shift % 2.
    const int m = shift / 2 + 1;
    const int dprime = shift % 2;
    const mpz_class lead = mpz_class(1) << (2 * m + dprime);
    if (lead > delta + 6) break;
    const mpz_class value = lead + (2 + dprime) * (mpz_class(1) << (m + 1)) - 6;
    if (value == delta) matches = true;
  }
  if (!matches) return std::nullopt;
  // delta^2 - 6*sqrt(2*delta^3), bracketed at 96 bits.
  PowerSum sum;
  sum.constant = delta * delta;
  sum.terms.push_back({mpz_class(-6), 2 * delta * delta * delta, 1, 2});
  return enclose(sum, 96);
}

std::optional<mpq_class> hamming_lb(const mpz_class& delta) {
  if (delta < 2 || delta % 2 != 0) return std::nullopt;
  const mpz_class dp2 = delta + 2;
  return mpq_class(dp2 * dp2) / 4;
}

std::pair<mpz_class, mpz_class> flag_params(int d, const mpz_class& q) {
  if (d < 3) fail(Status::DimensionTooSmall, "flag parameters need d >= 3");
  if (q < 2) fail(Status::ParameterTooSmall, "flag parameters need q >= 2");
  return {flag_degree_exact(d, q), flag_order_exact(d, q)};
}

bool flag_expansion_check(int d, const mpz_class& q) {
  const auto [delta, n] = flag_params(d, q);
  const mpq_class rhs = mpq_class(delta * delta) / zpow(q, 3) +
                        (mpq_class(2) / q + mpq_class(1) / (q * q)) * delta +
                        (q + 1);
  return mpq_class(n) == rhs;
}

QDeltaResult q_delta_inequality(int d, const mpz_class& q) {
  const auto [delta, n] = flag_params(d, q);
  (void)n;
  const mpz_class qd = zpow(q, d);
  return {qd <= delta, qd == delta};
}

PowerSum eps_bound_expr(const mpz_class& delta, const mpq_class& eps) {
  if (eps <= 0 || eps > 1)
    fail(Status::EpsOutOfRange, "eps must satisfy 0 < eps <= 1");
  if (delta < 1) fail(Status::BadArgument, "degree must be >= 1");
  const mpz_class a = eps.get_num();
  const mpz_class b = eps.get_den();
  const auto num = [&](const mpz_class& v) {
    if (!v.fits_ulong_p() || v.get_ui() > kMaxExponent)
      fail(Status::BadArgument, "eps denominator too large for exact powers");
    return v.get_ui();
  };
  PowerSum s;
  s.constant = 3;
  s.terms.push_back({mpz_class(1), delta, num(2 * b - a), num(b)});
  s.terms.push_back({mpz_class(2), delta, num(3 * b - a), num(3 * b)});
  s.terms.push_back({mpz_class(1), delta, num(3 * b - 2 * a), num(3 * b)});
  return s;
}

QInterval eps_bound(const mpz_class& delta, const mpq_class& eps) {
  return enclose(eps_bound_expr(delta, eps), 96);
}

PowerSum flag_lb_expr(int d, const mpz_class& delta) {
  if (d < 3) fail(Status::DimensionTooSmall, "flag bound needs d >= 3");
  mpq_class eps(3, d);
  eps.canonicalize();
  return eps_bound_expr(delta, eps);
}

QInterval flag_lb(int d, const mpz_class& delta) {
  return enclose(flag_lb_expr(d, delta), 96);
}

Cmp flag_lb_compare(int d, const mpz_class& delta, const mpz_class& order_n) {
  return compare_sum(flag_lb_expr(d, delta), mpq_class(order_n));
}

std::vector<ScanRow> scan(const mpq_class& eps, int d_max, std::int64_t q_max) {
  if (eps <= 0 || eps > 1)
    fail(Status::EpsOutOfRange, "eps must satisfy 0 < eps <= 1");
  // Smallest admissible odd d >= max(3, 3/eps).
  mpz_class dmin_z = (3 * eps.get_den() + eps.get_num() - 1) / eps.get_num();
  std::int64_t d0 = std::max<std::int64_t>(3, to_i64(dmin_z, "3/eps"));
  if (d0 % 2 == 0) ++d0;

  std::vector<ScanRow> rows;
  for (std::int64_t d = d0; d <= d_max; d += 2) {
    for (std::int64_t q = 3; q <= q_max; q += 2) {
      if (!is_prime_power_i64(q)) continue;
      ScanRow row;
      row.d = static_cast<int>(d);
      row.q = q;
      const auto [delta, n] =
          flag_params(static_cast<int>(d), mpz_class(static_cast<long>(q)));
      row.delta = delta;
      row.order_n = n;
      row.eps_threshold = mpq_class(3, static_cast<long>(d));
      row.eps_threshold.canonicalize();
      const PowerSum expr = eps_bound_expr(delta, eps);
      row.bound = enclose(expr, 96);
      row.strict = compare_sum(expr, mpq_class(n)) == Cmp::Less;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

BoundReport bound_report(const mpz_class& delta) {
  BoundReport r;
  r.delta = delta;
  const auto [upper, refined] = moore(delta);
  r.moore_upper = upper;
  r.moore_refined = refined;
  if (delta == 57)
    r.moore_note = "Moore equality unresolved for degree 57";
  r.brown = brown(delta);
  r.mms = mms(delta);
  r.ans = ans(delta);
  r.ss = ss(delta);
  r.hamming = hamming_lb(delta);
  return r;
}

}  // namespace atg
