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

#include <vector>

#include "core/bounds.hpp"
#include "core/exact.hpp"

using atg::Cmp;
using atg::mms;
using atg::QInterval;

TEST_CASE("moore bound and its refinement") {
  auto m7 = atg::moore(7);
  CHECK(m7.first == 50);
  CHECK(m7.second == 50);
  auto m4 = atg::moore(4);
  CHECK(m4.first == 17);
  CHECK(m4.second == 15);
  auto m57 = atg::moore(57);
  CHECK(m57.first == 3250);
  CHECK(m57.second == 3250);  // unresolved case keeps the upper value
  auto m2 = atg::moore(2);
  CHECK(m2.second == 5);
}

TEST_CASE("brown bound applies when delta-1 is prime") {
  CHECK(atg::brown(8) == mpz_class(57));
  CHECK_FALSE(atg::brown(9).has_value());
  CHECK(atg::brown(3) == mpz_class(7));
  CHECK_FALSE(atg::brown(1).has_value());
}

TEST_CASE("mms bound") {
  REQUIRE(mms(7).has_value());
  CHECK(*mms(7) == 50);  // Hoffman-Singleton consistency
  REQUIRE(mms(19).has_value());
  CHECK(*mms(19) == 338);
  REQUIRE(mms(13).has_value());  // q = 9
  CHECK(*mms(13) == 162);
  CHECK_FALSE(mms(8).has_value());
  CHECK_FALSE(mms(10).has_value());  // q = 7, but 7 != 1 mod 4
}

TEST_CASE("ans bound") {
  CHECK(*atg::ans(5) == 18);    // q = 3
  CHECK(*atg::ans(15) == 128);  // q = 8
  CHECK(*atg::ans(3) == 8);     // q = 2
  CHECK_FALSE(atg::ans(9).has_value());   // q = 5 is 1 mod 4
  CHECK_FALSE(atg::ans(11).has_value());  // q = 6 is not a prime power
}

TEST_CASE("ss bound applicability and enclosure") {
  for (const long delta : {6L, 14L, 26L, 50L, 90L})
    CHECK(atg::ss(delta).has_value());
  CHECK_FALSE(atg::ss(7).has_value());
  CHECK_FALSE(atg::ss(100).has_value());

  const QInterval v = *atg::ss(26);
  CHECK(v.lo <= v.hi);
  CHECK(v.hi - v.lo < mpq_class(1, 1000000));
  // 676 - 6*sqrt(2)*26^(3/2) is about -448.95.
  CHECK(v.lo > -449);
  CHECK(v.hi < -448);

  // 2*50^3 = 500^2, so the delta = 50 value is exactly rational:
  // 2500 - 6*500 = -500.
  const QInterval v50 = *atg::ss(50);
  CHECK(v50.exact());
  CHECK(v50.lo == -500);
}

TEST_CASE("hamming lower bound") {
  CHECK(*atg::hamming_lb(2) == 4);
  CHECK(*atg::hamming_lb(8) == 25);
  CHECK_FALSE(atg::hamming_lb(7).has_value());
}

TEST_CASE("flag_params and the expansion identity") {
  auto p32 = atg::flag_params(3, 2);
  CHECK(p32.first == 8);
  CHECK(p32.second == 21);
  auto p33 = atg::flag_params(3, 3);
  CHECK(p33.first == 27);
  CHECK(p33.second == 52);
  auto p53 = atg::flag_params(5, 3);
  CHECK(p53.first == 351);
  CHECK(p53.second == 4840);

  for (int d = 3; d <= 9; ++d)
    for (long q = 2; q <= 16; ++q) {
      CAPTURE(d);
      CAPTURE(q);
      CHECK(atg::flag_expansion_check(d, q));
    }
}

TEST_CASE("q <= delta^(1/d), equality exactly at d = 3") {
  CHECK(atg::q_delta_inequality(3, 2).holds);
  CHECK(atg::q_delta_inequality(3, 2).equality);
  CHECK(atg::q_delta_inequality(4, 2).holds);
  CHECK_FALSE(atg::q_delta_inequality(4, 2).equality);
  CHECK(atg::q_delta_inequality(3, 5).equality);
  for (int d = 3; d <= 9; ++d)
    for (long q = 2; q <= 16; ++q) {
      const auto r = atg::q_delta_inequality(d, q);
      CHECK(r.holds);
      CHECK(r.equality == (d == 3));
    }
}

TEST_CASE("flag lower bound: exact values and comparisons") {
  // d = 3, q = 2: 8 + 8 + 2 + 3 = 21, met with equality.
  const QInterval b32 = atg::flag_lb(3, 8);
  CHECK(b32.exact());
  CHECK(b32.lo == 21);
  CHECK(atg::flag_lb_compare(3, 8, 21) == Cmp::Equal);

  // d = 3, q = 3: 27 + 18 + 3 + 3 = 51 (perfect cube), strictly below 52.
  const QInterval b33 = atg::flag_lb(3, 27);
  CHECK(b33.exact());
  CHECK(b33.lo == 51);
  CHECK(atg::flag_lb_compare(3, 27, 52) == Cmp::Less);

  // d = 5, q = 3: delta = 351, n = 4840, strict via the interval comparator.
  CHECK(atg::flag_lb_compare(5, 351, 4840) == Cmp::Less);
  const QInterval b53 = atg::flag_lb(5, 351);
  CHECK_FALSE(b53.exact());
  CHECK(b53.lo > 3913);
  CHECK(b53.hi < 3914);
}

TEST_CASE("eps_bound exact cube cases and monotonicity") {
  const QInterval e27 = atg::eps_bound(27, 1);
  CHECK(e27.exact());
  CHECK(e27.lo == 51);
  const QInterval e8 = atg::eps_bound(8, 1);
  CHECK(e8.exact());
  CHECK(e8.lo == 21);

  // Monotone decreasing in eps at sample points.
  for (const long delta : {8L, 27L, 100L}) {
    const QInterval q1 = atg::eps_bound(delta, mpq_class(1, 4));
    const QInterval q2 = atg::eps_bound(delta, mpq_class(1, 2));
    const QInterval q3 = atg::eps_bound(delta, 1);
    CHECK(q1.lo > q2.hi);
    CHECK(q2.lo > q3.hi);
  }

  CHECK_THROWS_AS((void)atg::eps_bound(8, 0), atg::Error);
  CHECK_THROWS_AS((void)atg::eps_bound(8, 2), atg::Error);
  CHECK_THROWS_AS((void)atg::eps_bound(8, mpq_class(-1, 2)), atg::Error);
}

TEST_CASE("compare_sum decides ordering exactly") {
  // 2 * 2^(1/2) vs 17/6: 8 > 289/36, so 2*sqrt(2) < 17/6 is false...
  // check both directions around sqrt(8) = 2.828427...
  atg::PowerSum s;
  s.constant = 0;
  s.terms.push_back({mpz_class(2), mpz_class(2), 1, 2});
  CHECK(atg::compare_sum(s, mpq_class(2828428, 1000000)) == Cmp::Less);
  CHECK(atg::compare_sum(s, mpq_class(2828427, 1000000)) == Cmp::Greater);

  // An exactly rational sum can be Equal.
  atg::PowerSum t;
  t.constant = 5;
  t.terms.push_back({mpz_class(3), mpz_class(64), 1, 3});  // 3 * 4
  CHECK(atg::compare_sum(t, 17) == Cmp::Equal);
}

TEST_CASE("scan") {
  // eps = 1 (the d = 3 boundary, allowed at this layer) includes (3,3).
  const auto rows1 = atg::scan(1, 3, 9);
  bool found33 = false;
  for (const auto& r : rows1) {
    if (r.d == 3 && r.q == 3) {
      found33 = true;
      CHECK(r.delta == 27);
      CHECK(r.order_n == 52);
      CHECK(r.bound.exact());
      CHECK(r.bound.lo == 51);
      CHECK(r.strict);
    }
  }
  CHECK(found33);

  // eps = 1/2: smallest d is 7; q = 2 never appears; all rows odd and strict.
  const auto rows = atg::scan(mpq_class(1, 2), 9, 9);
  REQUIRE(rows.size() == 8);  // d in {7,9} x q in {3,5,7,9}
  CHECK(rows.front().d == 7);
  CHECK(rows.front().q == 3);
  CHECK(rows.front().delta == 3267);
  for (const auto& r : rows) {
    CHECK(r.d % 2 == 1);
    CHECK(r.q % 2 == 1);
    CHECK(mpz_odd_p(r.delta.get_mpz_t()));
    CHECK(r.strict);
    mpq_class threshold(3, r.d);
    threshold.canonicalize();
    CHECK(r.eps_threshold == threshold);
  }

  // eps = 9/10 starts at d = 5.
  const auto rows910 = atg::scan(mpq_class(9, 10), 5, 9);
  REQUIRE(!rows910.empty());
  CHECK(rows910.front().d == 5);

  CHECK_THROWS_AS((void)atg::scan(mpq_class(2), 9, 9), atg::Error);
}

TEST_CASE("bound_report rows") {
  const auto r7 = atg::bound_report(7);
  CHECK(r7.moore_upper == 50);
  CHECK(r7.mms.has_value());
  CHECK(*r7.mms == 50);
  CHECK_FALSE(r7.brown.has_value());  // 6 is composite
  CHECK(r7.moore_note.empty());

  const auto r8 = atg::bound_report(8);
  CHECK(r8.brown == mpz_class(57));
  CHECK(*r8.hamming == 25);

  const auto r2 = atg::bound_report(2);
  CHECK(r2.moore_upper == 5);
  CHECK(*r2.hamming == 4);

  CHECK_FALSE(atg::bound_report(57).moore_note.empty());
}

TEST_CASE("every applicable lower bound respects the Moore bound") {
  for (long delta = 1; delta <= 10000; ++delta) {
    const auto r = atg::bound_report(delta);
    const mpq_class upper(r.moore_upper);
    if (r.brown) CHECK(mpq_class(*r.brown) <= upper);
    if (r.mms) CHECK(*r.mms <= upper);
    if (r.ans) CHECK(*r.ans <= upper);
    if (r.ss) CHECK(r.ss->hi <= upper);
    if (r.hamming) CHECK(*r.hamming <= upper);
  }
}

TEST_CASE("flag bound vs hamming bound on even-degree flag instances") {
  // For even degrees coming from flag parameters the quadratic Hamming
  // bound dominates the fractional-exponent flag bound on these samples.
  for (auto [d, q] : std::vector<std::pair<int, long>>{
           {3, 2}, {3, 4}, {4, 2}, {4, 3}, {5, 2}, {6, 2}}) {
    const auto [delta, n] = atg::flag_params(d, q);
    if (mpz_odd_p(delta.get_mpz_t())) continue;
    const auto ham = atg::hamming_lb(delta);
    REQUIRE(ham.has_value());
    const QInterval fb = atg::flag_lb(d, delta);
    CHECK(*ham >= fb.hi);
  }
}
