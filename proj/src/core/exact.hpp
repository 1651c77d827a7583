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

#ifndef ATGRAPH_CORE_EXACT_HPP
#define ATGRAPH_CORE_EXACT_HPP

#include <gmpxx.h>

#include <string>

#include "core/status.hpp"

namespace atg {

mpz_class zpow(const mpz_class& base, unsigned long e);

// Quotient a/b, throwing InexactDivision when b does not divide a.
mpz_class exact_div(const mpz_class& a, const mpz_class& b);

// Closed forms for the projective flag graph on PG(d-1,q):
// order (q^d-1)(q^(d-1)-1)/(q-1)^2 and degree q^3(q^(d-2)-1)/(q-1).
mpz_class flag_order_exact(int d, const mpz_class& q);
mpz_class flag_degree_exact(int d, const mpz_class& q);

// Degree of the variant whose adjacency ignores the flags' points:
// q(q+1)^2 (q^(d-2)-1)/(q-1).
mpz_class flag_degree_line_only_exact(int d, const mpz_class& q);

// floor(x^(1/k)) for x >= 0; *exact set iff x is a perfect k-th power.
mpz_class iroot(const mpz_class& x, unsigned long k, bool* exact = nullptr);

// Fixed-point decimal rendering of a rational; rounds toward minus infinity
// by default, toward plus infinity when round_up is set (so that a printed
// interval still encloses the value).
std::string decimal_string(const mpq_class& v, int digits,
                           bool round_up = false);

// "a/b" for non-integers, plain digits otherwise.
std::string rational_string(const mpq_class& v);

}  // namespace atg

#endif  // ATGRAPH_CORE_EXACT_HPP
