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

#ifndef ATGRAPH_CORE_GF_HPP
#define ATGRAPH_CORE_GF_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "core/status.hpp"

namespace atg {

struct PrimePower {
  std::int64_t p = 0;  // prime
  int k = 0;           // exponent, >= 1
  std::int64_t q = 0;  // p^k
};

// Deterministic trial division; intended for desk-scale inputs (<= 1e6).
bool is_prime(std::int64_t n);

// Returns p, k with q = p^k, or nullopt when q < 2 or q has two distinct
// prime factors.
std::optional<PrimePower> prime_power_decompose(std::int64_t q);

// Polynomial over Z_p, little-endian coefficients (coeffs[i] multiplies x^i).
using Poly = std::vector<int>;

// Smallest monic irreducible polynomial of degree k over Z_p, where "smallest"
// orders candidates by the base-p value of their coefficient vector (highest
// degree most significant). Irreducibility is certified by gcd(x^(p^i) - x, f)
// being constant for i = 1..k/2, which rules out factors of degree <= k/2.
// Requires k >= 2.
Poly find_irreducible(std::int64_t p, int k);

// One element of GF(p^k) in the polynomial basis.
struct FieldElem {
  std::vector<int> coeffs;  // length k, little-endian, each in [0, p)
  bool operator==(const FieldElem&) const = default;
};

// Arithmetic context for GF(q). Elements are handled as dense indices
// 0..q-1, where the index is the base-p value of the coefficient vector;
// index 0 is the zero element and index 1 the unit. Tables are precomputed
// for small fields, larger fields fall back to direct polynomial arithmetic.
// Immutable after construction; all queries are const and thread-safe.
class FieldCtx {
 public:
  std::int64_t q() const { return pp_.q; }
  std::int64_t p() const { return pp_.p; }
  int k() const { return pp_.k; }
  const PrimePower& prime_power() const { return pp_; }

  // Monic modulus of degree k (length k+1). For k = 1 this is the plain
  // x - 0 convention: residue arithmetic mod p.
  const Poly& modulus() const { return modulus_; }

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int mul(int a, int b) const;
  int neg(int a) const;
  int inv(int a) const;  // throws DivisionByZero for a = 0
  int pow(int a, std::int64_t e) const;

  int zero() const { return 0; }
  int one() const { return 1; }

  FieldElem element(int index) const;
  int index(const FieldElem& e) const;
  std::vector<FieldElem> elements() const;  // all q elements, index order

  // Same operations on the coefficient representation.
  FieldElem add(const FieldElem& a, const FieldElem& b) const {
    return element(add(index(a), index(b)));
  }
  FieldElem mul(const FieldElem& a, const FieldElem& b) const {
    return element(mul(index(a), index(b)));
  }
  FieldElem neg(const FieldElem& a) const { return element(neg(index(a))); }
  FieldElem inv(const FieldElem& a) const { return element(inv(index(a))); }

  // Multiplicative order of a nonzero element.
  std::int64_t mult_order(int a) const;

  friend FieldCtx make_field(std::int64_t q);

 private:
  FieldCtx() = default;

  int add_raw(int a, int b) const;
  int mul_raw(int a, int b) const;

  PrimePower pp_;
  Poly modulus_;
  bool tabled_ = false;
  std::vector<int> add_table_;  // q*q
  std::vector<int> mul_table_;  // q*q
  std::vector<int> neg_table_;  // q
  std::vector<int> inv_table_;  // q (entry 0 unused)
};

// Builds GF(q) with the deterministically chosen modulus above.
// Throws NotAPrimePower when q < 2 or q is not a prime power.
FieldCtx make_field(std::int64_t q);

}  // namespace atg

#endif  // ATGRAPH_CORE_GF_HPP
