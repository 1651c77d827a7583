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

#include "core/gf.hpp"

#include <algorithm>
#include <string>

namespace atg {
namespace {

// Largest q for which full add/mul tables are materialized (q^2 ints).
constexpr std::int64_t kTableLimit = 1024;

std::int64_t mod_pow(std::int64_t base, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) r = r * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return r;
}

std::int64_t mod_inv_prime(std::int64_t a, std::int64_t p) {
  return mod_pow(a % p, p - 2, p);
}

int poly_deg(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<int>((r[i + j] + static_cast<std::int64_t>(a[i]) * b[j]) % p);
  }
  poly_trim(r);
  return r;
}

// Remainder of a modulo monic f.
Poly poly_mod(Poly a, const Poly& f, std::int64_t p) {
  const int df = poly_deg(f);
  poly_trim(a);
  while (poly_deg(a) >= df) {
    const int da = poly_deg(a);
    const std::int64_t c = a[da];  // f monic, so the quotient coefficient is c
    for (int i = 0; i <= df; ++i) {
      std::int64_t v = a[da - df + i] - c * f[i] % p;
      a[da - df + i] = static_cast<int>(((v % p) + p) % p);
    }
    poly_trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::int64_t p) {
  return poly_mod(poly_mul(a, b, p), f, p);
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    // Make b monic before reducing.
    Poly bm = b;
    const std::int64_t lead = bm.back();
    if (lead != 1) {
      const std::int64_t li = mod_inv_prime(lead, p);
      for (auto& c : bm) c = static_cast<int>(c * li % p);
    }
    Poly r = poly_mod(a, bm, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    const std::int64_t li = mod_inv_prime(a.back(), p);
    for (auto& c : a) c = static_cast<int>(c * li % p);
  }
  return a;
}

// x^(p^i) mod f via iterated Frobenius, then gcd test against x.
bool is_irreducible(const Poly& f, std::int64_t p, int k) {
  Poly x = {0, 1};
  Poly t = poly_mod(x, f, p);
  for (int i = 1; i <= k / 2; ++i) {
    // t <- t^p mod f
    Poly acc = {1};
    Poly base = t;
    std::int64_t e = p;
    while (e > 0) {
      if (e & 1) acc = poly_mulmod(acc, base, f, p);
      base = poly_mulmod(base, base, f, p);
      e >>= 1;
    }
    t = std::move(acc);
    // gcd(f, t - x) must be constant.
    Poly diff = t;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = static_cast<int>(((diff[1] - 1) % p + p) % p);
    poly_trim(diff);
    Poly g = poly_gcd(f, diff, p);
    if (poly_deg(g) != 0) return false;
  }
  return true;
}

std::vector<int> digits_base_p(std::int64_t value, std::int64_t p, int k) {
  std::vector<int> d(k, 0);
  for (int i = 0; i < k; ++i) {
    d[i] = static_cast<int>(value % p);
    value /= p;
  }
  return d;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::optional<PrimePower> prime_power_decompose(std::int64_t q) {
  if (q < 2) return std::nullopt;
  std::int64_t p = q;
  for (std::int64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  std::int64_t rest = q;
  int k = 0;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) return std::nullopt;
  return PrimePower{p, k, q};
}

Poly find_irreducible(std::int64_t p, int k) {
  if (k < 2) fail(Status::BadArgument, "find_irreducible requires k >= 2");
  std::int64_t count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (std::int64_t c = 0; c < count; ++c) {
    Poly f = digits_base_p(c, p, k);
    f.push_back(1);  // monic
    if (is_irreducible(f, p, k)) return f;
  }
  // Unreachable: an irreducible of every degree exists over every Z_p.
  fail(Status::BadArgument, "no irreducible polynomial found");
}

FieldCtx make_field(std::int64_t q) {
  auto pp = prime_power_decompose(q);
  if (!pp) {
    fail(Status::NotAPrimePower,
         "q = " + std::to_string(q) + " is not a prime power");
  }
  FieldCtx ctx;
  ctx.pp_ = *pp;
  if (pp->k == 1) {
    ctx.modulus_ = {0, 1};  // x: plain residue arithmetic mod p
  } else {
    ctx.modulus_ = find_irreducible(pp->p, pp->k);
  }
  if (q <= kTableLimit) {
    ctx.tabled_ = true;
    const int n = static_cast<int>(q);
    ctx.add_table_.resize(static_cast<std::size_t>(n) * n);
    ctx.mul_table_.resize(static_cast<std::size_t>(n) * n);
    ctx.neg_table_.resize(n);
    ctx.inv_table_.assign(n, 0);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const int s = ctx.add_raw(a, b);
        const int m = ctx.mul_raw(a, b);
        ctx.add_table_[static_cast<std::size_t>(a) * n + b] = s;
        ctx.mul_table_[static_cast<std::size_t>(a) * n + b] = m;
        if (s == 0) ctx.neg_table_[a] = b;
        if (m == 1) ctx.inv_table_[a] = b;
      }
    }
  }
  return ctx;
}

int FieldCtx::add_raw(int a, int b) const {
  if (pp_.k == 1) return static_cast<int>((a + b) % pp_.p);
  std::int64_t r = 0;
  std::int64_t scale = 1;
  std::int64_t av = a, bv = b;
  for (int i = 0; i < pp_.k; ++i) {
    const std::int64_t da = av % pp_.p, db = bv % pp_.p;
    r += (da + db) % pp_.p * scale;
    av /= pp_.p;
    bv /= pp_.p;
    scale *= pp_.p;
  }
  return static_cast<int>(r);
}

int FieldCtx::mul_raw(int a, int b) const {
  if (pp_.k == 1)
    return static_cast<int>(static_cast<std::int64_t>(a) * b % pp_.p);
  const Poly pa = digits_base_p(a, pp_.p, pp_.k);
  const Poly pb = digits_base_p(b, pp_.p, pp_.k);
  const Poly pr = poly_mulmod(pa, pb, modulus_, pp_.p);
  std::int64_t r = 0;
  std::int64_t scale = 1;
  for (int i = 0; i < pp_.k; ++i) {
    if (i < static_cast<int>(pr.size())) r += pr[i] * scale;
    scale *= pp_.p;
  }
  return static_cast<int>(r);
}

int FieldCtx::add(int a, int b) const {
  if (tabled_) return add_table_[static_cast<std::size_t>(a) * pp_.q + b];
  return add_raw(a, b);
}

int FieldCtx::sub(int a, int b) const { return add(a, neg(b)); }

int FieldCtx::mul(int a, int b) const {
  if (tabled_) return mul_table_[static_cast<std::size_t>(a) * pp_.q + b];
  return mul_raw(a, b);
}

int FieldCtx::neg(int a) const {
  if (tabled_) return neg_table_[a];
  if (pp_.k == 1) return static_cast<int>((pp_.p - a) % pp_.p);
  std::int64_t r = 0;
  std::int64_t scale = 1;
  std::int64_t av = a;
  for (int i = 0; i < pp_.k; ++i) {
    const std::int64_t d = av % pp_.p;
    r += (pp_.p - d) % pp_.p * scale;
    av /= pp_.p;
    scale *= pp_.p;
  }
  return static_cast<int>(r);
}

int FieldCtx::inv(int a) const {
  if (a == 0) fail(Status::DivisionByZero, "inverse of zero in GF(q)");
  if (tabled_) return inv_table_[a];
  return pow(a, pp_.q - 2);
}

int FieldCtx::pow(int a, std::int64_t e) const {
  if (e < 0) return pow(inv(a), -e);
  int r = 1;
  int base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

FieldElem FieldCtx::element(int index) const {
  if (index < 0 || index >= pp_.q)
    fail(Status::IndexOutOfRange, "element index out of range");
  return FieldElem{digits_base_p(index, pp_.p, pp_.k)};
}

int FieldCtx::index(const FieldElem& e) const {
  if (static_cast<int>(e.coeffs.size()) != pp_.k)
    fail(Status::ShapeMismatch, "element has wrong coefficient count");
  std::int64_t v = 0;
  std::int64_t scale = 1;
  for (int i = 0; i < pp_.k; ++i) {
    if (e.coeffs[i] < 0 || e.coeffs[i] >= pp_.p)
      fail(Status::BadArgument, "coefficient out of range");
    v += e.coeffs[i] * scale;
    scale *= pp_.p;
  }
  return static_cast<int>(v);
}

std::vector<FieldElem> FieldCtx::elements() const {
  std::vector<FieldElem> out;
  out.reserve(pp_.q);
  for (int i = 0; i < pp_.q; ++i) out.push_back(element(i));
  return out;
}

std::int64_t FieldCtx::mult_order(int a) const {
  if (a == 0) fail(Status::DivisionByZero, "order of zero is undefined");
  std::int64_t ord = 1;
  int t = a;
  while (t != 1) {
    t = mul(t, a);
    ++ord;
  }
  return ord;
}

}  // namespace atg
