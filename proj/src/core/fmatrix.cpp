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

#include "core/fmatrix.hpp"

namespace atg {

int rref(const FieldCtx& f, FMatrix& m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    const int scale = f.inv(m[rank][col]);
    for (int c = col; c < cols; ++c) m[rank][c] = f.mul(m[rank][c], scale);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const int factor = m[r][col];
      for (int c = col; c < cols; ++c)
        m[r][c] = f.sub(m[r][c], f.mul(factor, m[rank][c]));
    }
    ++rank;
  }
  return rank;
}

int rank_of(const FieldCtx& f, FMatrix m) { return rref(f, m); }

FMatrix mat_mul(const FieldCtx& f, const FMatrix& a, const FMatrix& b) {
  const int n = static_cast<int>(a.size());
  const int k = static_cast<int>(b.size());
  const int m = static_cast<int>(b[0].size());
  FMatrix r(n, std::vector<int>(m, 0));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (int j = 0; j < m; ++j)
        r[i][j] = f.add(r[i][j], f.mul(a[i][t], b[t][j]));
    }
  return r;
}

FMatrix mat_identity(int d) {
  FMatrix m(d, std::vector<int>(d, 0));
  for (int i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

std::vector<int> vec_mat_mul(const FieldCtx& f, const std::vector<int>& v,
                             const FMatrix& m) {
  const int d = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  std::vector<int> r(cols, 0);
  for (int i = 0; i < d; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < cols; ++j) r[j] = f.add(r[j], f.mul(v[i], m[i][j]));
  }
  return r;
}

bool is_invertible(const FieldCtx& f, const FMatrix& m) {
  return !m.empty() && m.size() == m[0].size() &&
         rank_of(f, m) == static_cast<int>(m.size());
}

}  // namespace atg
