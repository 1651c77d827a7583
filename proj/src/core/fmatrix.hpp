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

#ifndef ATGRAPH_CORE_FMATRIX_HPP
#define ATGRAPH_CORE_FMATRIX_HPP

#include <vector>

#include "core/gf.hpp"

namespace atg {

// Dense matrix over GF(q); entries are element indices of a FieldCtx.
using FMatrix = std::vector<std::vector<int>>;

// In-place reduced row echelon form; returns the rank.
int rref(const FieldCtx& f, FMatrix& m);

int rank_of(const FieldCtx& f, FMatrix m);

FMatrix mat_mul(const FieldCtx& f, const FMatrix& a, const FMatrix& b);

FMatrix mat_identity(int d);

// Row vector times matrix.
std::vector<int> vec_mat_mul(const FieldCtx& f, const std::vector<int>& v,
                             const FMatrix& m);

bool is_invertible(const FieldCtx& f, const FMatrix& m);

}  // namespace atg

#endif  // ATGRAPH_CORE_FMATRIX_HPP
