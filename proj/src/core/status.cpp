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

#include "core/status.hpp"

namespace atg {

const char* status_name(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::NotAPrimePower: return "not-a-prime-power";
    case Status::DimensionTooSmall: return "dimension-too-small";
    case Status::ParameterTooSmall: return "parameter-too-small";
    case Status::DivisionByZero: return "division-by-zero";
    case Status::IndexOutOfRange: return "index-out-of-range";
    case Status::SelfLoop: return "self-loop";
    case Status::Disconnected: return "disconnected";
    case Status::IdenticalLines: return "identical-lines";
    case Status::NonInvertible: return "non-invertible";
    case Status::ShapeMismatch: return "shape-mismatch";
    case Status::NotAnAutomorphism: return "not-an-automorphism";
    case Status::BudgetExceeded: return "budget-exceeded";
    case Status::EpsOutOfRange: return "eps-out-of-range";
    case Status::InexactDivision: return "inexact-division";
    case Status::PrecisionExhausted: return "precision-exhausted";
    case Status::BadArgument: return "bad-argument";
    case Status::ParseError: return "parse-error";
    case Status::IoError: return "io-error";
  }
  return "unknown";
}

}  // namespace atg
