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

#ifndef ATGRAPH_CORE_STATUS_HPP
#define ATGRAPH_CORE_STATUS_HPP

#include <stdexcept>
#include <string>

namespace atg {

// Every failure mode of the core library. The values mirror the codes of the
// public C API (see include/atgraph.h), so the wrapper can translate 1:1.
enum class Status {
  Ok = 0,
  NotAPrimePower = 1,
  DimensionTooSmall = 2,
  ParameterTooSmall = 3,
  DivisionByZero = 4,
  IndexOutOfRange = 5,
  SelfLoop = 6,
  Disconnected = 7,
  IdenticalLines = 8,
  NonInvertible = 9,
  ShapeMismatch = 10,
  NotAnAutomorphism = 11,
  BudgetExceeded = 12,
  EpsOutOfRange = 13,
  InexactDivision = 14,
  PrecisionExhausted = 15,
  BadArgument = 16,
  ParseError = 17,
  IoError = 18,
};

const char* status_name(Status s);

class Error : public std::runtime_error {
 public:
  Error(Status status, const std::string& what)
      : std::runtime_error(what), status_(status) {}

  Status status() const noexcept { return status_; }

 private:
  Status status_;
};

[[noreturn]] inline void fail(Status status, const std::string& what) {
  throw Error(status, what);
}

}  // namespace atg

#endif  // ATGRAPH_CORE_STATUS_HPP
