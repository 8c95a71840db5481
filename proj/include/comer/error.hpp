// Copyright 2026 The comer-cycles Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace comer {

enum class ErrorKind {
  NotPrime,
  NotDivisor,
  NotPrimitiveRoot,
  TooManyCosets,
  NotSymmetric,
  NotAsymmetric,
  Lemma2Violation,
};

const char* to_string(ErrorKind kind);

// All library failures are reported through this type. Lemma2Violation is an
// internal invariant failure; every other kind is a rejected input.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  bool is_invariant_violation() const noexcept {
    return kind_ == ErrorKind::Lemma2Violation;
  }

 private:
  ErrorKind kind_;
};

}  // namespace comer
