/*
 * Copyright 2026 The qcompare Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace qcompare {

// Exception hierarchy. Every error carries a category so the C API and CLI
// can map it onto a stable status code.
enum class ErrorKind {
  kInvalidInput,   // bad shapes, domain violations, failed preconditions
  kNumerical,      // numerical-consistency failures (e.g. probability overshoot)
  kCapacity,       // problem too large for dense construction
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Non-square or mismatched shapes, non-Hermitian inputs.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what)
      : Error(ErrorKind::kInvalidInput, "dimension error: " + what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorKind::kInvalidInput, "domain error: " + what) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what)
      : Error(ErrorKind::kInvalidInput, "precondition error: " + what) {}
};

class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what)
      : Error(ErrorKind::kNumerical, "numerical error: " + what) {}
};

class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what)
      : Error(ErrorKind::kCapacity, "capacity error: " + what) {}
};

}  // namespace qcompare
