// Copyright 2026 The dftmul Authors.
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

#ifndef DFTMUL_ERRORS_HPP_
#define DFTMUL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace dftmul {

/// Arithmetic outside the domain of an operation: mismatched fields, zero
/// divisors, characteristic dividing an order.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An engine was asked to run on a field it cannot handle (e.g. a missing
/// root of unity, or the wrong characteristic).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A DFT plan does not fit the transform it is applied to.
class PlanError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// API misuse, e.g. unbalanced ledger levels or malformed CLI input.
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dftmul

#endif  // DFTMUL_ERRORS_HPP_
