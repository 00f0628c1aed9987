// Copyright 2026 The genlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GENLAB_ERRORS_HPP_
#define GENLAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace genlab {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument violates a documented precondition or invariant.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// A chaining rule was applied outside its guarantee (eps >= ln 2).
class ChainHypothesisError : public Error {
 public:
  using Error::Error;
};

// Two distributions handed to a construction are not (eps, delta)-close.
class NotCloseError : public Error {
 public:
  using Error::Error;
};

// p has mass on an outcome where q has none (KL undefined).
class SupportMismatchError : public Error {
 public:
  using Error::Error;
};

// A sample is not labelled consistently with any hypothesis in the
// scheme's target class.
class RealizabilityError : public Error {
 public:
  using Error::Error;
};

// An exact verifier was asked about a mechanism without an exact PMF.
class NoExactPmfError : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration would exceed the configured cap.
class EnumerationCapError : public Error {
 public:
  using Error::Error;
};

// A log-likelihood average diverged (some outcome has probability zero).
class DivergenceError : public Error {
 public:
  using Error::Error;
};

// No eps below the search ceiling satisfies the requested certificate.
class UnboundedEpsError : public Error {
 public:
  using Error::Error;
};

// Numerical integration failed to reach the requested tolerance.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

}  // namespace genlab

#endif  // GENLAB_ERRORS_HPP_
