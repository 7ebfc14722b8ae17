// Copyright 2026 The Bicap Authors
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

#ifndef BICAP_ERRORS_HPP
#define BICAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bicap {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates a documented precondition (negative entry where a
/// nonnegative act is required, K not disjoint from A, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The ground set is too large for the requested tabulation or path.
class CapacityLimitError : public Error {
 public:
  using Error::Error;
};

/// A 2-additive-only formula received a representation with support above
/// order 2.
class NotTwoAdditiveError : public Error {
 public:
  using Error::Error;
};

/// A bipolar capacity does not satisfy the unambiguity condition and cannot be
/// reduced to a bi-capacity.
class AmbiguousBipolarError : public Error {
 public:
  using Error::Error;
};

/// Objects built over different ground sets were combined.
class GroundSetMismatchError : public Error {
 public:
  using Error::Error;
};

/// Malformed interchange data.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace bicap

#endif  // BICAP_ERRORS_HPP
