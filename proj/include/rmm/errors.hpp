// Copyright 2026 The rmmatch Authors
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

#ifndef RMM_ERRORS_HPP_
#define RMM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace rmm {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// Malformed input document (bad JSON, bad number literal, wrong shape).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation does not hold (asymmetric surplus fed to a
/// solver that requires exchangeability, zero clone factor, oversized oracle
/// input, infeasible matching passed for evaluation, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Exact arithmetic left the supported magnitude range.
class RationalOverflowError : public Error {
 public:
  using Error::Error;
};

/// A solver hit its configured resource budget (branch-and-bound node limit).
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// Reading or writing a file failed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace rmm

#endif  // RMM_ERRORS_HPP_
