// Copyright 2026 The cqchan authors
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

#ifndef CQCHAN_ERRORS_HPP_
#define CQCHAN_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace cqchan {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid data handed to an operation: malformed files, dimension
/// mismatches, operators that fail their validity checks.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(what) {}
};

/// A size guard tripped: the requested instance is larger than the
/// exact algorithms are willing to handle.
class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& what) : Error(what) {}
};

/// A numerical postcondition that should hold by construction failed,
/// e.g. an inequality the algorithm guarantees was violated beyond
/// tolerance.
class CheckError : public Error {
 public:
  explicit CheckError(const std::string& what) : Error(what) {}
};

}  // namespace cqchan

#endif  // CQCHAN_ERRORS_HPP_
