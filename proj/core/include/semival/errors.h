// Copyright 2026 The Semival Authors
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

#ifndef SEMIVAL_ERRORS_H_
#define SEMIVAL_ERRORS_H_

#include <stdexcept>
#include <string>

namespace semival {

// An exact computation would need to enumerate more coalitions than the
// configured enumeration cap allows.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// A sample batch does not cover every (size, player) cell required by the
// requested estimator. The message names the missing cells.
class CoverageError : public std::runtime_error {
 public:
  explicit CoverageError(const std::string& what) : std::runtime_error(what) {}
};

// An operation's structural assumption does not hold for the given input.
// The message names the offending player/coalition.
class AssumptionError : public std::runtime_error {
 public:
  explicit AssumptionError(const std::string& what)
      : std::runtime_error(what) {}
};

// The requested closed form is not derived for this weight scheme.
class NotDerivedError : public std::runtime_error {
 public:
  explicit NotDerivedError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace semival

#endif  // SEMIVAL_ERRORS_H_
