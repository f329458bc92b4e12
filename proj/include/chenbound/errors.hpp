// Copyright 2026 The chenbound Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace chenbound {

// Argument outside the mathematical domain of an evaluator.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Argument above what the sieve-backed tables of this build support.
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

// Request exceeds a configured memory/time limit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A theorem's hypotheses do not hold for the supplied parameters.
class ConditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed configuration or command line.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace chenbound
