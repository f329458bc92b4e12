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

#include <cstdint>
#include <utility>
#include <vector>

namespace chenbound {

// Deterministic Miller-Rabin for all 64-bit n.
bool is_prime_u64(std::uint64_t n);

// Prime factorization (prime, exponent), ascending. factorize(1) is empty.
std::vector<std::pair<std::uint64_t, int>> factorize_u64(std::uint64_t n);

}  // namespace chenbound
