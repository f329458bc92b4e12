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

// Serial, whole-range implementations of the sieve kernels. They hold the
// full range in memory and share no code with the segmented versions; tests
// and the benchmark compare the two.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "chenbound/kernels.hpp"

namespace chenbound::reference {

using kernels::u64;

std::vector<u64> sieve_primes(u64 x);
u64 count_primes(u64 lo, u64 hi);
u64 pi_trial_division(u64 x);
std::vector<std::pair<u64, int>> factorize_trial(u64 n);
long double theta_long_double(u64 x);
std::vector<kernels::ReciprocalSum> reciprocal_sums(const std::vector<u64>& bounds_sorted);
kernels::SquarefreeAccum squarefree_sums(u64 x);
kernels::GapScan gap_scan(u64 lo, u64 hi, u64 num, u64 den);

}  // namespace chenbound::reference
