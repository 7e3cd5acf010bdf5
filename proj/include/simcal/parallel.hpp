// simcal/parallel.hpp

// Copyright 2026 The simcal authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SIMCAL_PARALLEL_HPP_
#define SIMCAL_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace simcal {

// Worker cap from SIMCAL_THREADS; 0 or unset means hardware concurrency.
int thread_budget();

// Runs fn(i) for i in [0, n). Workers own disjoint index ranges and only
// write disjoint outputs, so results match the sequential order exactly.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace simcal

#endif  // SIMCAL_PARALLEL_HPP_
