// Copyright 2026 The qkdkr Authors
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


#ifndef QKDKR_PARALLEL_H_
#define QKDKR_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace qkdkr {

// Worker count: QKDKR_THREADS if set to a positive integer, otherwise
// std::thread::hardware_concurrency() (at least 1).
std::size_t ThreadCount();

// Calls body(i) for every i in [0, n). Iterations may run concurrently and must
// write only to their own slots. The first exception thrown by any iteration
// (lowest index) is rethrown after all workers finish.
void ParallelFor(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace qkdkr

#endif  // QKDKR_PARALLEL_H_
