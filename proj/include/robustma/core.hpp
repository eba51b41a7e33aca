// SPDX-License-Identifier: Apache-2.0
//
// robustma: movable-antenna placement and robust beamforming under imperfect CSI
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "robustma/errors.hpp"

namespace robustma {

using cxd = std::complex<double>;
using cvec = std::vector<cxd>;

/// Sum of squared magnitudes.
inline double squared_norm(const cvec& v) {
    double acc = 0.0;
    for (const auto& x : v) acc += std::norm(x);
    return acc;
}

inline double vec_norm(const cvec& v) { return std::sqrt(squared_norm(v)); }

/// Hermitian inner product a^H b.
inline cxd vdot(const cvec& a, const cvec& b) {
    if (a.size() != b.size())
        throw invalid_parameter("vdot: dimension mismatch (" + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()) + ")");
    cxd acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

inline double to_db(double linear) { return 10.0 * std::log10(linear); }
inline double from_db(double db) { return std::pow(10.0, db / 10.0); }

namespace detail {

// splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ULL;

} // namespace detail

/// Deterministic per-task seed: stream k of the splitmix64 sequence rooted at
/// `base`. Chainable, so derive_seed(derive_seed(b, a), c) gives nested streams.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    return detail::mix64(base + (stream + 1) * detail::golden_gamma);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
    return derive_seed(derive_seed(base, a), b);
}

/// Static partition of [0, n) over `threads` workers. fn(i) must write only
/// state owned by index i; results are then independent of scheduling order.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
    std::exception_ptr first_failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            const std::size_t lo = n * w / workers;
            const std::size_t hi = n * (w + 1) / workers;
            try {
                for (std::size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!first_failure) first_failure = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_failure) std::rethrow_exception(first_failure);
}

} // namespace robustma
