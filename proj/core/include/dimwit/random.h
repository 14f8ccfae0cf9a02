// Copyright 2026 The dimwit Authors
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

#ifndef DIMWIT_RANDOM_H
#define DIMWIT_RANDOM_H

#include <cstdint>
#include <random>
#include <string_view>

namespace dimwit {

/// Stream tags for seed splitting. Every random draw in the library comes from a
/// generator seeded by derive_seed(top_level_seed, tag, index).
namespace seed_tag {
inline constexpr std::string_view kBoundsRestart = "bounds.restart";
inline constexpr std::string_view kSampleCounts = "stats.sample_counts";
}  // namespace seed_tag

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Independent child seed for (seed, tag, index).
std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag, std::uint64_t index);

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Binomial(n, p) draw: sequential inversion when n * min(p, 1-p) < 10,
/// otherwise Hormann's BTRD transformed rejection. Portable and deterministic.
std::uint64_t sample_binomial(Rng &rng, std::uint64_t n, double p);

}  // namespace dimwit

#endif
