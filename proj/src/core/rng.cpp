// gfra - link-level simulation and solvers for grant-free random access
// Copyright (C) 2026 the gfra authors
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

#include "core/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gfra {

namespace {

std::uint64_t splitmix64(std::uint64_t &state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t key) {
    std::uint64_t state = seed ^ (0x9e3779b97f4a7c15ULL * (key + 1));
    splitmix64(state);
    return splitmix64(state);
}

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
    if (bound == 0)
        throw std::invalid_argument("uniform_below: bound must be positive");
    // rejection to avoid modulo bias
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do {
        r = next_u64();
    } while (r >= limit);
    return r % bound;
}

double Rng::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // Box-Muller; u1 in (0, 1] keeps the log finite
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

std::complex<double> Rng::cgaussian(double variance) {
    const double scale = std::sqrt(0.5 * variance);
    const double re = gaussian();
    const double im = gaussian();
    return {scale * re, scale * im};
}

} // namespace gfra
