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

#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace gfra {

// Derives an independent sub-stream seed from a master seed and a key
// (trial index, stream tag, device index, ...) through two splitmix64
// rounds. All randomness in the library flows through this function, so
// results are reproducible for a given master seed regardless of trial
// execution order or thread count.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t key);

// Stream tags used when deriving per-purpose sub-seeds. Keeping every
// purpose on its own stream means e.g. skipping Phase I does not shift
// the Phase II draws.
enum : std::uint64_t {
    kStreamActivity = 0x41,
    kStreamCommonPreamble = 0x42,
    kStreamDevicePreambles = 0x43,
    kStreamPhase1 = 0x44,
    kStreamPhase2 = 0x45,
    kStreamTrial = 0x46,
};

// Deterministic random source. Gaussians come from an explicit Box-Muller
// transform on top of mt19937_64 rather than std::normal_distribution, so
// streams do not depend on the standard library's distribution internals.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform on [0, 1)
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // unbiased integer on [0, bound), bound > 0
    std::uint64_t uniform_below(std::uint64_t bound);

    // standard normal
    double gaussian();

    // circular complex Gaussian with E|x|^2 = variance (real and imaginary
    // parts each carry variance/2)
    std::complex<double> cgaussian(double variance = 1.0);

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace gfra
