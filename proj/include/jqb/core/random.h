// Copyright 2026 The jqbattery Authors
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

#ifndef JQB_CORE_RANDOM_H
#define JQB_CORE_RANDOM_H

#include <cstdint>
#include <random>

namespace jqb {

/// splitmix64 finalizer of (master, stream): independent seeds for
/// substreams of one master seed.
uint64_t derive_seed(uint64_t master, uint64_t stream);

/// Seeded generator with the few draws the simulators need.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed), seed_(seed) {
    }

    uint64_t seed() const {
        return seed_;
    }
    /// A generator for substream `stream` of this generator's seed. Does not
    /// advance this generator.
    Rng substream(uint64_t stream) const {
        return Rng(derive_seed(seed_, stream));
    }

    /// Uniform in [0, 1).
    double uniform() {
        return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
    }
    /// Uniform integer in [0, n).
    int below(int n) {
        return std::uniform_int_distribution<int>(0, n - 1)(engine_);
    }
    double normal() {
        return std::normal_distribution<double>(0.0, 1.0)(engine_);
    }
    std::mt19937_64 &engine() {
        return engine_;
    }

   private:
    std::mt19937_64 engine_;
    uint64_t seed_;
};

}  // namespace jqb

#endif
