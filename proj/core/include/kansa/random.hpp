// Copyright 2026 The kansa-tps Authors
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
#include <random>
#include <string_view>

namespace kansa {

/// SplitMix64 finalizer. Used to derive child seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Deterministic uniform generator over mt19937_64. The engine output is
/// mapped to [0, 1) by taking the top 53 bits, so sequences are identical on
/// every conforming platform (std::uniform_real_distribution is not).
class SeededGenerator {
 public:
  static constexpr std::string_view kName = "mt19937_64";

  explicit SeededGenerator(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Seed of the child generator for `index`:
  /// splitmix64(seed ^ splitmix64(index)).
  static std::uint64_t child_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ splitmix64(index));
  }
  SeededGenerator child(std::uint64_t index) const { return SeededGenerator(child_seed(seed_, index)); }

  /// Uniform real in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace kansa
