// Copyright 2026 The Pokerforge Authors
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

#ifndef POKERFORGE_COMMON_RNG_H_
#define POKERFORGE_COMMON_RNG_H_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace pokerforge {

// Seeds are kept below 2^62 so they survive every text and JSON codec as
// plain signed integers.
inline constexpr std::uint64_t kSeedMask = (std::uint64_t{1} << 62) - 1;

std::uint64_t SplitMix64(std::uint64_t x);

// Derives a child seed from a parent seed and a list of discriminators.
std::uint64_t DeriveSeed(std::uint64_t parent,
                         std::initializer_list<std::uint64_t> salt);

// Portable random source. std::mt19937_64 output is fixed by the standard;
// the distributions below are ours because the standard library ones are
// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }
  // Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t Below(std::uint64_t bound);
  // Uniform integer in [lo, hi].
  std::int64_t Between(std::int64_t lo, std::int64_t hi);
  // Uniform double in [0, 1).
  double Unit();
  bool Chance(double p) { return Unit() < p; }

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(Below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pokerforge

#endif  // POKERFORGE_COMMON_RNG_H_
