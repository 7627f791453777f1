// Copyright 2026 The qassert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QASSERT_RNG_HPP_
#define QASSERT_RNG_HPP_

#include <array>
#include <cstdint>

namespace qassert {

// Philox4x32-10 counter-based generator (Salmon et al., "Parallel random
// numbers: as easy as 1, 2, 3"). Pure integer arithmetic, so sampled counts
// are bit-identical across platforms and independent of execution order.
//
// The 128-bit counter is split as (stream, block): `stream` selects an
// independent substream (one per measurement setting / sweep repetition) and
// `block` advances within it. The 64-bit user seed is the Philox key.
struct Philox4x32 {
  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

  static std::array<std::uint32_t, 4> block(std::uint64_t key,
                                            std::uint64_t stream,
                                            std::uint64_t block_index) {
    std::uint32_t c0 = static_cast<std::uint32_t>(block_index);
    std::uint32_t c1 = static_cast<std::uint32_t>(block_index >> 32);
    std::uint32_t c2 = static_cast<std::uint32_t>(stream);
    std::uint32_t c3 = static_cast<std::uint32_t>(stream >> 32);
    std::uint32_t k0 = static_cast<std::uint32_t>(key);
    std::uint32_t k1 = static_cast<std::uint32_t>(key >> 32);
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        k0 += kWeyl0;
        k1 += kWeyl1;
      }
      const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * c0;
      const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * c2;
      const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
      const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
      const std::uint32_t n0 = hi1 ^ c1 ^ k0;
      const std::uint32_t n2 = hi0 ^ c3 ^ k1;
      c0 = n0;
      c1 = lo1;
      c2 = n2;
      c3 = lo0;
    }
    return {c0, c1, c2, c3};
  }
};

// Stream view over Philox blocks: 2 x 64-bit outputs per block.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : key_(seed), stream_(stream) {}

  std::uint64_t next_u64() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const auto b = Philox4x32::block(key_, stream_, block_index_++);
    spare_ = (static_cast<std::uint64_t>(b[3]) << 32) | b[2];
    have_spare_ = true;
    return (static_cast<std::uint64_t>(b[1]) << 32) | b[0];
  }

  // Uniform double in [0, 1) from the top 53 bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  std::uint64_t seed() const noexcept { return key_; }
  std::uint64_t stream() const noexcept { return stream_; }

 private:
  std::uint64_t key_;
  std::uint64_t stream_;
  std::uint64_t block_index_ = 0;
  std::uint64_t spare_ = 0;
  bool have_spare_ = false;
};

// SplitMix64 finalizer; used to derive child seeds, e.g. one master seed
// fanning out into per-sweep-point run seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace qassert

#endif  // QASSERT_RNG_HPP_
