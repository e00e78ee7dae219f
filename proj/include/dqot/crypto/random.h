/*
 * Copyright 2026 The dqot Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef DQOT_CRYPTO_RANDOM_H_
#define DQOT_CRYPTO_RANDOM_H_

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace dqot {

// Source of uniformly random bytes. Every randomized operation in the library
// takes one of these explicitly so tests can script the values it produces.
class RandomSource {
 public:
  virtual ~RandomSource() = default;

  virtual void Fill(std::span<uint8_t> out) = 0;

  uint8_t Byte();
  // A single uniform bit in {0, 1}.
  uint8_t Bit();
  uint64_t Uint64();
};

// Hash-based deterministic generator: SHA-256(seed || counter) blocks.
//
// Seeded from a 64-bit value plus a label (reproducible runs) or from the
// operating system entropy pool. The output is fully determined by the seed
// material, which is what replay-deterministic transcripts rely on.
class Drbg final : public RandomSource {
 public:
  Drbg(uint64_t seed, std::string_view label);
  static Drbg FromEntropy();

  void Fill(std::span<uint8_t> out) override;

 private:
  Drbg() = default;
  void Refill();

  std::array<uint8_t, 32> key_{};
  uint64_t counter_ = 0;
  std::array<uint8_t, 32> block_{};
  size_t used_ = 32;
};

// Uniform integer in [0, bound) by rejection sampling. bound must be > 0.
mpz_class RandomBelow(RandomSource& rng, const mpz_class& bound);
// Uniform integer in [1, bound). bound must be > 1.
mpz_class RandomNonzeroBelow(RandomSource& rng, const mpz_class& bound);
// Uniform integer with exactly `bits` bits (top bit set).
mpz_class RandomExactBits(RandomSource& rng, size_t bits);

}  // namespace dqot

#endif  // DQOT_CRYPTO_RANDOM_H_
