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

#include "dqot/crypto/random.h"

#include <openssl/rand.h>
#include <openssl/sha.h>

#include <cstring>
#include <vector>

#include "dqot/crypto/bigint.h"

namespace dqot {

uint8_t RandomSource::Byte() {
  uint8_t b;
  Fill(std::span<uint8_t>(&b, 1));
  return b;
}

uint8_t RandomSource::Bit() { return Byte() & 1; }

uint64_t RandomSource::Uint64() {
  std::array<uint8_t, 8> buf;
  Fill(buf);
  uint64_t v = 0;
  for (uint8_t b : buf) v = (v << 8) | b;
  return v;
}

Drbg::Drbg(uint64_t seed, std::string_view label) {
  std::vector<uint8_t> material;
  material.reserve(8 + label.size());
  for (int i = 7; i >= 0; --i) material.push_back((seed >> (8 * i)) & 0xff);
  material.insert(material.end(), label.begin(), label.end());
  SHA256(material.data(), material.size(), key_.data());
}

Drbg Drbg::FromEntropy() {
  Drbg drbg;
  // RAND_bytes only fails when the OS pool is unavailable; fall back to
  // hashing whatever is in the key rather than aborting.
  if (RAND_bytes(drbg.key_.data(), static_cast<int>(drbg.key_.size())) != 1) {
    SHA256(drbg.key_.data(), drbg.key_.size(), drbg.key_.data());
  }
  return drbg;
}

void Drbg::Refill() {
  uint8_t input[40];
  std::memcpy(input, key_.data(), 32);
  for (int i = 0; i < 8; ++i) input[32 + i] = (counter_ >> (56 - 8 * i)) & 0xff;
  ++counter_;
  SHA256(input, sizeof(input), block_.data());
  used_ = 0;
}

void Drbg::Fill(std::span<uint8_t> out) {
  size_t pos = 0;
  while (pos < out.size()) {
    if (used_ == block_.size()) Refill();
    size_t take = std::min(out.size() - pos, block_.size() - used_);
    std::memcpy(out.data() + pos, block_.data() + used_, take);
    used_ += take;
    pos += take;
  }
}

mpz_class RandomBelow(RandomSource& rng, const mpz_class& bound) {
  size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  size_t bytes = (bits + 7) / 8;
  std::vector<uint8_t> buf(bytes);
  uint8_t top_mask = static_cast<uint8_t>(0xff >> (8 * bytes - bits));
  while (true) {
    rng.Fill(buf);
    buf[0] &= top_mask;
    mpz_class candidate = BigIntFromBytes(buf);
    if (candidate < bound) return candidate;
  }
}

mpz_class RandomNonzeroBelow(RandomSource& rng, const mpz_class& bound) {
  while (true) {
    mpz_class v = RandomBelow(rng, bound);
    if (v != 0) return v;
  }
}

mpz_class RandomExactBits(RandomSource& rng, size_t bits) {
  size_t bytes = (bits + 7) / 8;
  std::vector<uint8_t> buf(bytes);
  rng.Fill(buf);
  size_t excess = 8 * bytes - bits;
  buf[0] &= static_cast<uint8_t>(0xff >> excess);
  buf[0] |= static_cast<uint8_t>(0x80 >> excess);
  return BigIntFromBytes(buf);
}

}  // namespace dqot
