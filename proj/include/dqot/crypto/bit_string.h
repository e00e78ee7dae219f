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

#ifndef DQOT_CRYPTO_BIT_STRING_H_
#define DQOT_CRYPTO_BIT_STRING_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "dqot/crypto/random.h"

namespace dqot {

// A bit string of explicit length, stored most-significant-bit first. Bits
// past the declared length in the final byte are always zero, so byte-wise
// equality is bit-wise equality.
class BitString {
 public:
  BitString() = default;

  static BitString Zeros(size_t bits);
  static BitString Random(RandomSource& rng, size_t bits);
  // Takes the first `bits` bits of `bytes`; trailing bits are cleared.
  static BitString FromBytes(std::span<const uint8_t> bytes, size_t bits);
  static BitString FromBytes(std::span<const uint8_t> bytes) {
    return FromBytes(bytes, bytes.size() * 8);
  }
  // Hex digits, 4 bits each. An odd digit count is allowed.
  static absl::StatusOr<BitString> FromHex(std::string_view hex);
  static BitString FromBit(uint8_t bit);

  size_t size() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  const std::vector<uint8_t>& bytes() const { return bytes_; }

  uint8_t bit(size_t i) const;
  void set_bit(size_t i, uint8_t value);

  // Lower-case hex, two digits per stored byte.
  std::string ToHex() const;

  BitString Slice(size_t offset, size_t length) const;
  BitString Concat(const BitString& tail) const;

  // Requires equal lengths.
  BitString& operator^=(const BitString& other);
  friend BitString operator^(BitString a, const BitString& b) {
    a ^= b;
    return a;
  }

  friend bool operator==(const BitString& a, const BitString& b) = default;

 private:
  BitString(std::vector<uint8_t> bytes, size_t bits)
      : bytes_(std::move(bytes)), bits_(bits) {}
  void ClearTail();

  std::vector<uint8_t> bytes_;
  size_t bits_ = 0;
};

// Right-pads `message` with a single 1 followed by 0s up to `block_bits`.
// The message must be strictly shorter than the block.
absl::StatusOr<BitString> PadMessage(const BitString& message,
                                     size_t block_bits);
// Inverse of PadMessage.
absl::StatusOr<BitString> UnpadMessage(const BitString& block);

}  // namespace dqot

#endif  // DQOT_CRYPTO_BIT_STRING_H_
