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

#include "dqot/crypto/bit_string.h"

#include <cassert>

#include "dqot/util/errors.h"

namespace dqot {

BitString BitString::Zeros(size_t bits) {
  return BitString(std::vector<uint8_t>((bits + 7) / 8, 0), bits);
}

BitString BitString::Random(RandomSource& rng, size_t bits) {
  BitString out = Zeros(bits);
  rng.Fill(out.bytes_);
  out.ClearTail();
  return out;
}

BitString BitString::FromBytes(std::span<const uint8_t> bytes, size_t bits) {
  assert(bits <= bytes.size() * 8);
  size_t n = (bits + 7) / 8;
  BitString out(std::vector<uint8_t>(bytes.begin(), bytes.begin() + n), bits);
  out.ClearTail();
  return out;
}

absl::StatusOr<BitString> BitString::FromHex(std::string_view hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  BitString out = Zeros(hex.size() * 4);
  for (size_t i = 0; i < hex.size(); ++i) {
    int v = nibble(hex[i]);
    if (v < 0) return ParameterError("invalid hex digit");
    out.bytes_[i / 2] |= static_cast<uint8_t>(i % 2 == 0 ? v << 4 : v);
  }
  return out;
}

BitString BitString::FromBit(uint8_t bit) {
  BitString out = Zeros(1);
  out.set_bit(0, bit);
  return out;
}

uint8_t BitString::bit(size_t i) const {
  assert(i < bits_);
  return (bytes_[i / 8] >> (7 - i % 8)) & 1;
}

void BitString::set_bit(size_t i, uint8_t value) {
  assert(i < bits_);
  uint8_t mask = static_cast<uint8_t>(0x80 >> (i % 8));
  if (value & 1) {
    bytes_[i / 8] |= mask;
  } else {
    bytes_[i / 8] &= static_cast<uint8_t>(~mask);
  }
}

std::string BitString::ToHex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (uint8_t b : bytes_) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

BitString BitString::Slice(size_t offset, size_t length) const {
  assert(offset + length <= bits_);
  BitString out = Zeros(length);
  if (offset % 8 == 0) {
    for (size_t i = 0; i < out.bytes_.size(); ++i) {
      out.bytes_[i] = bytes_[offset / 8 + i];
    }
    out.ClearTail();
    return out;
  }
  for (size_t i = 0; i < length; ++i) out.set_bit(i, bit(offset + i));
  return out;
}

BitString BitString::Concat(const BitString& tail) const {
  BitString out = Zeros(bits_ + tail.bits_);
  if (bits_ % 8 == 0) {
    std::copy(bytes_.begin(), bytes_.end(), out.bytes_.begin());
    std::copy(tail.bytes_.begin(), tail.bytes_.end(),
              out.bytes_.begin() + bytes_.size());
    return out;
  }
  std::copy(bytes_.begin(), bytes_.end(), out.bytes_.begin());
  for (size_t i = 0; i < tail.bits_; ++i) out.set_bit(bits_ + i, tail.bit(i));
  return out;
}

BitString& BitString::operator^=(const BitString& other) {
  assert(bits_ == other.bits_);
  for (size_t i = 0; i < bytes_.size(); ++i) bytes_[i] ^= other.bytes_[i];
  return *this;
}

void BitString::ClearTail() {
  if (bits_ % 8 != 0 && !bytes_.empty()) {
    bytes_.back() &= static_cast<uint8_t>(0xff << (8 - bits_ % 8));
  }
}

absl::StatusOr<BitString> PadMessage(const BitString& message,
                                     size_t block_bits) {
  if (message.size() >= block_bits) {
    return ParameterError("message does not fit the block with its padding");
  }
  BitString out = message.Concat(BitString::Zeros(block_bits - message.size()));
  out.set_bit(message.size(), 1);
  return out;
}

absl::StatusOr<BitString> UnpadMessage(const BitString& block) {
  size_t i = block.size();
  while (i > 0 && block.bit(i - 1) == 0) --i;
  if (i == 0) return ParameterError("block carries no padding marker");
  return block.Slice(0, i - 1);
}

}  // namespace dqot
