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

#include "dqot/harness/wire.h"

#include <algorithm>
#include <string>

#include "dqot/crypto/bigint.h"
#include "dqot/util/errors.h"
#include "dqot/util/status_macros.h"

namespace dqot {
namespace {

constexpr uint8_t kLastMessageType =
    static_cast<uint8_t>(MessageType::kFilteredCiphertext);
// Upper bound on a single length-prefixed field.
constexpr uint32_t kMaxFieldBytes = 1u << 24;

void AppendU32(std::vector<uint8_t>& out, uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) {
    out.push_back(static_cast<uint8_t>(v >> shift));
  }
}

void AppendBytes(std::vector<uint8_t>& out, const std::vector<uint8_t>& b) {
  out.insert(out.end(), b.begin(), b.end());
}

}  // namespace

WireWriter::WireWriter(Role from, MessageType type) {
  out_.push_back(static_cast<uint8_t>(from));
  out_.push_back(static_cast<uint8_t>(type));
}

WireWriter& WireWriter::PutU32(uint32_t v) {
  AppendU32(out_, v);
  return *this;
}

WireWriter& WireWriter::PutBit(uint8_t bit) {
  out_.push_back(bit & 1);
  return *this;
}

WireWriter& WireWriter::PutBigInt(const mpz_class& v) {
  size_t width = ByteLength(v);
  AppendU32(out_, static_cast<uint32_t>(width));
  AppendBytes(out_, BigIntToBytes(v, width));
  return *this;
}

WireWriter& WireWriter::PutElement(const GroupElement& e,
                                   const GroupParams& params) {
  AppendBytes(out_, EncodeElement(e, params));
  return *this;
}

WireWriter& WireWriter::PutScalar(const Scalar& s, const GroupParams& params) {
  AppendBytes(out_, BigIntToBytes(s.value, ByteLength(params.q())));
  return *this;
}

WireWriter& WireWriter::PutBits(const BitString& bits) {
  AppendU32(out_, static_cast<uint32_t>(bits.size()));
  AppendBytes(out_, bits.bytes());
  return *this;
}

WireWriter& WireWriter::PutCiphertext(const AheCiphertext& c,
                                      const PaillierPublicKey& pk) {
  AppendBytes(out_, pk.Serialize(c));
  return *this;
}

absl::StatusOr<WireReader> WireReader::Open(std::span<const uint8_t> frame,
                                            Role from, MessageType type) {
  ASSIGN_OR_RETURN(auto header, PeekHeader(frame));
  if (header.first != from) {
    return ProtocolViolationError(std::string("frame from ")
                                      .append(RoleName(header.first))
                                      .append(", expected ")
                                      .append(RoleName(from)));
  }
  if (header.second != type) {
    return ProtocolViolationError(
        "unexpected message type " +
        std::to_string(static_cast<int>(header.second)) + ", expected " +
        std::to_string(static_cast<int>(type)));
  }
  WireReader reader(frame);
  reader.offset_ = 2;
  return reader;
}

absl::StatusOr<std::span<const uint8_t>> WireReader::Take(size_t n) {
  if (n > remaining()) return ProtocolViolationError("truncated frame");
  std::span<const uint8_t> out = data_.subspan(offset_, n);
  offset_ += n;
  return out;
}

absl::StatusOr<uint32_t> WireReader::GetU32() {
  ASSIGN_OR_RETURN(auto b, Take(4));
  return (uint32_t{b[0]} << 24) | (uint32_t{b[1]} << 16) |
         (uint32_t{b[2]} << 8) | uint32_t{b[3]};
}

absl::StatusOr<uint8_t> WireReader::GetBit() {
  ASSIGN_OR_RETURN(auto b, Take(1));
  if (b[0] > 1) return ProtocolViolationError("bit field is not 0 or 1");
  return b[0];
}

absl::StatusOr<mpz_class> WireReader::GetBigInt() {
  ASSIGN_OR_RETURN(uint32_t width, GetU32());
  if (width > kMaxFieldBytes) return ProtocolViolationError("integer too long");
  ASSIGN_OR_RETURN(auto b, Take(width));
  return BigIntFromBytes(b);
}

absl::StatusOr<GroupElement> WireReader::GetElement(const GroupParams& params) {
  ASSIGN_OR_RETURN(auto b, Take(params.element_bytes()));
  return DecodeElement(b, params);
}

absl::StatusOr<Scalar> WireReader::GetScalar(const GroupParams& params) {
  ASSIGN_OR_RETURN(auto b, Take(ByteLength(params.q())));
  mpz_class v = BigIntFromBytes(b);
  if (v >= params.q()) return ProtocolViolationError("scalar out of range");
  return Scalar{v};
}

absl::StatusOr<BitString> WireReader::GetBits() {
  ASSIGN_OR_RETURN(uint32_t bits, GetU32());
  if (bits / 8 > kMaxFieldBytes) {
    return ProtocolViolationError("bit string too long");
  }
  ASSIGN_OR_RETURN(auto b, Take((bits + 7) / 8));
  BitString out = BitString::FromBytes(b, bits);
  if (out.bytes().size() != b.size() ||
      !std::equal(b.begin(), b.end(), out.bytes().begin())) {
    return ProtocolViolationError("nonzero padding bits in bit string");
  }
  return out;
}

absl::StatusOr<AheCiphertext> WireReader::GetCiphertext(
    const PaillierPublicKey& pk) {
  ASSIGN_OR_RETURN(auto b, Take(pk.ciphertext_bytes()));
  return pk.Deserialize(b);
}

absl::Status WireReader::Done() const {
  if (remaining() != 0) {
    return ProtocolViolationError("trailing bytes after the last field");
  }
  return absl::OkStatus();
}

absl::StatusOr<std::pair<Role, MessageType>> PeekHeader(
    std::span<const uint8_t> frame) {
  if (frame.size() < 2) return ProtocolViolationError("frame shorter than 2");
  ASSIGN_OR_RETURN(Role role, RoleFromByte(frame[0]));
  if (frame[1] < 1 || frame[1] > kLastMessageType) {
    return ProtocolViolationError("unknown message type " +
                                  std::to_string(frame[1]));
  }
  return std::make_pair(role, static_cast<MessageType>(frame[1]));
}

}  // namespace dqot
