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

#ifndef DQOT_HARNESS_WIRE_H_
#define DQOT_HARNESS_WIRE_H_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "dqot/crypto/bit_string.h"
#include "dqot/crypto/group.h"
#include "dqot/crypto/paillier.h"
#include "dqot/harness/role.h"

namespace dqot {

enum class MessageType : uint8_t {
  kParams = 1,
  kOtQuery = 2,
  kOtResponse = 3,
  kShareAndBlind = 4,
  kDeltaPair = 5,
  kBetaPair = 6,
  kIndexShare = 7,
  kBlindingScalar = 8,
  kPairIndex = 9,
  kOtResponseList = 10,
  kTaggedResponse = 11,
  kTaggedPairList = 12,
  kVerificationPad = 13,
  kSelectionVector = 14,
  kEncryptedPair = 15,
  kThinQuery = 16,
  kThinResponse = 17,
  kPadKeys = 18,
  kSwappedPair = 19,
  kFilteredCiphertext = 20,
};

// Frame layout: role byte, message-type byte, then fields. Group elements,
// scalars and ciphertexts are fixed width; bit strings carry a u32 bit
// length; integers without a fixed width carry a u32 byte length.
class WireWriter {
 public:
  WireWriter(Role from, MessageType type);

  WireWriter& PutU32(uint32_t v);
  WireWriter& PutBit(uint8_t bit);
  WireWriter& PutBigInt(const mpz_class& v);
  WireWriter& PutElement(const GroupElement& e, const GroupParams& params);
  WireWriter& PutScalar(const Scalar& s, const GroupParams& params);
  WireWriter& PutBits(const BitString& bits);
  WireWriter& PutCiphertext(const AheCiphertext& c,
                            const PaillierPublicKey& pk);

  std::vector<uint8_t> Finish() && { return std::move(out_); }

 private:
  std::vector<uint8_t> out_;
};

class WireReader {
 public:
  // Checks the header against the expected sender and type.
  static absl::StatusOr<WireReader> Open(std::span<const uint8_t> frame,
                                         Role from, MessageType type);

  absl::StatusOr<uint32_t> GetU32();
  absl::StatusOr<uint8_t> GetBit();
  absl::StatusOr<mpz_class> GetBigInt();
  absl::StatusOr<GroupElement> GetElement(const GroupParams& params);
  absl::StatusOr<Scalar> GetScalar(const GroupParams& params);
  absl::StatusOr<BitString> GetBits();
  absl::StatusOr<AheCiphertext> GetCiphertext(const PaillierPublicKey& pk);

  size_t remaining() const { return data_.size() - offset_; }
  // Fails if bytes are left over.
  absl::Status Done() const;

 private:
  explicit WireReader(std::span<const uint8_t> data) : data_(data) {}
  absl::StatusOr<std::span<const uint8_t>> Take(size_t n);

  std::span<const uint8_t> data_;
  size_t offset_ = 0;
};

absl::StatusOr<std::pair<Role, MessageType>> PeekHeader(
    std::span<const uint8_t> frame);

}  // namespace dqot

#endif  // DQOT_HARNESS_WIRE_H_
