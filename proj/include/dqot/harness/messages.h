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

#ifndef DQOT_HARNESS_MESSAGES_H_
#define DQOT_HARNESS_MESSAGES_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "dqot/crypto/bit_string.h"
#include "dqot/crypto/group.h"
#include "dqot/crypto/paillier.h"
#include "dqot/crypto/secret_sharing.h"
#include "dqot/harness/role.h"
#include "dqot/harness/wire.h"
#include "dqot/ot/delegated_query.h"
#include "dqot/ot/homomorphic_delegation.h"
#include "dqot/ot/naor_pinkas.h"
#include "dqot/ot/supersonic.h"

// Encoders and decoders for every protocol message. Each decoder checks the
// sender role and message type in the header and rejects trailing bytes.
namespace dqot::wire {

using Frame = std::vector<uint8_t>;
using FrameView = std::span<const uint8_t>;

Frame EncodeParams(Role from, const GroupParams& params);
absl::StatusOr<GroupParams> DecodeParams(FrameView frame, Role from);

Frame EncodeOtQuery(Role from, const OtQuery& q, const GroupParams& params);
absl::StatusOr<OtQuery> DecodeOtQuery(FrameView frame, Role from,
                                      const GroupParams& params);

Frame EncodeOtResponse(Role from, const OtResponse& r,
                       const GroupParams& params);
absl::StatusOr<OtResponse> DecodeOtResponse(FrameView frame, Role from,
                                            const GroupParams& params);

Frame EncodeShareAndBlind(Role from, const ServerShare& share,
                          const GroupParams& params);
absl::StatusOr<ServerShare> DecodeShareAndBlind(FrameView frame, Role from,
                                                const GroupParams& params);

Frame EncodeDeltaPair(Role from, const DeltaPair& d, const GroupParams& params);
absl::StatusOr<DeltaPair> DecodeDeltaPair(FrameView frame, Role from,
                                          const GroupParams& params);

Frame EncodeBetaPair(Role from, const BetaPair& b, const GroupParams& params);
absl::StatusOr<BetaPair> DecodeBetaPair(FrameView frame, Role from,
                                        const GroupParams& params);

Frame EncodeIndexShare(Role from, BitShare share);
absl::StatusOr<BitShare> DecodeIndexShare(FrameView frame, Role from);

Frame EncodeBlindingScalar(Role from, const Scalar& r,
                           const GroupParams& params);
absl::StatusOr<Scalar> DecodeBlindingScalar(FrameView frame, Role from,
                                            const GroupParams& params);

Frame EncodePairIndex(Role from, uint32_t v);
absl::StatusOr<uint32_t> DecodePairIndex(FrameView frame, Role from);

Frame EncodeOtResponseList(Role from, const std::vector<OtResponse>& list,
                           const GroupParams& params);
absl::StatusOr<std::vector<OtResponse>> DecodeOtResponseList(
    FrameView frame, Role from, const GroupParams& params);

Frame EncodeTaggedResponse(Role from, const TaggedResponse& r,
                           const GroupParams& params);
absl::StatusOr<TaggedResponse> DecodeTaggedResponse(FrameView frame, Role from,
                                                    const GroupParams& params);

Frame EncodeTaggedPairList(Role from, const std::vector<OtResponse>& list,
                           const GroupParams& params);
absl::StatusOr<std::vector<OtResponse>> DecodeTaggedPairList(
    FrameView frame, Role from, const GroupParams& params);

Frame EncodeVerificationPad(Role from, const BitString& r3);
absl::StatusOr<BitString> DecodeVerificationPad(FrameView frame, Role from);

Frame EncodeSelectionVector(Role from, const std::vector<AheCiphertext>& w,
                            const PaillierPublicKey& pk);
absl::StatusOr<std::vector<AheCiphertext>> DecodeSelectionVector(
    FrameView frame, Role from, const PaillierPublicKey& pk);

Frame EncodeEncryptedPair(Role from, const EncryptedPair& pair,
                          const PaillierPublicKey& pk);
absl::StatusOr<EncryptedPair> DecodeEncryptedPair(FrameView frame, Role from,
                                                  const PaillierPublicKey& pk);

Frame EncodeThinQuery(Role from, const ThinQuery& q, const GroupParams& params,
                      const PaillierPublicKey& pk);
absl::StatusOr<ThinQuery> DecodeThinQuery(FrameView frame, Role from,
                                          const GroupParams& params,
                                          const PaillierPublicKey& pk);

Frame EncodeThinResponse(Role from, const EncryptedCiphertext& c,
                         const PaillierPublicKey& pk);
absl::StatusOr<EncryptedCiphertext> DecodeThinResponse(
    FrameView frame, Role from, const PaillierPublicKey& pk);

Frame EncodePadKeys(Role from, const supersonic::PadKeys& keys);
absl::StatusOr<supersonic::PadKeys> DecodePadKeys(FrameView frame, Role from);

Frame EncodeSwappedPair(Role from, const supersonic::SwappedPair& pair);
absl::StatusOr<supersonic::SwappedPair> DecodeSwappedPair(FrameView frame,
                                                          Role from);

Frame EncodeFilteredCiphertext(Role from, const BitString& c);
absl::StatusOr<BitString> DecodeFilteredCiphertext(FrameView frame, Role from);

}  // namespace dqot::wire

#endif  // DQOT_HARNESS_MESSAGES_H_
