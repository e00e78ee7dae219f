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

#include "dqot/harness/messages.h"

#include "dqot/util/errors.h"
#include "dqot/util/status_macros.h"

namespace dqot::wire {
namespace {

void PutHashed(WireWriter& w, const HashedCiphertext& c,
               const GroupParams& params) {
  w.PutElement(c.ephemeral, params).PutBits(c.masked);
}

absl::StatusOr<HashedCiphertext> GetHashed(WireReader& r,
                                           const GroupParams& params) {
  ASSIGN_OR_RETURN(GroupElement ephemeral, r.GetElement(params));
  ASSIGN_OR_RETURN(BitString masked, r.GetBits());
  return HashedCiphertext{std::move(ephemeral), std::move(masked)};
}

void PutPair(WireWriter& w, const OtResponse& res, const GroupParams& params) {
  PutHashed(w, res.e0, params);
  PutHashed(w, res.e1, params);
}

absl::StatusOr<OtResponse> GetPair(WireReader& r, const GroupParams& params) {
  ASSIGN_OR_RETURN(HashedCiphertext e0, GetHashed(r, params));
  ASSIGN_OR_RETURN(HashedCiphertext e1, GetHashed(r, params));
  if (e0.masked.size() != e1.masked.size()) {
    return ProtocolViolationError("response pair has unequal lengths");
  }
  return OtResponse{std::move(e0), std::move(e1)};
}

void PutEncrypted(WireWriter& w, const EncryptedCiphertext& c,
                  const PaillierPublicKey& pk) {
  w.PutCiphertext(c.ephemeral, pk).PutCiphertext(c.masked, pk);
}

absl::StatusOr<EncryptedCiphertext> GetEncrypted(WireReader& r,
                                                 const PaillierPublicKey& pk) {
  ASSIGN_OR_RETURN(AheCiphertext ephemeral, r.GetCiphertext(pk));
  ASSIGN_OR_RETURN(AheCiphertext masked, r.GetCiphertext(pk));
  return EncryptedCiphertext{std::move(ephemeral), std::move(masked)};
}

// A count field is bounded by the bytes left, so a hostile count cannot force
// a large allocation.
absl::StatusOr<uint32_t> GetCount(WireReader& r, size_t min_item_bytes) {
  ASSIGN_OR_RETURN(uint32_t count, r.GetU32());
  if (count == 0 || count > r.remaining() / min_item_bytes) {
    return ProtocolViolationError("implausible element count");
  }
  return count;
}

absl::StatusOr<std::vector<OtResponse>> GetPairList(WireReader& r,
                                                    const GroupParams& params) {
  ASSIGN_OR_RETURN(uint32_t count, GetCount(r, 2 * params.element_bytes()));
  std::vector<OtResponse> out;
  out.reserve(count);
  for (uint32_t i = 0; i < count; ++i) {
    ASSIGN_OR_RETURN(OtResponse res, GetPair(r, params));
    if (!out.empty() && res.e0.masked.size() != out[0].e0.masked.size()) {
      return ProtocolViolationError("response rows differ in length");
    }
    out.push_back(std::move(res));
  }
  return out;
}

absl::StatusOr<std::vector<AheCiphertext>> GetCiphertextList(
    WireReader& r, const PaillierPublicKey& pk) {
  ASSIGN_OR_RETURN(uint32_t count, GetCount(r, pk.ciphertext_bytes()));
  std::vector<AheCiphertext> out;
  out.reserve(count);
  for (uint32_t i = 0; i < count; ++i) {
    ASSIGN_OR_RETURN(AheCiphertext c, r.GetCiphertext(pk));
    out.push_back(std::move(c));
  }
  return out;
}

template <typename T>
absl::StatusOr<T> Finish(const WireReader& r, T value) {
  RETURN_IF_ERROR(r.Done());
  return value;
}

}  // namespace

Frame EncodeParams(Role from, const GroupParams& params) {
  WireWriter w(from, MessageType::kParams);
  w.PutBigInt(params.p())
      .PutBigInt(params.g().value)
      .PutBigInt(params.c().value);
  return std::move(w).Finish();
}

absl::StatusOr<GroupParams> DecodeParams(FrameView frame, Role from) {
  ASSIGN_OR_RETURN(WireReader r,
                   WireReader::Open(frame, from, MessageType::kParams));
  ASSIGN_OR_RETURN(mpz_class p, r.GetBigInt());
  ASSIGN_OR_RETURN(mpz_class g, r.GetBigInt());
  ASSIGN_OR_RETURN(mpz_class c, r.GetBigInt());
  RETURN_IF_ERROR(r.Done());
  absl::StatusOr<GroupParams> params = GroupParams::Create(p, g, c);
  if (!params.ok()) {
    return ProtocolViolationError(
        std::string("invalid published parameters: ")
            .append(std::string(params.status().message())));
  }
  return params;
}

Frame EncodeOtQuery(Role from, const OtQuery& q, const GroupParams& params) {
  WireWriter w(from, MessageType::kOtQuery);
  w.PutElement(q.beta0, params);
  return std::move(w).Finish();
}

absl::StatusOr<OtQuery> DecodeOtQuery(FrameView frame, Role from,
                                      const GroupParams& params) {
  ASSIGN_OR_RETURN(WireReader r,
                   WireReader::Open(frame, from, MessageType::kOtQuery));
  ASSIGN_OR_RETURN(GroupElement beta0, r.GetElement(params));
  return Finish(r, OtQuery{std::move(beta0)});
}

Frame EncodeOtResponse(Role from, const OtResponse& res,
                       const GroupParams& params) {
  WireWriter w(from, MessageType::kOtResponse);
  PutPair(w, res, params);
  return std::move(w).Finish();
}

absl::StatusOr<OtResponse> DecodeOtResponse(FrameView frame, Role from,
                                            const GroupParams& params) {
  ASSIGN_OR_RETURN(WireReader r,
                   WireReader::Open(frame, from, MessageType::kOtResponse));
  ASSIGN_OR_RETURN(OtResponse res, GetPair(r, params));
  return Finish(r, std::move(res));
}

Frame EncodeShareAndBlind(Role from, const ServerShare& share,
                          const GroupParams& params) {
  WireWriter w(from, MessageType::kShareAndBlind);
  w.PutBit(share.s.value).PutScalar(share.r, params);
  return std::move(w).Finish();
}

absl::StatusOr<ServerShare> DecodeShareAndBlind(FrameView frame, Role from,
                                                const GroupParams& params) {
  ASSIGN_OR_RETURN(WireReader r,
                   WireReader::Open(frame, from, MessageType::kShareAndBlind));
  ASSIGN_OR_RETURN(uint8_t s, r.GetBit());
  ASSIGN_OR_RETURN(Scalar blind, r.GetScalar(params));
  if (blind.value == 0) return ProtocolViolationError("zero blinding scalar");
  return Finish(r, ServerShare{BitShare{s}, std::move(blind)});
}

Frame EncodeDeltaPair(Role from, const DeltaPair& d,
                      const GroupParams& params) {
  WireWriter w(from, MessageType::kDeltaPair);
  w.PutElement(d.d0, params).PutElement(d.d1, params);
  return std::move(w).Finish();
}

absl::StatusOr<DeltaPair> DecodeDeltaPair(FrameView frame, Role from,
                                          const GroupParams& params) {
  ASSIGN_OR_RETURN(WireReader r,
                   WireReader::Open(frame, from, MessageType::kDeltaPair));
  ASSIGN_OR_RETURN(GroupElement d0, r.GetElement(params));
  ASSIGN_OR_RETURN(GroupElement d1, r.GetElement(params));
  return Finish(r, DeltaPair{std::move(d0), std::move(d1)});
}

Frame EncodeBetaPair(Role from, const BetaPair& b, const GroupParams& params) {
  WireWriter w(from, MessageType::kBetaPair);
  w.PutElement(b.b0, params).PutElement(b.b1, params);
  return std::move(w).Finish();
}

absl::StatusOr<BetaPair> DecodeBetaPair(FrameView frame, Role from,
                                        const GroupParams& params) {
  ASSIGN_OR_RETURN(WireReader r,
                   WireReader::Open(frame, from, MessageType::kBetaPair));
  ASSIGN_OR_RETURN(GroupElement b0, r.GetElement(params));
  ASSIGN_OR_RETURN(GroupElement b1, r.GetElement(params));
  return Finish(r, BetaPair{std::move(b0), std::move(b1)});
}

Frame EncodeIndexShare(Role from, BitShare share) {
  WireWriter w(from, MessageType::kIndexShare);
  w.PutBit(share.value);
  return std::move(w).Finish();
}

absl::StatusOr<BitShare> DecodeIndexShare(FrameView frame, Role from) {
  ASSIGN_OR_RETURN(WireReader r,
                   WireReader::Open(frame, from, MessageType::kIndexShare));
  ASSIGN_OR_RETURN(uint8_t bit, r.GetBit());
  return Finish(r, BitShare{bit});
}

Frame EncodeBlindingScalar(Role from, const Scalar& s,
                           const GroupParams& params) {
  WireWriter w(from, MessageType::kBlindingScalar);
  w.PutScalar(s, params);
  return std::move(w).Finish();
}

absl::StatusOr<Scalar> DecodeBlindingScalar(FrameView frame, Role from,
                                            const GroupParams& params) {
  ASSIGN_OR_RETURN(WireReader r,
                   WireReader::Open(frame, from, MessageType::kBlindingScalar));
  ASSIGN_OR_RETURN(Scalar s, r.GetScalar(params));
  if (s.value == 0) return ProtocolViolationError("zero blinding scalar");
  return Finish(r, std::move(s));
}

Frame EncodePairIndex(Role from, uint32_t v) {
  WireWriter w(from, MessageType::kPairIndex);
  w.PutU32(v);
  return std::move(w).Finish();
}

absl::StatusOr<uint32_t> DecodePairIndex(FrameView frame, Role from) {
  ASSIGN_OR_RETURN(WireReader r,
                   WireReader::Open(frame, from, MessageType::kPairIndex));
  ASSIGN_OR_RETURN(uint32_t v, r.GetU32());
  return Finish(r, v);
}

Frame EncodeOtResponseList(Role from, const std::vector<OtResponse>& list,
                           const GroupParams& params) {
  WireWriter w(from, MessageType::kOtResponseList);
  w.PutU32(static_cast<uint32_t>(list.size()));
  for (const OtResponse& res : list) PutPair(w, res, params);
  return std::move(w).Finish();
}

absl::StatusOr<std::vector<OtResponse>> DecodeOtResponseList(
    FrameView frame, Role from, const GroupParams& params) {
  ASSIGN_OR_RETURN(WireReader r,
                   WireReader::Open(frame, from, MessageType::kOtResponseList));
  ASSIGN_OR_RETURN(std::vector<OtResponse> list, GetPairList(r, params));
  return Finish(r, std::move(list));
}

Frame EncodeTaggedResponse(Role from, const TaggedResponse& res,
                           const GroupParams& params) {
  WireWriter w(from, MessageType::kTaggedResponse);
  PutPair(w, res.pair, params);
  w.PutBits(res.pad);
  return std::move(w).Finish();
}

absl::StatusOr<TaggedResponse> DecodeTaggedResponse(FrameView frame, Role from,
                                                    const GroupParams& params) {
  ASSIGN_OR_RETURN(WireReader r,
                   WireReader::Open(frame, from, MessageType::kTaggedResponse));
  ASSIGN_OR_RETURN(OtResponse pair, GetPair(r, params));
  ASSIGN_OR_RETURN(BitString pad, r.GetBits());
  return Finish(r, TaggedResponse{std::move(pair), std::move(pad)});
}

Frame EncodeTaggedPairList(Role from, const std::vector<OtResponse>& list,
                           const GroupParams& params) {
  WireWriter w(from, MessageType::kTaggedPairList);
  w.PutU32(static_cast<uint32_t>(list.size()));
  for (const OtResponse& res : list) PutPair(w, res, params);
  return std::move(w).Finish();
}

absl::StatusOr<std::vector<OtResponse>> DecodeTaggedPairList(
    FrameView frame, Role from, const GroupParams& params) {
  ASSIGN_OR_RETURN(WireReader r,
                   WireReader::Open(frame, from, MessageType::kTaggedPairList));
  ASSIGN_OR_RETURN(std::vector<OtResponse> list, GetPairList(r, params));
  return Finish(r, std::move(list));
}

Frame EncodeVerificationPad(Role from, const BitString& r3) {
  WireWriter w(from, MessageType::kVerificationPad);
  w.PutBits(r3);
  return std::move(w).Finish();
}

absl::StatusOr<BitString> DecodeVerificationPad(FrameView frame, Role from) {
  ASSIGN_OR_RETURN(
      WireReader r,
      WireReader::Open(frame, from, MessageType::kVerificationPad));
  ASSIGN_OR_RETURN(BitString pad, r.GetBits());
  if (pad.empty()) return ProtocolViolationError("empty verification pad");
  return Finish(r, std::move(pad));
}

Frame EncodeSelectionVector(Role from, const std::vector<AheCiphertext>& w,
                            const PaillierPublicKey& pk) {
  WireWriter out(from, MessageType::kSelectionVector);
  out.PutU32(static_cast<uint32_t>(w.size()));
  for (const AheCiphertext& c : w) out.PutCiphertext(c, pk);
  return std::move(out).Finish();
}

absl::StatusOr<std::vector<AheCiphertext>> DecodeSelectionVector(
    FrameView frame, Role from, const PaillierPublicKey& pk) {
  ASSIGN_OR_RETURN(
      WireReader r,
      WireReader::Open(frame, from, MessageType::kSelectionVector));
  ASSIGN_OR_RETURN(std::vector<AheCiphertext> w, GetCiphertextList(r, pk));
  return Finish(r, std::move(w));
}

Frame EncodeEncryptedPair(Role from, const EncryptedPair& pair,
                          const PaillierPublicKey& pk) {
  WireWriter w(from, MessageType::kEncryptedPair);
  PutEncrypted(w, pair.o0, pk);
  PutEncrypted(w, pair.o1, pk);
  return std::move(w).Finish();
}

absl::StatusOr<EncryptedPair> DecodeEncryptedPair(FrameView frame, Role from,
                                                  const PaillierPublicKey& pk) {
  ASSIGN_OR_RETURN(WireReader r,
                   WireReader::Open(frame, from, MessageType::kEncryptedPair));
  ASSIGN_OR_RETURN(EncryptedCiphertext o0, GetEncrypted(r, pk));
  ASSIGN_OR_RETURN(EncryptedCiphertext o1, GetEncrypted(r, pk));
  return Finish(r, EncryptedPair{std::move(o0), std::move(o1)});
}

Frame EncodeThinQuery(Role from, const ThinQuery& q, const GroupParams& params,
                      const PaillierPublicKey& pk) {
  WireWriter w(from, MessageType::kThinQuery);
  w.PutElement(q.base.pk0, params);
  w.PutU32(static_cast<uint32_t>(q.selection.size()));
  for (const AheCiphertext& c : q.selection) w.PutCiphertext(c, pk);
  return std::move(w).Finish();
}

absl::StatusOr<ThinQuery> DecodeThinQuery(FrameView frame, Role from,
                                          const GroupParams& params,
                                          const PaillierPublicKey& pk) {
  ASSIGN_OR_RETURN(WireReader r,
                   WireReader::Open(frame, from, MessageType::kThinQuery));
  ASSIGN_OR_RETURN(GroupElement pk0, r.GetElement(params));
  ASSIGN_OR_RETURN(std::vector<AheCiphertext> w, GetCiphertextList(r, pk));
  return Finish(r, ThinQuery{OtNQuery{std::move(pk0)}, std::move(w)});
}

Frame EncodeThinResponse(Role from, const EncryptedCiphertext& c,
                         const PaillierPublicKey& pk) {
  WireWriter w(from, MessageType::kThinResponse);
  PutEncrypted(w, c, pk);
  return std::move(w).Finish();
}

absl::StatusOr<EncryptedCiphertext> DecodeThinResponse(
    FrameView frame, Role from, const PaillierPublicKey& pk) {
  ASSIGN_OR_RETURN(WireReader r,
                   WireReader::Open(frame, from, MessageType::kThinResponse));
  ASSIGN_OR_RETURN(EncryptedCiphertext c, GetEncrypted(r, pk));
  return Finish(r, std::move(c));
}

Frame EncodePadKeys(Role from, const supersonic::PadKeys& keys) {
  WireWriter w(from, MessageType::kPadKeys);
  w.PutBits(keys.k0()).PutBits(keys.k1());
  return std::move(w).Finish();
}

absl::StatusOr<supersonic::PadKeys> DecodePadKeys(FrameView frame, Role from) {
  ASSIGN_OR_RETURN(WireReader r,
                   WireReader::Open(frame, from, MessageType::kPadKeys));
  ASSIGN_OR_RETURN(BitString k0, r.GetBits());
  ASSIGN_OR_RETURN(BitString k1, r.GetBits());
  if (k0.empty() || k0.size() != k1.size()) {
    return ProtocolViolationError("pad keys differ in length");
  }
  RETURN_IF_ERROR(r.Done());
  return supersonic::PadKeys(std::move(k0), std::move(k1));
}

Frame EncodeSwappedPair(Role from, const supersonic::SwappedPair& pair) {
  WireWriter w(from, MessageType::kSwappedPair);
  w.PutBits(pair.c0).PutBits(pair.c1);
  return std::move(w).Finish();
}

absl::StatusOr<supersonic::SwappedPair> DecodeSwappedPair(FrameView frame,
                                                          Role from) {
  ASSIGN_OR_RETURN(WireReader r,
                   WireReader::Open(frame, from, MessageType::kSwappedPair));
  ASSIGN_OR_RETURN(BitString c0, r.GetBits());
  ASSIGN_OR_RETURN(BitString c1, r.GetBits());
  if (c0.size() != c1.size()) {
    return ProtocolViolationError("swapped pair has unequal lengths");
  }
  return Finish(r, supersonic::SwappedPair{std::move(c0), std::move(c1)});
}

Frame EncodeFilteredCiphertext(Role from, const BitString& c) {
  WireWriter w(from, MessageType::kFilteredCiphertext);
  w.PutBits(c);
  return std::move(w).Finish();
}

absl::StatusOr<BitString> DecodeFilteredCiphertext(FrameView frame, Role from) {
  ASSIGN_OR_RETURN(
      WireReader r,
      WireReader::Open(frame, from, MessageType::kFilteredCiphertext));
  ASSIGN_OR_RETURN(BitString c, r.GetBits());
  return Finish(r, std::move(c));
}

}  // namespace dqot::wire
