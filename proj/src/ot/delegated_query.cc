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

#include "dqot/ot/delegated_query.h"

#include "dqot/util/errors.h"

namespace dqot {

DqRequest RRequest(const GroupParams& params, ChoiceBit s, RandomSource& rng) {
  auto [s1, s2] = ShareBit(s, rng);
  Scalar r1 = RandomNonzeroScalar(rng, params);
  Scalar r2 = RandomNonzeroScalar(rng, params);
  return {{s1, std::move(r1)}, {s2, std::move(r2)}};
}

DeltaPair P2Transform(const GroupParams& params, BitShare s2,
                      const Scalar& r2) {
  GroupElement own = PowG(r2, params);
  GroupElement other = Div(params.c(), own, params);
  if (s2.value == 0) return {std::move(own), std::move(other)};
  return {std::move(other), std::move(own)};
}

absl::StatusOr<BetaPair> P1Transform(const GroupParams& params, BitShare s1,
                                     const Scalar& r1, const DeltaPair& delta) {
  if (!params.Contains(delta.d0) || !params.Contains(delta.d1)) {
    return ProtocolViolationError("delta element outside the subgroup");
  }
  if (Mul(delta.d0, delta.d1, params) != params.c()) {
    return ProtocolViolationError("delta pair does not multiply to C");
  }
  GroupElement blind = PowG(r1, params);
  GroupElement raised = Mul(delta.d0, blind, params);
  GroupElement lowered = Div(delta.d1, blind, params);
  if (s1.value == 0) return BetaPair{std::move(raised), std::move(lowered)};
  return BetaPair{std::move(lowered), std::move(raised)};
}

Scalar RetrievalExponent(BitShare s2, const Scalar& r1, const Scalar& r2,
                         const GroupParams& params) {
  return s2.value == 0 ? ScalarAdd(r2, r1, params) : ScalarSub(r2, r1, params);
}

absl::StatusOr<Scalar> DqRetrieveExponent(ChoiceBit s, BitShare s1, BitShare s2,
                                          const Scalar& r1, const Scalar& r2,
                                          const GroupParams& params) {
  if (ReconstructBit(s1, s2) != s) {
    return ParameterError("index shares do not reconstruct the index");
  }
  return RetrievalExponent(s2, r1, r2, params);
}

absl::StatusOr<OtResponse> DqSGenRes(const BitString& m0, const BitString& m1,
                                     const GroupParams& params,
                                     const BetaPair& beta, RandomSource& rng) {
  return SGenResForPair(m0, m1, params, beta.b0, beta.b1, rng);
}

BitString DqRetrieve(const OtResponse& res, ChoiceBit s, const Scalar& x,
                     const GroupParams& params) {
  return UnmaskWithExponent(res.at(s.value), x, params);
}

std::pair<BitShare, BitShare> DuqDelegate(ChoiceBit s, RandomSource& rng) {
  return ShareBit(s, rng);
}

absl::StatusOr<TaggedResponse> DuqSGenRes(
    const BitString& m0, const BitString& m1, const GroupParams& params,
    const BetaPair& beta, const BitString& r3, RandomSource& rng) {
  if (r3.empty()) return ParameterError("verification pad is empty");
  if (m0.size() != m1.size()) {
    return ParameterError("messages must share one block length");
  }
  absl::StatusOr<OtResponse> pair = SGenResForPair(
      m0.Concat(r3), m1.Concat(r3), params, beta.b0, beta.b1, rng, kOracleG);
  if (!pair.ok()) return pair.status();
  BitShare permute{rng.Bit()};
  auto [first, second] =
      ControlledSwap(permute, std::make_pair(pair->e0, pair->e1));
  return TaggedResponse{{std::move(first), std::move(second)}, r3};
}

absl::StatusOr<BitString> SelectTagged(const BitString& candidate0,
                                       const BitString& candidate1,
                                       const BitString& pad) {
  if (candidate0.size() != candidate1.size() ||
      candidate0.size() <= pad.size()) {
    return ParameterError("tagged ciphertexts shorter than their pad");
  }
  size_t message_bits = candidate0.size() - pad.size();
  bool match0 = candidate0.Slice(message_bits, pad.size()) == pad;
  bool match1 = candidate1.Slice(message_bits, pad.size()) == pad;
  if (match0 == match1) {
    return RetrievalFailureError(match0 ? "both candidates carry the pad"
                                        : "no candidate carries the pad");
  }
  return (match0 ? candidate0 : candidate1).Slice(0, message_bits);
}

absl::StatusOr<BitString> DuqRetrieve(const TaggedResponse& res,
                                      const Scalar& r1, const Scalar& r2,
                                      BitShare s2, const GroupParams& params) {
  if (res.pair.e0.masked.size() != res.pair.e1.masked.size()) {
    return ProtocolViolationError("tagged pair has unequal lengths");
  }
  Scalar x = RetrievalExponent(s2, r1, r2, params);
  return SelectTagged(UnmaskWithExponent(res.pair.e0, x, params, kOracleG),
                      UnmaskWithExponent(res.pair.e1, x, params, kOracleG),
                      res.pad);
}

}  // namespace dqot
