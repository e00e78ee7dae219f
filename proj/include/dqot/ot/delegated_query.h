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

#ifndef DQOT_OT_DELEGATED_QUERY_H_
#define DQOT_OT_DELEGATED_QUERY_H_

#include <cstddef>
#include <utility>

#include "absl/status/statusor.h"
#include "dqot/crypto/bit_string.h"
#include "dqot/crypto/group.h"
#include "dqot/crypto/random.h"
#include "dqot/crypto/secret_sharing.h"
#include "dqot/ot/naor_pinkas.h"

namespace dqot {

// Verification-pad length for the unknown-query variants.
inline constexpr size_t kDefaultLambda = 128;

// What the receiver hands one helper server: an index share and a nonzero
// blinding scalar.
struct ServerShare {
  BitShare s;
  Scalar r;
};

struct DqRequest {
  ServerShare to_p1;
  ServerShare to_p2;
};

// Produced by P2: d_{s2} = g^{r2}, d_{1-s2} = C / g^{r2}. Always d0 * d1 = C.
struct DeltaPair {
  GroupElement d0;
  GroupElement d1;
  friend bool operator==(const DeltaPair&, const DeltaPair&) = default;
};

// Produced by P1 and forwarded to the sender. Always b0 * b1 = C, the same
// shape as a direct Naor-Pinkas query pair.
struct BetaPair {
  GroupElement b0;
  GroupElement b1;
  friend bool operator==(const BetaPair&, const BetaPair&) = default;
};

// A G-encrypted pair carrying (m || r3) plus the pad r3 itself.
struct TaggedResponse {
  OtResponse pair;
  BitString pad;
};

// Splits s across P1 and P2 and draws r1, r2. No group operation happens here.
DqRequest RRequest(const GroupParams& params, ChoiceBit s, RandomSource& rng);

DeltaPair P2Transform(const GroupParams& params, BitShare s2, const Scalar& r2);

// b_{s1} = d0 * g^{r1}, b_{1-s1} = d1 * g^{-r1}. Rejects a delta pair whose
// product is not C.
absl::StatusOr<BetaPair> P1Transform(const GroupParams& params, BitShare s1,
                                     const Scalar& r1, const DeltaPair& delta);

// x = r2 + (-1)^{s2} r1 (mod q). Needs no knowledge of s: g^x is always the
// element of the beta pair that the index selects.
Scalar RetrievalExponent(BitShare s2, const Scalar& r1, const Scalar& r2,
                         const GroupParams& params);

// Checked form for a receiver that owns s: fails if s != s1 xor s2.
absl::StatusOr<Scalar> DqRetrieveExponent(ChoiceBit s, BitShare s1, BitShare s2,
                                          const Scalar& r1, const Scalar& r2,
                                          const GroupParams& params);

// Sender step: a Naor-Pinkas response over the delegated beta pair.
absl::StatusOr<OtResponse> DqSGenRes(const BitString& m0, const BitString& m1,
                                     const GroupParams& params,
                                     const BetaPair& beta, RandomSource& rng);

// H(e_{s,0}^x) xor e_{s,1}.
BitString DqRetrieve(const OtResponse& res, ChoiceBit s, const Scalar& x,
                     const GroupParams& params);

// Party T's only action in the unknown-query variant: split s for P1 and P2.
std::pair<BitShare, BitShare> DuqDelegate(ChoiceBit s, RandomSource& rng);

// e_i = (g^{y_i}, G(b_i^{y_i}) xor (m_i || r3)); the pair is then swapped
// with a sender-local random bit before it leaves the sender.
absl::StatusOr<TaggedResponse> DuqSGenRes(
    const BitString& m0, const BitString& m1, const GroupParams& params,
    const BetaPair& beta, const BitString& r3, RandomSource& rng);

// Tag-matching retrieval: unmask both elements with x and keep the unique one
// whose trailing pad bits equal r3. Zero or two matches is a retrieval
// failure. The receiver never takes s.
absl::StatusOr<BitString> DuqRetrieve(const TaggedResponse& res,
                                      const Scalar& r1, const Scalar& r2,
                                      BitShare s2, const GroupParams& params);

// Shared by DuqRetrieve and the multi-receiver variant, which receives the
// pad and the pair over different channels.
absl::StatusOr<BitString> SelectTagged(const BitString& candidate0,
                                       const BitString& candidate1,
                                       const BitString& pad);

}  // namespace dqot

#endif  // DQOT_OT_DELEGATED_QUERY_H_
