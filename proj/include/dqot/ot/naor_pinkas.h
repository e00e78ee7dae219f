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

#ifndef DQOT_OT_NAOR_PINKAS_H_
#define DQOT_OT_NAOR_PINKAS_H_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "dqot/crypto/bit_string.h"
#include "dqot/crypto/group.h"
#include "dqot/crypto/random.h"
#include "dqot/crypto/secret_sharing.h"

namespace dqot {

// Message block size in bits.
inline constexpr size_t kDefaultSigma = 128;

// Receiver's query: beta_0. The sender derives beta_1 = C / beta_0.
struct OtQuery {
  GroupElement beta0;
};

// Receiver-side state kept between query and retrieval.
struct OtSecret {
  Scalar r;  // nonzero
  ChoiceBit s;
};

// (g^y, oracle(beta^y) xor m).
struct HashedCiphertext {
  GroupElement ephemeral;
  BitString masked;
  friend bool operator==(const HashedCiphertext&,
                         const HashedCiphertext&) = default;
};

struct OtResponse {
  HashedCiphertext e0;
  HashedCiphertext e1;

  const HashedCiphertext& at(uint8_t i) const { return (i & 1) ? e1 : e0; }
  friend bool operator==(const OtResponse&, const OtResponse&) = default;
};

// Sender initialization: publishes (p, g, C).
absl::StatusOr<GroupParams> SInit(size_t security_bits, RandomSource& rng);

// beta_s = g^r, beta_{1-s} = C / beta_s; only beta_0 leaves the receiver.
std::pair<OtQuery, OtSecret> RGenQuery(const GroupParams& params, ChoiceBit s,
                                       RandomSource& rng);
OtQuery QueryForSecret(const GroupParams& params, const OtSecret& secret);

// Encrypts m_i under beta_i with fresh y_0, y_1. Both messages must have the
// same nonzero length; that length is the block size.
absl::StatusOr<OtResponse> SGenRes(const BitString& m0, const BitString& m1,
                                   const GroupParams& params,
                                   const OtQuery& query, RandomSource& rng);

// Same encryption for an explicit (beta_0, beta_1); rejects pairs whose
// product is not C. `label` selects the oracle (H for plain responses, G
// for tagged ones).
absl::StatusOr<OtResponse> SGenResForPair(
    const BitString& m0, const BitString& m1, const GroupParams& params,
    const GroupElement& beta0, const GroupElement& beta1, RandomSource& rng,
    std::string_view label = kOracleH);

// Deterministic core with caller-supplied nonces.
absl::StatusOr<OtResponse> SGenResWithNonces(
    const BitString& m0, const BitString& m1, const GroupParams& params,
    const GroupElement& beta0, const GroupElement& beta1, const Scalar& y0,
    const Scalar& y1, std::string_view label = kOracleH);

// oracle(ephemeral^x) xor masked.
BitString UnmaskWithExponent(const HashedCiphertext& c, const Scalar& x,
                             const GroupParams& params,
                             std::string_view label = kOracleH);

// m_s = H(e_{s,0}^r) xor e_{s,1}. A secret from a different transcript yields
// garbage; nothing here detects that.
BitString RRetrieve(const OtResponse& res, const OtSecret& secret,
                    const GroupParams& params);

// 1-out-of-n generalization. The sender's public elements are C_1 = C and
// C_i = DeriveIndexedElement(i) for i >= 2; the receiver sends
// PK_0 with PK_index = g^r, and the sender sets PK_i = C_i / PK_0.
struct OtNQuery {
  GroupElement pk0;
};

struct OtNSecret {
  Scalar r;
  uint32_t index = 0;
};

GroupElement PublicElementN(uint32_t i, const GroupParams& params);

absl::StatusOr<std::pair<OtNQuery, OtNSecret>> RGenQueryN(
    const GroupParams& params, uint32_t index, uint32_t n, RandomSource& rng);

absl::StatusOr<std::vector<HashedCiphertext>> SGenResN(
    const std::vector<BitString>& messages, const GroupParams& params,
    const OtNQuery& query, RandomSource& rng);

BitString RRetrieveN(const HashedCiphertext& selected, const OtNSecret& secret,
                     const GroupParams& params);

}  // namespace dqot

#endif  // DQOT_OT_NAOR_PINKAS_H_
