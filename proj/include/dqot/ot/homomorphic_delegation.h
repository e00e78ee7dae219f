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

#ifndef DQOT_OT_HOMOMORPHIC_DELEGATION_H_
#define DQOT_OT_HOMOMORPHIC_DELEGATION_H_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "dqot/crypto/bit_string.h"
#include "dqot/crypto/group.h"
#include "dqot/crypto/paillier.h"
#include "dqot/crypto/random.h"
#include "dqot/ot/delegated_query.h"
#include "dqot/ot/naor_pinkas.h"

namespace dqot {

// z message pairs held by the sender; every message has the same length.
class MessageTable {
 public:
  static absl::StatusOr<MessageTable> Create(
      std::vector<std::pair<BitString, BitString>> pairs);
  static MessageTable Random(RandomSource& rng, size_t z, size_t sigma);

  size_t z() const { return pairs_.size(); }
  size_t sigma() const { return pairs_.front().first.size(); }
  const std::pair<BitString, BitString>& pair(size_t i) const {
    return pairs_[i];
  }

 private:
  explicit MessageTable(std::vector<std::pair<BitString, BitString>> pairs)
      : pairs_(std::move(pairs)) {}
  std::vector<std::pair<BitString, BitString>> pairs_;
};

// Plaintext encodings: big-endian integers.
mpz_class ElementPlaintext(const GroupElement& e);
mpz_class BitsPlaintext(const BitString& bits);
absl::StatusOr<BitString> PlaintextBits(const mpz_class& value, size_t bits);

// n ciphertexts; element v encrypts 1, the rest encrypt 0.
absl::StatusOr<std::vector<AheCiphertext>> EncryptSelectionVector(
    uint32_t v, uint32_t n, const PaillierPublicKey& pk, RandomSource& rng);

// sum_j w_j * res_j under encryption. One ciphertext whatever n is.
absl::StatusOr<AheCiphertext> ObliviousFilter(
    const std::vector<AheCiphertext>& w, const std::vector<mpz_class>& res,
    const PaillierPublicKey& pk);

// A hashed ciphertext with both components under AHE.
struct EncryptedCiphertext {
  AheCiphertext ephemeral;
  AheCiphertext masked;
};

struct EncryptedPair {
  EncryptedCiphertext o0;
  EncryptedCiphertext o1;
};

// Multi-receiver, known index: one Naor-Pinkas response per table row, all
// under the same beta pair with fresh nonces.
absl::StatusOr<std::vector<OtResponse>> MrRespond(const MessageTable& table,
                                                  const GroupParams& params,
                                                  const BetaPair& beta,
                                                  RandomSource& rng);

absl::StatusOr<OtResponse> MrSelect(const std::vector<OtResponse>& responses,
                                    uint32_t v);

// Multi-receiver, unknown index: one G-tagged response per row, each pair
// independently permuted by the sender. The rows go to P1, which never sees
// them unmasked.
absl::StatusOr<std::vector<OtResponse>> DuqMrRespond(const MessageTable& table,
                                                     const GroupParams& params,
                                                     const BetaPair& beta,
                                                     const BitString& r3,
                                                     RandomSource& rng);

// P1's step: filter each of the four components across the z rows with the
// encrypted selection vector.
absl::StatusOr<EncryptedPair> DuqMrFilter(const std::vector<OtResponse>& tagged,
                                          const std::vector<AheCiphertext>& w,
                                          const PaillierPublicKey& pk);

absl::StatusOr<HashedCiphertext> DecryptHashedCiphertext(
    const EncryptedCiphertext& c, const PaillierPrivateKey& sk,
    const GroupParams& params, size_t masked_bits);

// R's step: decrypt the pair, then tag-match exactly as in the single-row
// unknown-query variant.
absl::StatusOr<BitString> DuqMrRetrieve(const EncryptedPair& pair,
                                        const PaillierPrivateKey& sk,
                                        const Scalar& r1, const Scalar& r2,
                                        BitShare s2, const BitString& r3,
                                        size_t sigma,
                                        const GroupParams& params);

// Thin client: a Naor-Pinkas 1-out-of-n query plus an encrypted selection
// vector. The sender answers with one encrypted hashed ciphertext.
struct ThinQuery {
  OtNQuery base;
  std::vector<AheCiphertext> selection;
};

absl::StatusOr<std::pair<ThinQuery, OtNSecret>> ThinRequest(
    const GroupParams& params, const PaillierPublicKey& pk, uint32_t index,
    uint32_t n, RandomSource& rng);

absl::StatusOr<EncryptedCiphertext> ThinRespond(
    const std::vector<BitString>& messages, const GroupParams& params,
    const PaillierPublicKey& pk, const ThinQuery& query, RandomSource& rng);

absl::StatusOr<BitString> ThinRetrieve(const EncryptedCiphertext& response,
                                       const PaillierPrivateKey& sk,
                                       const OtNSecret& secret, size_t sigma,
                                       const GroupParams& params);

}  // namespace dqot

#endif  // DQOT_OT_HOMOMORPHIC_DELEGATION_H_
