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

#include "dqot/ot/homomorphic_delegation.h"

#include "dqot/crypto/bigint.h"
#include "dqot/crypto/secret_sharing.h"
#include "dqot/util/errors.h"
#include "dqot/util/status_macros.h"

namespace dqot {
namespace {

absl::StatusOr<EncryptedCiphertext> FilterColumn(
    const std::vector<const HashedCiphertext*>& column,
    const std::vector<AheCiphertext>& w, const PaillierPublicKey& pk) {
  std::vector<mpz_class> ephemerals;
  std::vector<mpz_class> masks;
  ephemerals.reserve(column.size());
  masks.reserve(column.size());
  for (const HashedCiphertext* c : column) {
    ephemerals.push_back(ElementPlaintext(c->ephemeral));
    masks.push_back(BitsPlaintext(c->masked));
  }
  ASSIGN_OR_RETURN(AheCiphertext ephemeral, ObliviousFilter(w, ephemerals, pk));
  ASSIGN_OR_RETURN(AheCiphertext masked, ObliviousFilter(w, masks, pk));
  return EncryptedCiphertext{std::move(ephemeral), std::move(masked)};
}

}  // namespace

absl::StatusOr<MessageTable> MessageTable::Create(
    std::vector<std::pair<BitString, BitString>> pairs) {
  if (pairs.empty()) return ParameterError("message table is empty");
  size_t sigma = pairs.front().first.size();
  if (sigma == 0) return ParameterError("messages are empty");
  for (const auto& [m0, m1] : pairs) {
    if (m0.size() != sigma || m1.size() != sigma) {
      return ParameterError("message table rows differ in length");
    }
  }
  return MessageTable(std::move(pairs));
}

MessageTable MessageTable::Random(RandomSource& rng, size_t z, size_t sigma) {
  std::vector<std::pair<BitString, BitString>> pairs;
  pairs.reserve(z);
  for (size_t i = 0; i < z; ++i) {
    BitString m0 = BitString::Random(rng, sigma);
    BitString m1 = BitString::Random(rng, sigma);
    pairs.emplace_back(std::move(m0), std::move(m1));
  }
  return MessageTable(std::move(pairs));
}

mpz_class ElementPlaintext(const GroupElement& e) { return e.value; }

mpz_class BitsPlaintext(const BitString& bits) {
  return BigIntFromBytes(bits.bytes());
}

absl::StatusOr<BitString> PlaintextBits(const mpz_class& value, size_t bits) {
  size_t width = (bits + 7) / 8;
  if (value < 0 || ByteLength(value) > width) {
    return ProtocolViolationError("plaintext too wide for a bit string");
  }
  BitString out = BitString::FromBytes(BigIntToBytes(value, width), bits);
  if (BitsPlaintext(out) != value) {
    return ProtocolViolationError("plaintext has bits past the string end");
  }
  return out;
}

absl::StatusOr<std::vector<AheCiphertext>> EncryptSelectionVector(
    uint32_t v, uint32_t n, const PaillierPublicKey& pk, RandomSource& rng) {
  if (v >= n) return ParameterError("selection index out of range");
  std::vector<AheCiphertext> w;
  w.reserve(n);
  for (uint32_t j = 0; j < n; ++j) {
    ASSIGN_OR_RETURN(AheCiphertext c,
                     pk.Encrypt(mpz_class(j == v ? 1 : 0), rng));
    w.push_back(std::move(c));
  }
  return w;
}

absl::StatusOr<AheCiphertext> ObliviousFilter(
    const std::vector<AheCiphertext>& w, const std::vector<mpz_class>& res,
    const PaillierPublicKey& pk) {
  if (w.empty() || w.size() != res.size()) {
    return ParameterError("selection vector and responses differ in length");
  }
  for (const mpz_class& r : res) {
    if (r < 0 || r >= pk.n()) {
      return ParameterError("response element does not fit the plaintext");
    }
  }
  AheCiphertext acc = pk.ScalarMul(w[0], res[0]);
  for (size_t j = 1; j < w.size(); ++j) {
    acc = pk.Add(acc, pk.ScalarMul(w[j], res[j]));
  }
  return acc;
}

absl::StatusOr<std::vector<OtResponse>> MrRespond(const MessageTable& table,
                                                  const GroupParams& params,
                                                  const BetaPair& beta,
                                                  RandomSource& rng) {
  std::vector<OtResponse> out;
  out.reserve(table.z());
  for (size_t i = 0; i < table.z(); ++i) {
    const auto& [m0, m1] = table.pair(i);
    ASSIGN_OR_RETURN(OtResponse res, DqSGenRes(m0, m1, params, beta, rng));
    out.push_back(std::move(res));
  }
  return out;
}

absl::StatusOr<OtResponse> MrSelect(const std::vector<OtResponse>& responses,
                                    uint32_t v) {
  if (v >= responses.size()) return ParameterError("row index out of range");
  return responses[v];
}

absl::StatusOr<std::vector<OtResponse>> DuqMrRespond(const MessageTable& table,
                                                     const GroupParams& params,
                                                     const BetaPair& beta,
                                                     const BitString& r3,
                                                     RandomSource& rng) {
  std::vector<OtResponse> out;
  out.reserve(table.z());
  for (size_t i = 0; i < table.z(); ++i) {
    const auto& [m0, m1] = table.pair(i);
    ASSIGN_OR_RETURN(TaggedResponse res,
                     DuqSGenRes(m0, m1, params, beta, r3, rng));
    out.push_back(std::move(res.pair));
  }
  return out;
}

absl::StatusOr<EncryptedPair> DuqMrFilter(const std::vector<OtResponse>& tagged,
                                          const std::vector<AheCiphertext>& w,
                                          const PaillierPublicKey& pk) {
  std::vector<const HashedCiphertext*> first;
  std::vector<const HashedCiphertext*> second;
  for (const OtResponse& res : tagged) {
    first.push_back(&res.e0);
    second.push_back(&res.e1);
  }
  ASSIGN_OR_RETURN(EncryptedCiphertext o0, FilterColumn(first, w, pk));
  ASSIGN_OR_RETURN(EncryptedCiphertext o1, FilterColumn(second, w, pk));
  return EncryptedPair{std::move(o0), std::move(o1)};
}

absl::StatusOr<HashedCiphertext> DecryptHashedCiphertext(
    const EncryptedCiphertext& c, const PaillierPrivateKey& sk,
    const GroupParams& params, size_t masked_bits) {
  GroupElement ephemeral{sk.Decrypt(c.ephemeral)};
  if (!params.Contains(ephemeral)) {
    return ProtocolViolationError("decrypted element outside the subgroup");
  }
  ASSIGN_OR_RETURN(BitString masked,
                   PlaintextBits(sk.Decrypt(c.masked), masked_bits));
  return HashedCiphertext{std::move(ephemeral), std::move(masked)};
}

absl::StatusOr<BitString> DuqMrRetrieve(const EncryptedPair& pair,
                                        const PaillierPrivateKey& sk,
                                        const Scalar& r1, const Scalar& r2,
                                        BitShare s2, const BitString& r3,
                                        size_t sigma,
                                        const GroupParams& params) {
  size_t masked_bits = sigma + r3.size();
  ASSIGN_OR_RETURN(HashedCiphertext e0,
                   DecryptHashedCiphertext(pair.o0, sk, params, masked_bits));
  ASSIGN_OR_RETURN(HashedCiphertext e1,
                   DecryptHashedCiphertext(pair.o1, sk, params, masked_bits));
  Scalar x = RetrievalExponent(s2, r1, r2, params);
  return SelectTagged(UnmaskWithExponent(e0, x, params, kOracleG),
                      UnmaskWithExponent(e1, x, params, kOracleG), r3);
}

absl::StatusOr<std::pair<ThinQuery, OtNSecret>> ThinRequest(
    const GroupParams& params, const PaillierPublicKey& pk, uint32_t index,
    uint32_t n, RandomSource& rng) {
  ASSIGN_OR_RETURN(auto base, RGenQueryN(params, index, n, rng));
  ASSIGN_OR_RETURN(std::vector<AheCiphertext> w,
                   EncryptSelectionVector(index, n, pk, rng));
  return std::make_pair(ThinQuery{base.first, std::move(w)},
                        std::move(base.second));
}

absl::StatusOr<EncryptedCiphertext> ThinRespond(
    const std::vector<BitString>& messages, const GroupParams& params,
    const PaillierPublicKey& pk, const ThinQuery& query, RandomSource& rng) {
  if (messages.size() != query.selection.size()) {
    return ParameterError("selection vector length differs from n");
  }
  ASSIGN_OR_RETURN(std::vector<HashedCiphertext> all,
                   SGenResN(messages, params, query.base, rng));
  std::vector<const HashedCiphertext*> column;
  column.reserve(all.size());
  for (const HashedCiphertext& c : all) column.push_back(&c);
  return FilterColumn(column, query.selection, pk);
}

absl::StatusOr<BitString> ThinRetrieve(const EncryptedCiphertext& response,
                                       const PaillierPrivateKey& sk,
                                       const OtNSecret& secret, size_t sigma,
                                       const GroupParams& params) {
  ASSIGN_OR_RETURN(HashedCiphertext selected,
                   DecryptHashedCiphertext(response, sk, params, sigma));
  return RRetrieveN(selected, secret, params);
}

}  // namespace dqot
