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

#include "dqot/ot/naor_pinkas.h"

#include "dqot/util/errors.h"

namespace dqot {
namespace {

constexpr std::string_view kIndexedElementLabel = "np-n";

HashedCiphertext Encrypt(const BitString& m, const GroupElement& beta,
                         const Scalar& y, const GroupParams& params,
                         std::string_view label) {
  GroupElement shared = Pow(beta, y, params);
  return {PowG(y, params), RoHash(label, shared, m.size(), params) ^ m};
}

}  // namespace

absl::StatusOr<GroupParams> SInit(size_t security_bits, RandomSource& rng) {
  return GenParams(security_bits, rng);
}

OtQuery QueryForSecret(const GroupParams& params, const OtSecret& secret) {
  GroupElement beta_s = PowG(secret.r, params);
  if (secret.s.value == 0) return {beta_s};
  return {Div(params.c(), beta_s, params)};
}

std::pair<OtQuery, OtSecret> RGenQuery(const GroupParams& params, ChoiceBit s,
                                       RandomSource& rng) {
  OtSecret secret{RandomNonzeroScalar(rng, params), s};
  return {QueryForSecret(params, secret), secret};
}

absl::StatusOr<OtResponse> SGenResWithNonces(
    const BitString& m0, const BitString& m1, const GroupParams& params,
    const GroupElement& beta0, const GroupElement& beta1, const Scalar& y0,
    const Scalar& y1, std::string_view label) {
  if (m0.empty() || m0.size() != m1.size()) {
    return ParameterError("messages must share one nonzero block length");
  }
  if (m0.size() > kMaxOracleBits) {
    return ParameterError("message block exceeds the oracle output limit");
  }
  if (!params.Contains(beta0) || !params.Contains(beta1)) {
    return ProtocolViolationError("query element outside the subgroup");
  }
  if (Mul(beta0, beta1, params) != params.c()) {
    return ProtocolViolationError("query pair does not multiply to C");
  }
  return OtResponse{Encrypt(m0, beta0, y0, params, label),
                    Encrypt(m1, beta1, y1, params, label)};
}

absl::StatusOr<OtResponse> SGenResForPair(
    const BitString& m0, const BitString& m1, const GroupParams& params,
    const GroupElement& beta0, const GroupElement& beta1, RandomSource& rng,
    std::string_view label) {
  Scalar y0 = RandomNonzeroScalar(rng, params);
  Scalar y1 = RandomNonzeroScalar(rng, params);
  return SGenResWithNonces(m0, m1, params, beta0, beta1, y0, y1, label);
}

absl::StatusOr<OtResponse> SGenRes(const BitString& m0, const BitString& m1,
                                   const GroupParams& params,
                                   const OtQuery& query, RandomSource& rng) {
  if (!params.Contains(query.beta0)) {
    return ProtocolViolationError("query element outside the subgroup");
  }
  GroupElement beta1 = Div(params.c(), query.beta0, params);
  return SGenResForPair(m0, m1, params, query.beta0, beta1, rng);
}

BitString UnmaskWithExponent(const HashedCiphertext& c, const Scalar& x,
                             const GroupParams& params,
                             std::string_view label) {
  GroupElement shared = Pow(c.ephemeral, x, params);
  return RoHash(label, shared, c.masked.size(), params) ^ c.masked;
}

BitString RRetrieve(const OtResponse& res, const OtSecret& secret,
                    const GroupParams& params) {
  return UnmaskWithExponent(res.at(secret.s.value), secret.r, params);
}

GroupElement PublicElementN(uint32_t i, const GroupParams& params) {
  if (i == 1) return params.c();
  return DeriveIndexedElement(kIndexedElementLabel, i, params);
}

absl::StatusOr<std::pair<OtNQuery, OtNSecret>> RGenQueryN(
    const GroupParams& params, uint32_t index, uint32_t n, RandomSource& rng) {
  if (n == 0 || index >= n) return ParameterError("index out of range");
  OtNSecret secret{RandomNonzeroScalar(rng, params), index};
  GroupElement pk_index = PowG(secret.r, params);
  if (index == 0) return std::make_pair(OtNQuery{pk_index}, secret);
  return std::make_pair(
      OtNQuery{Div(PublicElementN(index, params), pk_index, params)}, secret);
}

absl::StatusOr<std::vector<HashedCiphertext>> SGenResN(
    const std::vector<BitString>& messages, const GroupParams& params,
    const OtNQuery& query, RandomSource& rng) {
  if (messages.empty()) return ParameterError("no messages");
  if (!params.Contains(query.pk0)) {
    return ProtocolViolationError("query element outside the subgroup");
  }
  std::vector<HashedCiphertext> out;
  out.reserve(messages.size());
  for (uint32_t i = 0; i < messages.size(); ++i) {
    if (messages[i].empty() || messages[i].size() != messages[0].size()) {
      return ParameterError("messages must share one nonzero block length");
    }
    GroupElement pk =
        i == 0 ? query.pk0 : Div(PublicElementN(i, params), query.pk0, params);
    Scalar y = RandomNonzeroScalar(rng, params);
    out.push_back(Encrypt(messages[i], pk, y, params, kOracleH));
  }
  return out;
}

BitString RRetrieveN(const HashedCiphertext& selected, const OtNSecret& secret,
                     const GroupParams& params) {
  return UnmaskWithExponent(selected, secret.r, params);
}

}  // namespace dqot
