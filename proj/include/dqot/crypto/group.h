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

#ifndef DQOT_CRYPTO_GROUP_H_
#define DQOT_CRYPTO_GROUP_H_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "dqot/crypto/bit_string.h"
#include "dqot/crypto/random.h"

namespace dqot {

// Smallest accepted modulus size. Production deployments should use
// kDefaultSecurityBits; tiny sizes exist so tests can enumerate the subgroup.
inline constexpr size_t kMinSecurityBits = 5;
inline constexpr size_t kDefaultSecurityBits = 2048;

// Exponent in Z_q.
struct Scalar {
  mpz_class value;
  friend bool operator==(const Scalar&, const Scalar&) = default;
};

// Element of the order-q subgroup of Z_p^*. Membership is checked wherever a
// value enters from outside (decoding, protocol inputs), not on every copy.
struct GroupElement {
  mpz_class value;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// Safe-prime group description: p = 2q + 1, g generates the order-q subgroup
// and C is a subgroup element whose discrete log nobody knows.
class GroupParams {
 public:
  // Validates every invariant: p and q prime, p = 2q + 1, g and C in the
  // subgroup, g != 1.
  static absl::StatusOr<GroupParams> Create(const mpz_class& p,
                                            const mpz_class& g,
                                            const mpz_class& c);

  const mpz_class& p() const { return p_; }
  const mpz_class& q() const { return q_; }
  GroupElement g() const { return {g_}; }
  GroupElement c() const { return {c_}; }

  // Width of the canonical big-endian element encoding: ceil(bits(p) / 8).
  size_t element_bytes() const { return element_bytes_; }
  size_t bits() const;

  bool Contains(const mpz_class& value) const;
  bool Contains(const GroupElement& e) const { return Contains(e.value); }

  friend bool operator==(const GroupParams&, const GroupParams&) = default;

 private:
  GroupParams(mpz_class p, mpz_class q, mpz_class g, mpz_class c);

  mpz_class p_;
  mpz_class q_;
  mpz_class g_;
  mpz_class c_;
  size_t element_bytes_ = 0;
};

// Generates a fresh safe-prime group of exactly `security_bits` bits with a
// public element C = h^2 mod p for random h. Fails with a generation-failure
// status if the candidate budget runs out.
absl::StatusOr<GroupParams> GenParams(size_t security_bits, RandomSource& rng);

GroupElement Pow(const GroupElement& base, const Scalar& e,
                 const GroupParams& params);
// g^e.
GroupElement PowG(const Scalar& e, const GroupParams& params);
GroupElement Mul(const GroupElement& a, const GroupElement& b,
                 const GroupParams& params);
// a * b^-1.
GroupElement Div(const GroupElement& a, const GroupElement& b,
                 const GroupParams& params);
GroupElement Inverse(const GroupElement& a, const GroupParams& params);

Scalar ScalarAdd(const Scalar& a, const Scalar& b, const GroupParams& params);
Scalar ScalarSub(const Scalar& a, const Scalar& b, const GroupParams& params);
Scalar ScalarMul(const Scalar& a, const Scalar& b, const GroupParams& params);
Scalar ScalarNeg(const Scalar& a, const GroupParams& params);
// Reduces an arbitrary integer into [0, q).
Scalar ScalarFromInteger(const mpz_class& v, const GroupParams& params);

Scalar RandomScalar(RandomSource& rng, const GroupParams& params);
Scalar RandomNonzeroScalar(RandomSource& rng, const GroupParams& params);

std::vector<uint8_t> EncodeElement(const GroupElement& e,
                                   const GroupParams& params);
// Rejects wrong widths and values outside the subgroup.
absl::StatusOr<GroupElement> DecodeElement(std::span<const uint8_t> bytes,
                                           const GroupParams& params);

// Random oracle: SHA-256 over (label || 0x00 || encode(input) || counter)
// for counter = 0, 1, ..., concatenated and truncated to `out_bits`.
// "H" and "G" are the two labels the protocols use.
inline constexpr std::string_view kOracleH = "H";
inline constexpr std::string_view kOracleG = "G";
inline constexpr size_t kMaxOracleBits = size_t{1} << 16;

BitString RoHash(std::string_view label, const GroupElement& input,
                 size_t out_bits, const GroupParams& params);

// Hashes (label, C, index) into the subgroup by squaring, giving extra
// public elements with unknown discrete logs.
GroupElement DeriveIndexedElement(std::string_view label, uint32_t index,
                                  const GroupParams& params);

}  // namespace dqot

#endif  // DQOT_CRYPTO_GROUP_H_
