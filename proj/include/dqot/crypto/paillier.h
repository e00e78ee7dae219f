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

#ifndef DQOT_CRYPTO_PAILLIER_H_
#define DQOT_CRYPTO_PAILLIER_H_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "dqot/crypto/random.h"

namespace dqot {

struct AheCiphertext {
  mpz_class value;
  friend bool operator==(const AheCiphertext&, const AheCiphertext&) = default;
};

// Paillier public key with generator N + 1.
class PaillierPublicKey {
 public:
  explicit PaillierPublicKey(mpz_class n);

  const mpz_class& n() const { return n_; }
  const mpz_class& n_squared() const { return n_squared_; }
  // Wire width of one ciphertext: ceil(bits(N^2) / 8).
  size_t ciphertext_bytes() const { return ciphertext_bytes_; }

  // Plaintext must lie in [0, N).
  absl::StatusOr<AheCiphertext> Encrypt(const mpz_class& plaintext,
                                        RandomSource& rng) const;
  AheCiphertext Add(const AheCiphertext& a, const AheCiphertext& b) const;
  // Multiplies the plaintext by k (reduced mod N).
  AheCiphertext ScalarMul(const AheCiphertext& c, const mpz_class& k) const;

  std::vector<uint8_t> Serialize(const AheCiphertext& c) const;
  absl::StatusOr<AheCiphertext> Deserialize(
      std::span<const uint8_t> bytes) const;

  friend bool operator==(const PaillierPublicKey& a,
                         const PaillierPublicKey& b) {
    return a.n_ == b.n_;
  }

 private:
  mpz_class n_;
  mpz_class n_squared_;
  size_t ciphertext_bytes_;
};

class PaillierPrivateKey {
 public:
  PaillierPrivateKey(const mpz_class& p, const mpz_class& q);

  mpz_class Decrypt(const AheCiphertext& c) const;

 private:
  mpz_class n_;
  mpz_class n_squared_;
  mpz_class lambda_;
  mpz_class mu_;
};

struct AheKeys {
  PaillierPublicKey public_key;
  PaillierPrivateKey private_key;
};

// N has exactly `modulus_bits` bits; the two primes have modulus_bits / 2
// bits each.
absl::StatusOr<AheKeys> AheKeyGen(size_t modulus_bits, RandomSource& rng);

}  // namespace dqot

#endif  // DQOT_CRYPTO_PAILLIER_H_
