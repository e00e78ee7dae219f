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

#include "dqot/crypto/paillier.h"

#include "dqot/crypto/bigint.h"
#include "dqot/util/errors.h"

namespace dqot {
namespace {

constexpr size_t kMinModulusBits = 64;
constexpr int kPrimeCandidates = 100000;

// Random prime with its top two bits set, so the product of two such primes
// has exactly twice the bits.
absl::StatusOr<mpz_class> RandomPrime(size_t bits, RandomSource& rng) {
  for (int attempt = 0; attempt < kPrimeCandidates; ++attempt) {
    mpz_class c = RandomExactBits(rng, bits);
    mpz_setbit(c.get_mpz_t(), bits - 2);
    mpz_setbit(c.get_mpz_t(), 0);
    if (mpz_probab_prime_p(c.get_mpz_t(), 30) > 0) return c;
  }
  return GenerationFailureError("prime search exhausted its budget");
}

mpz_class L(const mpz_class& u, const mpz_class& n) { return (u - 1) / n; }

}  // namespace

PaillierPublicKey::PaillierPublicKey(mpz_class n)
    : n_(std::move(n)), n_squared_(n_ * n_) {
  ciphertext_bytes_ = ByteLength(n_squared_);
}

absl::StatusOr<AheCiphertext> PaillierPublicKey::Encrypt(
    const mpz_class& plaintext, RandomSource& rng) const {
  if (plaintext < 0 || plaintext >= n_) {
    return ParameterError("plaintext outside [0, N)");
  }
  mpz_class r;
  do {
    r = RandomNonzeroBelow(rng, n_);
  } while (gcd(r, n_) != 1);
  // (1 + N)^m = 1 + mN (mod N^2).
  mpz_class gm = (1 + plaintext * n_) % n_squared_;
  mpz_class rn;
  mpz_powm(rn.get_mpz_t(), r.get_mpz_t(), n_.get_mpz_t(),
           n_squared_.get_mpz_t());
  return AheCiphertext{(gm * rn) % n_squared_};
}

AheCiphertext PaillierPublicKey::Add(const AheCiphertext& a,
                                     const AheCiphertext& b) const {
  return {(a.value * b.value) % n_squared_};
}

AheCiphertext PaillierPublicKey::ScalarMul(const AheCiphertext& c,
                                           const mpz_class& k) const {
  mpz_class e;
  mpz_fdiv_r(e.get_mpz_t(), k.get_mpz_t(), n_.get_mpz_t());
  AheCiphertext out;
  mpz_powm(out.value.get_mpz_t(), c.value.get_mpz_t(), e.get_mpz_t(),
           n_squared_.get_mpz_t());
  return out;
}

std::vector<uint8_t> PaillierPublicKey::Serialize(
    const AheCiphertext& c) const {
  return BigIntToBytes(c.value, ciphertext_bytes_);
}

absl::StatusOr<AheCiphertext> PaillierPublicKey::Deserialize(
    std::span<const uint8_t> bytes) const {
  if (bytes.size() != ciphertext_bytes_) {
    return ProtocolViolationError("ciphertext has the wrong width");
  }
  AheCiphertext c{BigIntFromBytes(bytes)};
  if (c.value <= 0 || c.value >= n_squared_ || gcd(c.value, n_) != 1) {
    return ProtocolViolationError("value is not a valid ciphertext");
  }
  return c;
}

PaillierPrivateKey::PaillierPrivateKey(const mpz_class& p, const mpz_class& q)
    : n_(p * q), n_squared_(n_ * n_) {
  mpz_class pm1 = p - 1;
  mpz_class qm1 = q - 1;
  mpz_lcm(lambda_.get_mpz_t(), pm1.get_mpz_t(), qm1.get_mpz_t());
  mpz_class u;
  mpz_class g = n_ + 1;
  mpz_powm(u.get_mpz_t(), g.get_mpz_t(), lambda_.get_mpz_t(),
           n_squared_.get_mpz_t());
  mpz_class lu = L(u, n_);
  mpz_invert(mu_.get_mpz_t(), lu.get_mpz_t(), n_.get_mpz_t());
}

mpz_class PaillierPrivateKey::Decrypt(const AheCiphertext& c) const {
  mpz_class u;
  mpz_powm(u.get_mpz_t(), c.value.get_mpz_t(), lambda_.get_mpz_t(),
           n_squared_.get_mpz_t());
  return (L(u, n_) * mu_) % n_;
}

absl::StatusOr<AheKeys> AheKeyGen(size_t modulus_bits, RandomSource& rng) {
  if (modulus_bits < kMinModulusBits || modulus_bits % 2 != 0) {
    return ParameterError("modulus bits must be even and at least 64");
  }
  size_t half = modulus_bits / 2;
  mpz_class p;
  mpz_class q;
  do {
    auto p_or = RandomPrime(half, rng);
    if (!p_or.ok()) return p_or.status();
    auto q_or = RandomPrime(half, rng);
    if (!q_or.ok()) return q_or.status();
    p = *p_or;
    q = *q_or;
  } while (p == q || gcd(p * q, (p - 1) * (q - 1)) != 1);
  return AheKeys{PaillierPublicKey(p * q), PaillierPrivateKey(p, q)};
}

}  // namespace dqot
