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

#include "dqot/crypto/group.h"

#include <openssl/sha.h>

#include <algorithm>
#include <string>

#include "dqot/crypto/bigint.h"
#include "dqot/util/errors.h"

namespace dqot {
namespace {

constexpr int kPrimalityReps = 30;
constexpr size_t kSieveWindow = 1 << 12;
constexpr size_t kSieveLimit = 1 << 14;
constexpr int kMaxWindows = 20000;
// Below this size the safe primes are enumerated outright.
constexpr size_t kEnumerationBits = 20;

const std::vector<uint32_t>& SmallOddPrimes() {
  static const std::vector<uint32_t> primes = [] {
    std::vector<bool> composite(kSieveLimit, false);
    std::vector<uint32_t> out;
    for (uint32_t i = 3; i < kSieveLimit; i += 2) {
      if (composite[i]) continue;
      out.push_back(i);
      for (uint64_t j = uint64_t{i} * i; j < kSieveLimit; j += 2 * i) {
        composite[j] = true;
      }
    }
    return out;
  }();
  return primes;
}

bool IsProbablePrime(const mpz_class& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), kPrimalityReps) > 0;
}

// Smallest integer >= 2 that lies in the order-q subgroup.
mpz_class CanonicalGenerator(const mpz_class& p) {
  for (mpz_class h = 2;; ++h) {
    if (mpz_legendre(h.get_mpz_t(), p.get_mpz_t()) == 1) return h;
  }
}

absl::StatusOr<mpz_class> EnumerateSafePrime(size_t bits, RandomSource& rng) {
  std::vector<mpz_class> candidates;
  mpz_class lo = mpz_class(1) << (bits - 1);
  mpz_class hi = mpz_class(1) << bits;
  for (mpz_class p = lo | 1; p < hi; p += 2) {
    mpz_class q = (p - 1) / 2;
    if (q > 1 && IsProbablePrime(p) && IsProbablePrime(q)) {
      candidates.push_back(p);
    }
  }
  if (candidates.empty()) {
    return GenerationFailureError("no safe prime of the requested size");
  }
  mpz_class pick = RandomBelow(rng, mpz_class(candidates.size()));
  return candidates[pick.get_ui()];
}

absl::StatusOr<mpz_class> SieveSafePrime(size_t bits, RandomSource& rng) {
  const auto& primes = SmallOddPrimes();
  const mpz_class q_limit = mpz_class(1) << (bits - 1);
  std::vector<uint8_t> dead(kSieveWindow);
  for (int window = 0; window < kMaxWindows; ++window) {
    mpz_class q0 = RandomExactBits(rng, bits - 1) | 1;
    std::fill(dead.begin(), dead.end(), 0);
    for (uint32_t r : primes) {
      uint64_t q0_mod = mpz_fdiv_ui(q0.get_mpz_t(), r);
      uint64_t inv2 = (r + 1) / 2;
      uint64_t inv4 = (inv2 * inv2) % r;
      // q0 + 2k == 0 (mod r)
      uint64_t kq = ((r - q0_mod) % r) * inv2 % r;
      // 2 q0 + 1 + 4k == 0 (mod r)
      uint64_t kp = ((r - (2 * q0_mod + 1) % r) % r) * inv4 % r;
      for (uint64_t k = kq; k < kSieveWindow; k += r) dead[k] = 1;
      for (uint64_t k = kp; k < kSieveWindow; k += r) dead[k] = 1;
    }
    for (size_t k = 0; k < kSieveWindow; ++k) {
      if (dead[k]) continue;
      mpz_class q = q0 + 2 * mpz_class(static_cast<unsigned long>(k));
      if (q >= q_limit) break;
      mpz_class p = 2 * q + 1;
      mpz_class fermat;
      mpz_class two = 2;
      mpz_class p_minus_1 = p - 1;
      mpz_powm(fermat.get_mpz_t(), two.get_mpz_t(), p_minus_1.get_mpz_t(),
               p.get_mpz_t());
      if (fermat != 1) continue;
      if (IsProbablePrime(q) && IsProbablePrime(p)) return p;
    }
  }
  return GenerationFailureError("safe-prime search exhausted its budget");
}

std::vector<uint8_t> ExpandHash(std::string_view label,
                                std::span<const uint8_t> body,
                                size_t out_bytes) {
  std::vector<uint8_t> input;
  input.reserve(label.size() + 1 + body.size() + 4);
  input.insert(input.end(), label.begin(), label.end());
  input.push_back(0);
  input.insert(input.end(), body.begin(), body.end());
  size_t counter_at = input.size();
  input.resize(counter_at + 4);

  std::vector<uint8_t> out(((out_bytes + 31) / 32) * 32);
  for (uint32_t block = 0; block * 32 < out_bytes; ++block) {
    input[counter_at] = static_cast<uint8_t>(block >> 24);
    input[counter_at + 1] = static_cast<uint8_t>(block >> 16);
    input[counter_at + 2] = static_cast<uint8_t>(block >> 8);
    input[counter_at + 3] = static_cast<uint8_t>(block);
    SHA256(input.data(), input.size(), out.data() + 32 * block);
  }
  out.resize(out_bytes);
  return out;
}

}  // namespace

GroupParams::GroupParams(mpz_class p, mpz_class q, mpz_class g, mpz_class c)
    : p_(std::move(p)), q_(std::move(q)), g_(std::move(g)), c_(std::move(c)) {
  element_bytes_ = ByteLength(p_);
}

absl::StatusOr<GroupParams> GroupParams::Create(const mpz_class& p,
                                                const mpz_class& g,
                                                const mpz_class& c) {
  if (p < 5 || !IsProbablePrime(p)) return ParameterError("p is not prime");
  mpz_class q = (p - 1) / 2;
  if (!IsProbablePrime(q)) return ParameterError("p is not a safe prime");
  GroupParams params(p, q, g, c);
  if (g == 1 || !params.Contains(g)) {
    return ParameterError("g does not generate the order-q subgroup");
  }
  if (!params.Contains(c)) return ParameterError("C is not in the subgroup");
  return params;
}

size_t GroupParams::bits() const { return BitLength(p_); }

bool GroupParams::Contains(const mpz_class& value) const {
  if (value <= 0 || value >= p_) return false;
  // For a safe prime the order-q subgroup is exactly the quadratic residues.
  return mpz_legendre(value.get_mpz_t(), p_.get_mpz_t()) == 1;
}

absl::StatusOr<GroupParams> GenParams(size_t security_bits, RandomSource& rng) {
  if (security_bits < kMinSecurityBits) {
    return ParameterError("security_bits below the supported minimum");
  }
  absl::StatusOr<mpz_class> p = security_bits <= kEnumerationBits
                                    ? EnumerateSafePrime(security_bits, rng)
                                    : SieveSafePrime(security_bits, rng);
  if (!p.ok()) return p.status();
  mpz_class g = CanonicalGenerator(*p);
  // h in [2, p - 2] so that C = h^2 is never the identity.
  mpz_class h = RandomBelow(rng, *p - 3) + 2;
  mpz_class c = (h * h) % *p;
  return GroupParams::Create(*p, g, c);
}

GroupElement Pow(const GroupElement& base, const Scalar& e,
                 const GroupParams& params) {
  GroupElement out;
  mpz_powm(out.value.get_mpz_t(), base.value.get_mpz_t(), e.value.get_mpz_t(),
           params.p().get_mpz_t());
  return out;
}

GroupElement PowG(const Scalar& e, const GroupParams& params) {
  return Pow(params.g(), e, params);
}

GroupElement Mul(const GroupElement& a, const GroupElement& b,
                 const GroupParams& params) {
  return {(a.value * b.value) % params.p()};
}

GroupElement Inverse(const GroupElement& a, const GroupParams& params) {
  GroupElement out;
  mpz_invert(out.value.get_mpz_t(), a.value.get_mpz_t(),
             params.p().get_mpz_t());
  return out;
}

GroupElement Div(const GroupElement& a, const GroupElement& b,
                 const GroupParams& params) {
  return Mul(a, Inverse(b, params), params);
}

Scalar ScalarFromInteger(const mpz_class& v, const GroupParams& params) {
  Scalar out;
  mpz_fdiv_r(out.value.get_mpz_t(), v.get_mpz_t(), params.q().get_mpz_t());
  return out;
}

Scalar ScalarAdd(const Scalar& a, const Scalar& b, const GroupParams& params) {
  return ScalarFromInteger(a.value + b.value, params);
}

Scalar ScalarSub(const Scalar& a, const Scalar& b, const GroupParams& params) {
  return ScalarFromInteger(a.value - b.value, params);
}

Scalar ScalarMul(const Scalar& a, const Scalar& b, const GroupParams& params) {
  return ScalarFromInteger(a.value * b.value, params);
}

Scalar ScalarNeg(const Scalar& a, const GroupParams& params) {
  return ScalarFromInteger(-a.value, params);
}

Scalar RandomScalar(RandomSource& rng, const GroupParams& params) {
  return {RandomBelow(rng, params.q())};
}

Scalar RandomNonzeroScalar(RandomSource& rng, const GroupParams& params) {
  return {RandomNonzeroBelow(rng, params.q())};
}

std::vector<uint8_t> EncodeElement(const GroupElement& e,
                                   const GroupParams& params) {
  return BigIntToBytes(e.value, params.element_bytes());
}

absl::StatusOr<GroupElement> DecodeElement(std::span<const uint8_t> bytes,
                                           const GroupParams& params) {
  if (bytes.size() != params.element_bytes()) {
    return ProtocolViolationError("group element has the wrong width");
  }
  GroupElement e{BigIntFromBytes(bytes)};
  if (!params.Contains(e)) {
    return ProtocolViolationError("value is not in the order-q subgroup");
  }
  return e;
}

BitString RoHash(std::string_view label, const GroupElement& input,
                 size_t out_bits, const GroupParams& params) {
  std::vector<uint8_t> encoded = EncodeElement(input, params);
  std::vector<uint8_t> digest = ExpandHash(label, encoded, (out_bits + 7) / 8);
  return BitString::FromBytes(digest, out_bits);
}

GroupElement DeriveIndexedElement(std::string_view label, uint32_t index,
                                  const GroupParams& params) {
  std::vector<uint8_t> body = EncodeElement(params.c(), params);
  for (int shift = 24; shift >= 0; shift -= 8) {
    body.push_back(static_cast<uint8_t>(index >> shift));
  }
  body.push_back(0);
  for (uint8_t attempt = 0;; ++attempt) {
    body.back() = attempt;
    std::vector<uint8_t> wide =
        ExpandHash(label, body, params.element_bytes() + 16);
    mpz_class h = BigIntFromBytes(wide) % params.p();
    mpz_class e = (h * h) % params.p();
    if (e > 1) return {e};
  }
}

}  // namespace dqot
