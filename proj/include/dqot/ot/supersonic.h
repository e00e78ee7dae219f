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

#ifndef DQOT_OT_SUPERSONIC_H_
#define DQOT_OT_SUPERSONIC_H_

#include <cstddef>
#include <utility>

#include "absl/status/statusor.h"
#include "dqot/crypto/bit_string.h"
#include "dqot/crypto/random.h"
#include "dqot/crypto/secret_sharing.h"

// One-time-pad OT with a filtering helper. Deliberately free of any
// public-key or group code.
namespace dqot::supersonic {

// Two one-time pads. Move-only and consumed by Retrieve, so a key pair cannot
// be reused across invocations by accident.
class PadKeys {
 public:
  PadKeys(BitString k0, BitString k1);
  PadKeys(PadKeys&&) = default;
  PadKeys& operator=(PadKeys&&) = default;
  PadKeys(const PadKeys&) = delete;
  PadKeys& operator=(const PadKeys&) = delete;

  // Explicit copy for the sender's side of the setup channel.
  PadKeys Clone() const { return PadKeys(k0_, k1_); }

  const BitString& k0() const { return k0_; }
  const BitString& k1() const { return k1_; }
  const BitString& at(uint8_t i) const { return (i & 1) ? k1_ : k0_; }
  size_t sigma() const { return k0_.size(); }

 private:
  BitString k0_;
  BitString k1_;
};

struct SwappedPair {
  BitString c0;
  BitString c1;
  friend bool operator==(const SwappedPair&, const SwappedPair&) = default;
};

// Phase 1: two fresh uniform sigma-bit keys.
absl::StatusOr<PadKeys> Setup(RandomSource& rng, size_t sigma);

// Phase 2: q1 xor q2 = s.
std::pair<BitShare, BitShare> GenQuery(ChoiceBit s, RandomSource& rng);

// Phase 3: cswap(q1, (m0 xor k0, m1 xor k1)).
absl::StatusOr<SwappedPair> GenRes(const BitString& m0, const BitString& m1,
                                   const PadKeys& keys, BitShare q1);

// Phase 4: the first element of cswap(q2, res). The second one is dropped.
BitString OblFilter(const SwappedPair& res, BitShare q2);

// Phase 5: filtered xor k_s.
BitString Retrieve(const BitString& filtered, PadKeys&& keys, ChoiceBit s);

}  // namespace dqot::supersonic

#endif  // DQOT_OT_SUPERSONIC_H_
