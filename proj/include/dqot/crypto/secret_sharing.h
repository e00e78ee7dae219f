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

#ifndef DQOT_CRYPTO_SECRET_SHARING_H_
#define DQOT_CRYPTO_SECRET_SHARING_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "dqot/crypto/bit_string.h"
#include "dqot/crypto/random.h"

namespace dqot {

// The receiver's private index. Kept distinct from BitShare so an API that
// must never see the index can be checked at compile time.
struct ChoiceBit {
  uint8_t value = 0;
  friend bool operator==(ChoiceBit, ChoiceBit) = default;
};

// One XOR share of a single-bit secret.
struct BitShare {
  uint8_t value = 0;
  friend bool operator==(BitShare, BitShare) = default;
};

// One XOR share of a bit-string secret; its length equals the secret's.
using StringShare = BitString;

// n-of-n XOR sharing: the first n - 1 shares are uniform, the last one is
// their XOR with the secret.
absl::StatusOr<std::vector<StringShare>> Share(const BitString& secret, int n,
                                               RandomSource& rng);

// XOR fold of all shares. A single share reconstructs to itself.
absl::StatusOr<BitString> Reconstruct(const std::vector<StringShare>& shares);

// Two-party split of a choice bit.
std::pair<BitShare, BitShare> ShareBit(ChoiceBit secret, RandomSource& rng);
ChoiceBit ReconstructBit(BitShare a, BitShare b);

// Controlled swap: identity for ctrl = 0, exchanges the elements for 1.
template <typename V>
std::pair<V, V> ControlledSwap(BitShare ctrl, std::pair<V, V> pair) {
  if (ctrl.value & 1) std::swap(pair.first, pair.second);
  return pair;
}

}  // namespace dqot

#endif  // DQOT_CRYPTO_SECRET_SHARING_H_
