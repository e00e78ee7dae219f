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

#include "dqot/crypto/secret_sharing.h"

#include "dqot/util/errors.h"

namespace dqot {

absl::StatusOr<std::vector<StringShare>> Share(const BitString& secret, int n,
                                               RandomSource& rng) {
  if (n < 2) return ParameterError("sharing needs at least two parties");
  if (secret.empty()) return ParameterError("secret is empty");
  std::vector<StringShare> shares;
  shares.reserve(n);
  BitString last = secret;
  for (int i = 0; i < n - 1; ++i) {
    shares.push_back(BitString::Random(rng, secret.size()));
    last ^= shares.back();
  }
  shares.push_back(std::move(last));
  return shares;
}

absl::StatusOr<BitString> Reconstruct(const std::vector<StringShare>& shares) {
  if (shares.empty()) return ParameterError("no shares to reconstruct");
  BitString out = shares.front();
  for (size_t i = 1; i < shares.size(); ++i) {
    if (shares[i].size() != out.size()) {
      return ParameterError("shares have mismatched lengths");
    }
    out ^= shares[i];
  }
  return out;
}

std::pair<BitShare, BitShare> ShareBit(ChoiceBit secret, RandomSource& rng) {
  BitShare first{rng.Bit()};
  BitShare second{static_cast<uint8_t>((secret.value ^ first.value) & 1)};
  return {first, second};
}

ChoiceBit ReconstructBit(BitShare a, BitShare b) {
  return {static_cast<uint8_t>((a.value ^ b.value) & 1)};
}

}  // namespace dqot
