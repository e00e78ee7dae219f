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

#include "dqot/ot/supersonic.h"

#include "dqot/util/errors.h"

namespace dqot::supersonic {

PadKeys::PadKeys(BitString k0, BitString k1)
    : k0_(std::move(k0)), k1_(std::move(k1)) {}

absl::StatusOr<PadKeys> Setup(RandomSource& rng, size_t sigma) {
  if (sigma == 0) return ParameterError("sigma must be at least 1");
  BitString k0 = BitString::Random(rng, sigma);
  BitString k1 = BitString::Random(rng, sigma);
  return PadKeys(std::move(k0), std::move(k1));
}

std::pair<BitShare, BitShare> GenQuery(ChoiceBit s, RandomSource& rng) {
  return ShareBit(s, rng);
}

absl::StatusOr<SwappedPair> GenRes(const BitString& m0, const BitString& m1,
                                   const PadKeys& keys, BitShare q1) {
  if (m0.size() != keys.sigma() || m1.size() != keys.sigma()) {
    return ParameterError("message length differs from the pad length");
  }
  auto [c0, c1] =
      ControlledSwap(q1, std::make_pair(m0 ^ keys.k0(), m1 ^ keys.k1()));
  return SwappedPair{std::move(c0), std::move(c1)};
}

BitString OblFilter(const SwappedPair& res, BitShare q2) {
  return (q2.value & 1) ? res.c1 : res.c0;
}

BitString Retrieve(const BitString& filtered, PadKeys&& keys, ChoiceBit s) {
  PadKeys consumed = std::move(keys);
  return filtered ^ consumed.at(s.value);
}

}  // namespace dqot::supersonic
