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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dqot/crypto/random.h"
#include "dqot/util/errors.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace dqot {
namespace {

using ::dqot::testing::ScriptedRandom;
using ::dqot::testing::TwoSamplePValue;
using ::dqot::testing::UniformityPValue;

TEST(ShareTest, ForcedFirstShare) {
  // Low bit of the first byte is the first share.
  ScriptedRandom rng({0x00});
  auto shares = Share(BitString::FromBit(1), 2, rng);
  ASSERT_TRUE(shares.ok());
  EXPECT_EQ((*shares)[0], BitString::FromBit(0));
  EXPECT_EQ((*shares)[1], BitString::FromBit(1));

  ScriptedRandom bit_rng({0x00});
  auto [a, b] = ShareBit(ChoiceBit{1}, bit_rng);
  EXPECT_EQ(a.value, 0);
  EXPECT_EQ(b.value, 1);
}

TEST(ShareTest, RoundTrip) {
  Drbg rng(11, "share");
  for (int n : {2, 3, 5}) {
    for (int i = 0; i < 1000; ++i) {
      BitString s = BitString::Random(rng, 1 + rng.Byte() % 130);
      auto shares = Share(s, n, rng);
      ASSERT_TRUE(shares.ok());
      ASSERT_EQ(shares->size(), static_cast<size_t>(n));
      for (const BitString& sh : *shares) ASSERT_EQ(sh.size(), s.size());
      auto back = Reconstruct(*shares);
      ASSERT_TRUE(back.ok());
      ASSERT_EQ(*back, s);
    }
  }
}

TEST(ShareTest, ExhaustiveOneBit) {
  Drbg rng(12, "share1");
  for (uint8_t s : {0, 1}) {
    for (int i = 0; i < 64; ++i) {
      auto [a, b] = ShareBit(ChoiceBit{s}, rng);
      EXPECT_EQ(ReconstructBit(a, b).value, s);
    }
  }
}

TEST(ShareTest, Errors) {
  Drbg rng(1, "e");
  EXPECT_TRUE(IsParameterError(Share(BitString::FromBit(1), 1, rng).status()));
  EXPECT_TRUE(IsParameterError(Share(BitString(), 2, rng).status()));
  EXPECT_TRUE(IsParameterError(
      Reconstruct({BitString::Zeros(3), BitString::Zeros(4)}).status()));
}

TEST(ReconstructTest, Examples) {
  EXPECT_EQ(*Reconstruct({BitString::FromBit(0), BitString::FromBit(1)}),
            BitString::FromBit(1));
  BitString x = *BitString::FromHex("c3");
  EXPECT_EQ(*Reconstruct({x}), x);
  EXPECT_EQ(*Reconstruct({x, x}), BitString::Zeros(8));
}

TEST(ShareTest, FirstShareUniform) {
  Drbg rng(13, "chi");
  for (uint8_t s : {0, 1}) {
    std::vector<uint64_t> first(2), second(2);
    for (int i = 0; i < 10000; ++i) {
      auto [a, b] = ShareBit(ChoiceBit{s}, rng);
      ++first[a.value];
      ++second[b.value];
    }
    EXPECT_GT(UniformityPValue(first), 0.001) << "s=" << int{s};
    EXPECT_GT(UniformityPValue(second), 0.001) << "s=" << int{s};
  }
}

TEST(ShareTest, SingleShareIndependentOfSecret) {
  Drbg rng(14, "indep");
  // n = 3, string secrets: any two shares together look the same for either
  // secret. Bin on the joint 2+2 bits of shares 0 and 1.
  std::vector<uint64_t> h0(16), h1(16);
  BitString s0 = *BitString::FromHex("0");
  BitString s1 = *BitString::FromHex("f");
  for (int i = 0; i < 20000; ++i) {
    for (int which = 0; which < 2; ++which) {
      BitString secret = which ? s1 : s0;
      auto shares = *Share(secret.Slice(0, 2), 3, rng);
      int bin = (shares[0].bit(0) << 3) | (shares[0].bit(1) << 2) |
                (shares[1].bit(0) << 1) | shares[1].bit(1);
      ++(which ? h1 : h0)[bin];
    }
  }
  EXPECT_GT(TwoSamplePValue(h0, h1), 0.001);
  EXPECT_GT(UniformityPValue(h0), 0.001);
}

TEST(ControlledSwapTest, Examples) {
  std::pair<std::string, std::string> ab{"a", "b"};
  EXPECT_EQ(ControlledSwap(BitShare{0}, ab), ab);
  EXPECT_EQ(ControlledSwap(BitShare{1}, ab),
            std::make_pair(std::string("b"), std::string("a")));
  for (uint8_t x : {0, 1}) {
    EXPECT_EQ(ControlledSwap(BitShare{x}, ControlledSwap(BitShare{x}, ab)), ab);
  }
}

TEST(ControlledSwapTest, CompositionIsXor) {
  std::pair<int, int> pair{10, 20};
  for (uint8_t s1 : {0, 1}) {
    for (uint8_t s2 : {0, 1}) {
      auto composed =
          ControlledSwap(BitShare{s2}, ControlledSwap(BitShare{s1}, pair));
      auto direct =
          ControlledSwap(BitShare{static_cast<uint8_t>(s1 ^ s2)}, pair);
      EXPECT_EQ(composed, direct);
    }
  }
}

}  // namespace
}  // namespace dqot
