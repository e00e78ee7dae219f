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

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dqot/crypto/group.h"
#include "dqot/crypto/random.h"
#include "dqot/util/errors.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace dqot {
namespace {

using ::dqot::testing::TinyParams;
using ::dqot::testing::TwoSamplePValue;
using ::dqot::testing::UniformityPValue;

TEST(NaorPinkasTest, QueryExamplesInTinyGroup) {
  GroupParams params = TinyParams();
  EXPECT_EQ(QueryForSecret(params, {Scalar{4}, ChoiceBit{0}}).beta0.value, 16);
  EXPECT_EQ(QueryForSecret(params, {Scalar{4}, ChoiceBit{1}}).beta0.value, 8);
  for (uint8_t s : {0, 1}) {
    GroupElement b0 = QueryForSecret(params, {Scalar{4}, ChoiceBit{s}}).beta0;
    GroupElement b1 = Div(params.c(), b0, params);
    EXPECT_EQ(Mul(b0, b1, params), params.c());
    // g^r is the branch s element.
    EXPECT_EQ((s == 0 ? b0 : b1).value, 16);
  }
}

TEST(NaorPinkasTest, WalkThroughWithFixedNonces) {
  GroupParams params = TinyParams();
  BitString m0 = *BitString::FromHex("a5");
  BitString m1 = *BitString::FromHex("3c");
  auto res = SGenResWithNonces(m0, m1, params, {16}, {8}, {5}, {6});
  ASSERT_TRUE(res.ok());
  // e00 = g^5 = 9; the shared element beta0^5 = 2^20 = 6 = 9^4.
  EXPECT_EQ(res->e0.ephemeral.value, 9);
  EXPECT_EQ(Pow({16}, {5}, params).value, 6);
  EXPECT_EQ(Pow({9}, {4}, params).value, 6);
  EXPECT_EQ(res->e0.masked, RoHash(kOracleH, {6}, 8, params) ^ m0);
  EXPECT_EQ(RRetrieve(*res, {Scalar{4}, ChoiceBit{0}}, params), m0);
}

TEST(NaorPinkasTest, RoundTrip512) {
  Drbg rng(1, "np-512");
  auto params = SInit(512, rng);
  ASSERT_TRUE(params.ok());
  for (int i = 0; i < 1000; ++i) {
    ChoiceBit s{rng.Bit()};
    BitString m0 = BitString::Random(rng, 128);
    BitString m1 = BitString::Random(rng, 128);
    auto [query, secret] = RGenQuery(*params, s, rng);
    auto res = SGenRes(m0, m1, *params, query, rng);
    ASSERT_TRUE(res.ok());
    ASSERT_EQ(RRetrieve(*res, secret, *params), s.value ? m1 : m0);
  }
}

TEST(NaorPinkasTest, AllZeroMessages) {
  Drbg rng(2, "np-zero");
  GroupParams params = *SInit(64, rng);
  BitString zero = BitString::Zeros(128);
  for (uint8_t s : {0, 1}) {
    auto [query, secret] = RGenQuery(params, ChoiceBit{s}, rng);
    auto res = SGenRes(zero, zero, params, query, rng);
    ASSERT_TRUE(res.ok());
    EXPECT_EQ(RRetrieve(*res, secret, params), zero);
  }
}

TEST(NaorPinkasTest, WrongBranchStaysHidden) {
  Drbg rng(3, "np-wrong");
  GroupParams params = *SInit(64, rng);
  int leaks = 0;
  for (int i = 0; i < 10000; ++i) {
    ChoiceBit s{rng.Bit()};
    BitString m0 = BitString::Random(rng, 128);
    BitString m1 = BitString::Random(rng, 128);
    auto [query, secret] = RGenQuery(params, s, rng);
    OtResponse res = *SGenRes(m0, m1, params, query, rng);
    BitString other = UnmaskWithExponent(res.at(1 - s.value), secret.r, params);
    if (other == (s.value ? m0 : m1)) ++leaks;
  }
  EXPECT_EQ(leaks, 0);
}

TEST(NaorPinkasTest, DistinctSeedsGiveDistinctC) {
  std::set<std::string> cs;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    Drbg rng(seed, "np-init");
    cs.insert(SInit(64, rng)->c().value.get_str());
  }
  EXPECT_EQ(cs.size(), 100u);
}

TEST(NaorPinkasTest, QueryDistribution) {
  // r is nonzero, so beta0 never equals 1 when s = 0 and never equals C when
  // s = 1. On the remaining elements both distributions are uniform and
  // identical.
  GroupParams params = TinyParams();
  Drbg rng(4, "np-dist");
  std::map<long, uint64_t> h[2];
  for (uint8_t s : {0, 1}) {
    for (int i = 0; i < 20000; ++i) {
      h[s][RGenQuery(params, ChoiceBit{s}, rng).first.beta0.value.get_si()]++;
    }
  }
  EXPECT_EQ(h[0].size(), 10u);
  EXPECT_EQ(h[1].size(), 10u);
  EXPECT_EQ(h[0].count(1), 0u);
  EXPECT_EQ(h[1].count(13), 0u);
  for (uint8_t s : {0, 1}) {
    std::vector<uint64_t> counts;
    for (auto [v, c] : h[s]) counts.push_back(c);
    EXPECT_GT(UniformityPValue(counts), 0.001);
  }
  std::vector<uint64_t> a, b;
  for (auto [v, c] : h[0]) {
    if (v == 1 || v == 13) continue;
    a.push_back(c);
    b.push_back(h[1][v]);
  }
  EXPECT_GT(TwoSamplePValue(a, b), 0.001);
}

TEST(NaorPinkasTest, RejectsBadQueries) {
  GroupParams params = TinyParams();
  Drbg rng(5, "np-bad");
  BitString m = BitString::Zeros(8);
  EXPECT_TRUE(IsProtocolViolation(SGenRes(m, m, params, {{5}}, rng).status()));
  EXPECT_TRUE(IsProtocolViolation(
      SGenResForPair(m, m, params, {16}, {16}, rng).status()));
  EXPECT_TRUE(IsParameterError(
      SGenRes(m, BitString::Zeros(9), params, {{16}}, rng).status()));
  EXPECT_TRUE(IsParameterError(
      SGenRes(BitString(), BitString(), params, {{16}}, rng).status()));
}

TEST(NaorPinkasNTest, EveryIndexRetrieves) {
  Drbg rng(6, "np-n");
  GroupParams params = *SInit(64, rng);
  for (uint32_t n = 1; n <= 8; ++n) {
    std::vector<BitString> messages;
    for (uint32_t i = 0; i < n; ++i) {
      messages.push_back(BitString::Random(rng, 128));
    }
    for (uint32_t index = 0; index < n; ++index) {
      auto q = RGenQueryN(params, index, n, rng);
      ASSERT_TRUE(q.ok());
      auto res = SGenResN(messages, params, q->first, rng);
      ASSERT_TRUE(res.ok());
      ASSERT_EQ(res->size(), n);
      EXPECT_EQ(RRetrieveN((*res)[index], q->second, params), messages[index]);
      for (uint32_t j = 0; j < n; ++j) {
        if (j == index) continue;
        EXPECT_NE(RRetrieveN((*res)[j], q->second, params), messages[j]);
      }
    }
  }
  EXPECT_TRUE(IsParameterError(RGenQueryN(params, 3, 3, rng).status()));
  EXPECT_EQ(PublicElementN(1, params), params.c());
}

}  // namespace
}  // namespace dqot
