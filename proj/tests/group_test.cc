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

#include <gmpxx.h>

#include <cstdint>
#include <set>
#include <string>

#include "dqot/crypto/bigint.h"
#include "dqot/crypto/random.h"
#include "dqot/util/errors.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace dqot {
namespace {

using ::dqot::testing::TinyParams;

// Independent primality oracle: textbook Miller-Rabin with random bases.
bool MillerRabin(const mpz_class& n, int rounds, RandomSource& rng) {
  if (n < 4) return n == 2 || n == 3;
  if (n % 2 == 0) return false;
  mpz_class d = n - 1;
  int r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  for (int i = 0; i < rounds; ++i) {
    mpz_class a = RandomBelow(rng, n - 3) + 2;
    mpz_class x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int j = 1; j < r; ++j) {
      x = (x * x) % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

mpz_class ModPow(const mpz_class& b, const mpz_class& e, const mpz_class& m) {
  mpz_class out;
  mpz_powm(out.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return out;
}

TEST(GenParamsTest, FiveBitsGivesP23) {
  Drbg rng(1, "gen");
  auto params = GenParams(5, rng);
  ASSERT_TRUE(params.ok()) << params.status();
  EXPECT_EQ(params->p(), 23);
  EXPECT_EQ(params->q(), 11);
  EXPECT_EQ(params->g().value, 2);
  EXPECT_EQ(ModPow(2, 11, 23), 1);
  EXPECT_EQ(ModPow(params->c().value, 11, 23), 1);
  EXPECT_NE(params->c().value, 1);
}

TEST(GenParamsTest, InvariantsAcrossSizes) {
  for (size_t bits : {5u, 8u, 12u, 20u, 64u, 128u}) {
    for (uint64_t seed = 0; seed < 5; ++seed) {
      Drbg rng(seed, "gen-sizes");
      auto params = GenParams(bits, rng);
      ASSERT_TRUE(params.ok()) << bits;
      EXPECT_EQ(params->bits(), bits);
      EXPECT_EQ(params->p(), 2 * params->q() + 1);
      EXPECT_EQ(ModPow(params->g().value, params->q(), params->p()), 1);
      EXPECT_NE(params->g().value, 1);
      EXPECT_EQ(ModPow(params->c().value, params->q(), params->p()), 1);
    }
  }
}

TEST(GenParamsTest, Primes512PassMillerRabin) {
  Drbg oracle_rng(77, "miller-rabin");
  for (uint64_t seed = 0; seed < 100; ++seed) {
    Drbg rng(seed, "gen-512");
    auto params = GenParams(512, rng);
    ASSERT_TRUE(params.ok());
    EXPECT_EQ(params->bits(), 512u);
    EXPECT_TRUE(MillerRabin(params->p(), 64, oracle_rng)) << seed;
    EXPECT_TRUE(MillerRabin(params->q(), 64, oracle_rng)) << seed;
  }
}

TEST(GenParamsTest, RejectsTooFewBits) {
  Drbg rng(1, "gen");
  EXPECT_TRUE(IsParameterError(GenParams(4, rng).status()));
}

TEST(GroupParamsTest, CreateValidates) {
  EXPECT_TRUE(GroupParams::Create(23, 2, 13).ok());
  EXPECT_FALSE(GroupParams::Create(21, 2, 13).ok());  // not prime
  EXPECT_FALSE(GroupParams::Create(29, 4, 16).ok());  // not safe
  EXPECT_FALSE(GroupParams::Create(23, 5, 13).ok());  // 5 is a non-residue
  EXPECT_FALSE(GroupParams::Create(23, 1, 13).ok());
  EXPECT_FALSE(GroupParams::Create(23, 2, 5).ok());
}

TEST(GroupOpsTest, Examples) {
  GroupParams params = TinyParams();
  EXPECT_EQ(Pow({2}, {3}, params).value, 8);
  EXPECT_EQ(Pow({2}, {10}, params).value, 12);
  EXPECT_EQ(PowG({0}, params).value, 1);
  EXPECT_EQ(Div({13}, {16}, params).value, 8);
  EXPECT_EQ(Div({13}, {13}, params).value, 1);
  EXPECT_EQ(Div(params.c(), {1}, params), params.c());
  EXPECT_EQ(PowG({7}, params), params.c());
}

TEST(GroupOpsTest, ClosureExhaustive) {
  GroupParams params = TinyParams();
  std::set<long> subgroup;
  for (long v = 1; v < 23; ++v) {
    if (params.Contains(mpz_class(v))) subgroup.insert(v);
  }
  EXPECT_EQ(subgroup.size(), 11u);
  for (long a : subgroup) {
    for (long b : subgroup) {
      EXPECT_TRUE(params.Contains(Div({a}, {b}, params)));
      EXPECT_TRUE(params.Contains(Mul({a}, {b}, params)));
    }
    for (long e = 0; e < 11; ++e) {
      EXPECT_TRUE(params.Contains(Pow({a}, {e}, params)));
    }
  }
  EXPECT_FALSE(params.Contains(mpz_class(0)));
  EXPECT_FALSE(params.Contains(mpz_class(23)));
  EXPECT_FALSE(params.Contains(mpz_class(5)));
}

TEST(GroupOpsTest, ExponentLaws) {
  Drbg rng(2, "laws");
  GroupParams params = *GenParams(256, rng);
  for (int i = 0; i < 1000; ++i) {
    Scalar x = RandomScalar(rng, params);
    Scalar y = RandomScalar(rng, params);
    EXPECT_EQ(Pow(PowG(x, params), y, params),
              PowG(ScalarMul(x, y, params), params));
    EXPECT_EQ(
        Div(PowG(ScalarAdd(x, y, params), params), PowG(y, params), params),
        PowG(x, params));
    EXPECT_EQ(ScalarSub(ScalarAdd(x, y, params), y, params), x);
    EXPECT_EQ(ScalarAdd(x, ScalarNeg(x, params), params), Scalar{0});
  }
}

TEST(EncodingTest, FixedWidthRoundTrip) {
  Drbg rng(3, "enc");
  GroupParams params = *GenParams(64, rng);
  EXPECT_EQ(params.element_bytes(), 8u);
  GroupElement e = PowG(RandomScalar(rng, params), params);
  auto bytes = EncodeElement(e, params);
  EXPECT_EQ(bytes.size(), 8u);
  EXPECT_EQ(*DecodeElement(bytes, params), e);
  bytes.pop_back();
  EXPECT_TRUE(IsProtocolViolation(DecodeElement(bytes, params).status()));

  GroupParams tiny = TinyParams();
  std::vector<uint8_t> non_member = {5};
  EXPECT_TRUE(IsProtocolViolation(DecodeElement(non_member, tiny).status()));
}

TEST(RoHashTest, DeterministicLengthAndLabelSeparated) {
  Drbg rng(4, "ro");
  GroupParams params = *GenParams(128, rng);
  GroupElement x = PowG(RandomScalar(rng, params), params);
  EXPECT_EQ(RoHash(kOracleH, x, 128, params), RoHash(kOracleH, x, 128, params));
  EXPECT_EQ(RoHash(kOracleH, x, 192, params).size(), 192u);
  EXPECT_EQ(RoHash(kOracleG, x, 13, params).size(), 13u);
  // Prefix property of counter mode.
  EXPECT_EQ(RoHash(kOracleH, x, 300, params).Slice(0, 128),
            RoHash(kOracleH, x, 128, params));
  for (int i = 0; i < 1000; ++i) {
    GroupElement y = PowG(RandomScalar(rng, params), params);
    ASSERT_NE(RoHash(kOracleH, y, 128, params),
              RoHash(kOracleG, y, 128, params));
  }
}

TEST(DeriveIndexedElementTest, MembersAndDistinct) {
  Drbg rng(5, "derive");
  GroupParams params = *GenParams(64, rng);
  std::set<std::string> seen;
  for (uint32_t i = 0; i < 64; ++i) {
    GroupElement e = DeriveIndexedElement("np-n", i, params);
    EXPECT_TRUE(params.Contains(e));
    EXPECT_NE(e.value, 1);
    seen.insert(e.value.get_str());
  }
  EXPECT_EQ(seen.size(), 64u);
}

}  // namespace
}  // namespace dqot
