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

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "dqot/crypto/bigint.h"
#include "dqot/crypto/group.h"
#include "dqot/crypto/paillier.h"
#include "dqot/crypto/random.h"
#include "dqot/ot/delegated_query.h"
#include "dqot/ot/homomorphic_delegation.h"
#include "dqot/ot/naor_pinkas.h"
#include "dqot/util/errors.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace dqot {
namespace {

using ::dqot::testing::UniformityPValue;

class AheTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    Drbg rng(1, "ahe-keys");
    keys_ = new AheKeys(*AheKeyGen(512, rng));
  }
  static void TearDownTestSuite() { delete keys_; }
  static const PaillierPublicKey& pk() { return keys_->public_key; }
  static const PaillierPrivateKey& sk() { return keys_->private_key; }
  static AheKeys* keys_;
};
AheKeys* AheTest::keys_ = nullptr;

TEST_F(AheTest, KeySizeAndRoundTrip) {
  EXPECT_EQ(BitLength(pk().n()), 512u);
  EXPECT_GT(pk().n(), mpz_class(1) << 256);
  Drbg rng(2, "ahe-rt");
  for (int i = 0; i < 100; ++i) {
    mpz_class x = RandomBelow(rng, pk().n());
    EXPECT_EQ(sk().Decrypt(*pk().Encrypt(x, rng)), x);
  }
  AheCiphertext a = *pk().Encrypt(5, rng);
  AheCiphertext b = *pk().Encrypt(5, rng);
  EXPECT_NE(a, b);
  EXPECT_TRUE(IsParameterError(pk().Encrypt(pk().n(), rng).status()));
  EXPECT_TRUE(IsParameterError(pk().Encrypt(-1, rng).status()));
}

TEST_F(AheTest, AdditionExamples) {
  Drbg rng(3, "ahe-add");
  EXPECT_EQ(
      sk().Decrypt(pk().Add(*pk().Encrypt(3, rng), *pk().Encrypt(4, rng))), 7);
  AheCiphertext x = *pk().Encrypt(1234, rng);
  EXPECT_EQ(sk().Decrypt(pk().Add(x, *pk().Encrypt(0, rng))), 1234);
  AheCiphertext acc = *pk().Encrypt(1, rng);
  for (int i = 1; i < 20; ++i) acc = pk().Add(acc, *pk().Encrypt(1, rng));
  EXPECT_EQ(sk().Decrypt(acc), 20);
}

TEST_F(AheTest, ScalarExamples) {
  Drbg rng(4, "ahe-mul");
  EXPECT_EQ(sk().Decrypt(pk().ScalarMul(*pk().Encrypt(1, rng), 42)), 42);
  EXPECT_EQ(sk().Decrypt(pk().ScalarMul(*pk().Encrypt(0, rng), 42)), 0);
  EXPECT_EQ(sk().Decrypt(pk().ScalarMul(*pk().Encrypt(5, rng), 6)), 30);
}

TEST_F(AheTest, HomomorphismLaws) {
  Drbg rng(5, "ahe-laws");
  const mpz_class& n = pk().n();
  for (int i = 0; i < 200; ++i) {
    mpz_class a = RandomBelow(rng, n);
    mpz_class b = RandomBelow(rng, n);
    mpz_class k = RandomBelow(rng, n);
    AheCiphertext ca = *pk().Encrypt(a, rng);
    AheCiphertext cb = *pk().Encrypt(b, rng);
    mpz_class sum = (a + b) % n;
    mpz_class prod = (a * k) % n;
    ASSERT_EQ(sk().Decrypt(pk().Add(ca, cb)), sum);
    ASSERT_EQ(sk().Decrypt(pk().ScalarMul(ca, k)), prod);
  }
}

TEST_F(AheTest, SerializationIsFixedWidth) {
  Drbg rng(6, "ahe-ser");
  AheCiphertext c = *pk().Encrypt(9, rng);
  std::vector<uint8_t> bytes = pk().Serialize(c);
  EXPECT_EQ(bytes.size(), pk().ciphertext_bytes());
  EXPECT_EQ(bytes.size(), 128u);
  EXPECT_EQ(*pk().Deserialize(bytes), c);
  bytes.push_back(0);
  EXPECT_TRUE(IsProtocolViolation(pk().Deserialize(bytes).status()));
  std::vector<uint8_t> zero(pk().ciphertext_bytes(), 0);
  EXPECT_TRUE(IsProtocolViolation(pk().Deserialize(zero).status()));
}

TEST_F(AheTest, SelectionVector) {
  Drbg rng(7, "ahe-sel");
  auto w = EncryptSelectionVector(2, 4, pk(), rng);
  ASSERT_TRUE(w.ok());
  ASSERT_EQ(w->size(), 4u);
  std::vector<long> plain;
  std::set<std::string> distinct;
  mpz_class total = 0;
  for (const AheCiphertext& c : *w) {
    plain.push_back(sk().Decrypt(c).get_si());
    total += sk().Decrypt(c);
    distinct.insert(c.value.get_str(16));
  }
  EXPECT_EQ(plain, (std::vector<long>{0, 0, 1, 0}));
  EXPECT_EQ(total, 1);
  EXPECT_EQ(distinct.size(), 4u);
  EXPECT_TRUE(
      IsParameterError(EncryptSelectionVector(4, 4, pk(), rng).status()));
}

TEST_F(AheTest, FilterExample) {
  Drbg rng(8, "ahe-filter");
  std::vector<mpz_class> res = {10, 20, 30, 40};
  for (uint32_t v = 0; v < 4; ++v) {
    auto w = *EncryptSelectionVector(v, 4, pk(), rng);
    auto out = ObliviousFilter(w, res, pk());
    ASSERT_TRUE(out.ok());
    EXPECT_EQ(sk().Decrypt(*out), res[v]);
  }
  auto w1 = *EncryptSelectionVector(0, 1, pk(), rng);
  EXPECT_EQ(sk().Decrypt(*ObliviousFilter(w1, {mpz_class(77)}, pk())), 77);
  EXPECT_TRUE(IsParameterError(ObliviousFilter(w1, res, pk()).status()));
  EXPECT_TRUE(IsParameterError(ObliviousFilter(w1, {pk().n()}, pk()).status()));
}

TEST_F(AheTest, FilterMatchesPlainIndexing) {
  Drbg rng(9, "ahe-oracle");
  for (uint32_t n = 1; n <= 16; ++n) {
    std::vector<mpz_class> res;
    for (uint32_t j = 0; j < n; ++j) res.push_back(RandomBelow(rng, pk().n()));
    for (uint32_t v = 0; v < n; ++v) {
      auto w = *EncryptSelectionVector(v, n, pk(), rng);
      ASSERT_EQ(sk().Decrypt(*ObliviousFilter(w, res, pk())), res[v])
          << "n=" << n << " v=" << v;
    }
  }
}

TEST_F(AheTest, FilterOutputSizeIndependentOfN) {
  Drbg rng(10, "ahe-size");
  std::set<size_t> sizes;
  for (uint32_t n : {2u, 8u, 64u}) {
    std::vector<mpz_class> res(n, mpz_class(3));
    auto w = *EncryptSelectionVector(n - 1, n, pk(), rng);
    sizes.insert(pk().Serialize(*ObliviousFilter(w, res, pk())).size());
  }
  EXPECT_EQ(sizes.size(), 1u);
}

// Group and key sizes for the multi-receiver pipelines.
struct MrSetup {
  GroupParams params;
  AheKeys keys;
};

MrSetup MakeMrSetup(uint64_t seed) {
  Drbg rng(seed, "mr-setup");
  GroupParams params = *GenParams(64, rng);
  AheKeys keys = *AheKeyGen(256, rng);
  return {std::move(params), std::move(keys)};
}

TEST(MrTest, RespondAndSelect) {
  MrSetup setup = MakeMrSetup(11);
  const GroupParams& params = setup.params;
  Drbg rng(12, "mr");
  for (uint8_t s : {0, 1}) {
    MessageTable table = MessageTable::Random(rng, 3, 128);
    DqRequest req = RRequest(params, ChoiceBit{s}, rng);
    DeltaPair d = P2Transform(params, req.to_p2.s, req.to_p2.r);
    BetaPair b = *P1Transform(params, req.to_p1.s, req.to_p1.r, d);
    auto responses = MrRespond(table, params, b, rng);
    ASSERT_TRUE(responses.ok());
    ASSERT_EQ(responses->size(), 3u);
    Scalar x = RetrievalExponent(req.to_p2.s, req.to_p1.r, req.to_p2.r, params);
    for (uint32_t v = 0; v < 3; ++v) {
      EXPECT_EQ(DqRetrieve((*responses)[v], ChoiceBit{s}, x, params),
                s ? table.pair(v).second : table.pair(v).first);
      EXPECT_EQ(*MrSelect(*responses, v), (*responses)[v]);
    }
    EXPECT_TRUE(IsParameterError(MrSelect(*responses, 3).status()));
  }
}

TEST(MrTest, TableValidation) {
  EXPECT_TRUE(IsParameterError(MessageTable::Create({}).status()));
  EXPECT_TRUE(IsParameterError(
      MessageTable::Create({{BitString::Zeros(8), BitString::Zeros(9)}})
          .status()));
  EXPECT_TRUE(
      MessageTable::Create({{BitString::Zeros(8), BitString::Zeros(8)}}).ok());
}

TEST(MrTest, ResponseMasksLookUniform) {
  // With fixed all-zero messages, the masked halves are raw oracle output.
  MrSetup setup = MakeMrSetup(13);
  Drbg rng(14, "mr-masks");
  MessageTable table = *MessageTable::Create(std::vector(
      200, std::make_pair(BitString::Zeros(128), BitString::Zeros(128))));
  std::vector<uint64_t> bins(256);
  for (int round = 0; round < 10; ++round) {
    DqRequest req = RRequest(setup.params, ChoiceBit{0}, rng);
    DeltaPair d = P2Transform(setup.params, req.to_p2.s, req.to_p2.r);
    BetaPair b = *P1Transform(setup.params, req.to_p1.s, req.to_p1.r, d);
    std::vector<OtResponse> responses = *MrRespond(table, setup.params, b, rng);
    for (const OtResponse& r : responses) {
      for (uint8_t byte : r.e0.masked.bytes()) ++bins[byte];
      for (uint8_t byte : r.e1.masked.bytes()) ++bins[byte];
      EXPECT_TRUE(setup.params.Contains(r.e0.ephemeral));
    }
  }
  EXPECT_GT(UniformityPValue(bins), 0.001);
}

struct DuqMrOutcome {
  absl::StatusOr<BitString> out;
  BitString expected;
};

DuqMrOutcome RunDuqMr(const MrSetup& setup, const MessageTable& table,
                      ChoiceBit s, uint32_t v, size_t lambda,
                      RandomSource& rng) {
  const GroupParams& params = setup.params;
  const PaillierPublicKey& pk = setup.keys.public_key;
  auto [s1, s2] = DuqDelegate(s, rng);
  std::vector<AheCiphertext> w = *EncryptSelectionVector(v, table.z(), pk, rng);
  Scalar r1 = RandomNonzeroScalar(rng, params);
  Scalar r2 = RandomNonzeroScalar(rng, params);
  DeltaPair d = P2Transform(params, s2, r2);
  BetaPair b = *P1Transform(params, s1, r1, d);
  BitString r3 = BitString::Random(rng, lambda);
  std::vector<OtResponse> tagged = *DuqMrRespond(table, params, b, r3, rng);
  EncryptedPair pair = *DuqMrFilter(tagged, w, pk);
  return {DuqMrRetrieve(pair, setup.keys.private_key, r1, r2, s2, r3,
                        table.sigma(), params),
          s.value ? table.pair(v).second : table.pair(v).first};
}

TEST(DuqMrTest, EndToEndAllRows) {
  MrSetup setup = MakeMrSetup(15);
  Drbg rng(16, "duq-mr");
  MessageTable table = MessageTable::Random(rng, 4, 128);
  for (uint8_t s : {0, 1}) {
    for (uint32_t v = 0; v < 4; ++v) {
      DuqMrOutcome o = RunDuqMr(setup, table, ChoiceBit{s}, v, 64, rng);
      ASSERT_TRUE(o.out.ok()) << o.out.status();
      EXPECT_EQ(*o.out, o.expected);
    }
  }
}

TEST(DuqMrTest, WrongTagNeverSelected) {
  MrSetup setup = MakeMrSetup(17);
  Drbg rng(18, "duq-mr-tags");
  MessageTable table = MessageTable::Random(rng, 2, 128);
  int wrong = 0;
  for (int i = 0; i < 1000; ++i) {
    DuqMrOutcome o =
        RunDuqMr(setup, table, ChoiceBit{rng.Bit()}, rng.Bit(), 64, rng);
    if (!o.out.ok() || *o.out != o.expected) ++wrong;
  }
  EXPECT_EQ(wrong, 0);
}

TEST(DuqMrTest, FilteredPairSizeIndependentOfZ) {
  MrSetup setup = MakeMrSetup(19);
  const PaillierPublicKey& pk = setup.keys.public_key;
  Drbg rng(20, "duq-mr-size");
  std::set<size_t> sizes;
  for (size_t z : {1u, 8u, 32u}) {
    MessageTable table = MessageTable::Random(rng, z, 128);
    BetaPair b =
        *P1Transform(setup.params, BitShare{0}, Scalar{1},
                     P2Transform(setup.params, BitShare{0}, Scalar{1}));
    auto tagged =
        *DuqMrRespond(table, setup.params, b, BitString::Random(rng, 64), rng);
    auto w = *EncryptSelectionVector(0, z, pk, rng);
    EncryptedPair pair = *DuqMrFilter(tagged, w, pk);
    sizes.insert(pk.Serialize(pair.o0.ephemeral).size() +
                 pk.Serialize(pair.o0.masked).size() +
                 pk.Serialize(pair.o1.ephemeral).size() +
                 pk.Serialize(pair.o1.masked).size());
  }
  EXPECT_EQ(sizes.size(), 1u);
}

TEST(ThinTest, EveryIndexRetrieves) {
  MrSetup setup = MakeMrSetup(21);
  const PaillierPublicKey& pk = setup.keys.public_key;
  Drbg rng(22, "thin");
  for (uint32_t n = 1; n <= 8; ++n) {
    std::vector<BitString> messages;
    for (uint32_t j = 0; j < n; ++j) {
      messages.push_back(BitString::Random(rng, 128));
    }
    for (uint32_t index = 0; index < n; ++index) {
      auto req = ThinRequest(setup.params, pk, index, n, rng);
      ASSERT_TRUE(req.ok());
      auto res = ThinRespond(messages, setup.params, pk, req->first, rng);
      ASSERT_TRUE(res.ok());
      auto out = ThinRetrieve(*res, setup.keys.private_key, req->second, 128,
                              setup.params);
      ASSERT_TRUE(out.ok());
      EXPECT_EQ(*out, messages[index]);
    }
  }
}

TEST(ThinTest, ResponseSizeIndependentOfN) {
  MrSetup setup = MakeMrSetup(23);
  const PaillierPublicKey& pk = setup.keys.public_key;
  Drbg rng(24, "thin-size");
  std::set<size_t> sizes;
  for (uint32_t n : {2u, 8u, 64u}) {
    std::vector<BitString> messages(n, BitString::Zeros(128));
    auto req = *ThinRequest(setup.params, pk, n / 2, n, rng);
    auto res = *ThinRespond(messages, setup.params, pk, req.first, rng);
    sizes.insert(pk.Serialize(res.ephemeral).size() +
                 pk.Serialize(res.masked).size());
  }
  EXPECT_EQ(sizes.size(), 1u);
}

TEST(PlaintextTest, BitsRoundTripAndRejectsOverflow) {
  BitString b = *BitString::FromHex("abc");
  EXPECT_EQ(*PlaintextBits(BitsPlaintext(b), 12), b);
  EXPECT_TRUE(
      IsProtocolViolation(PlaintextBits(mpz_class(1) << 20, 12).status()));
  // 0xab1 has a bit inside the last byte but past bit 12.
  EXPECT_TRUE(IsProtocolViolation(PlaintextBits(0xab1, 12).status()));
}

}  // namespace
}  // namespace dqot
