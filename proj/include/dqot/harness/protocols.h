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

#ifndef DQOT_HARNESS_PROTOCOLS_H_
#define DQOT_HARNESS_PROTOCOLS_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "dqot/crypto/bit_string.h"
#include "dqot/crypto/group.h"
#include "dqot/crypto/paillier.h"
#include "dqot/crypto/random.h"
#include "dqot/crypto/secret_sharing.h"
#include "dqot/harness/transcript.h"
#include "dqot/harness/transport.h"

namespace dqot {

enum class Protocol {
  kNaorPinkas,
  kDq,
  kDuq,
  kSupersonic,
  kDqMr,
  kDuqMr,
  kThin,
};

inline constexpr Protocol kAllProtocols[] = {
    Protocol::kNaorPinkas, Protocol::kDq,   Protocol::kDuq,
    Protocol::kSupersonic, Protocol::kDqMr, Protocol::kDuqMr,
    Protocol::kThin};

// np, dq, duq, supersonic, dq-mr, duq-mr, thin.
std::string_view ProtocolName(Protocol protocol);
// Also accepts the long forms np-ot, dq-ot and duq-ot.
absl::StatusOr<Protocol> ProtocolFromName(std::string_view name);

// Phase labels attached to messages at send time.
inline constexpr std::string_view kPhaseSetup = "setup";
inline constexpr std::string_view kPhaseRequest = "request";
inline constexpr std::string_view kPhaseTransform = "transform";
inline constexpr std::string_view kPhaseResponse = "response";
inline constexpr std::string_view kPhaseFilter = "filter";

inline constexpr size_t kDefaultRunSecurityBits = 512;

struct RunConfig {
  Protocol protocol = Protocol::kDq;
  size_t security_bits = kDefaultRunSecurityBits;
  size_t sigma = 128;
  size_t lambda = 128;
  size_t z = 1;  // rows, multi-receiver variants
  size_t n = 2;  // choices, thin client
  uint64_t seed = 1;
  TransportKind transport = TransportKind::kInProcess;
  std::chrono::microseconds delay{0};
  // Pre-generated public parameters and receiver key pair. When absent they
  // are derived from the seed.
  std::optional<GroupParams> params;
  std::optional<AheKeys> ahe_keys;
};

// `table` holds one pair for the 1-out-of-2 protocols and z pairs for the
// multi-receiver ones; `messages` holds the n choices of the thin client.
// `v` is the row (multi-receiver) or the choice (thin client).
struct RunInputs {
  ChoiceBit s;
  uint32_t v = 0;
  std::vector<std::pair<BitString, BitString>> table;
  std::vector<BitString> messages;
};

struct RunResult {
  BitString output;
  Transcript transcript;
};

absl::StatusOr<GroupParams> RunParams(const RunConfig& config);
// Paillier modulus large enough for one group element or one tagged string
// per plaintext.
size_t AheModulusBits(const RunConfig& config, const GroupParams& params);
absl::StatusOr<AheKeys> RunAheKeys(const RunConfig& config,
                                   const GroupParams& params);

// Uniform inputs shaped for the configured protocol.
RunInputs RandomInputs(const RunConfig& config, RandomSource& rng);
// What R must output for these inputs.
absl::StatusOr<BitString> ExpectedOutput(const RunConfig& config,
                                         const RunInputs& inputs);

// Executes one protocol run with every party, deterministic in
// (config, inputs, seed).
absl::StatusOr<RunResult> Run(const RunConfig& config, const RunInputs& inputs);

// Delegated-query run: R to P1 and P2, P2 to P1, P1 to S, S to R.
absl::StatusOr<RunResult> DqRun(const GroupParams& params, ChoiceBit s,
                                const BitString& m0, const BitString& m1,
                                uint64_t seed);

}  // namespace dqot

#endif  // DQOT_HARNESS_PROTOCOLS_H_
