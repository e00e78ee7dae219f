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

#ifndef DQOT_HARNESS_TRANSPORT_H_
#define DQOT_HARNESS_TRANSPORT_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "dqot/harness/role.h"

namespace dqot {

struct Envelope {
  Role from = Role::kR;
  Role to = Role::kS;
  std::string phase;
  std::vector<uint8_t> bytes;
};

// Moves envelopes between parties. Delivery is globally first-in first-out,
// which implies per-edge ordering. Channels are treated as confidential and
// authenticated; nothing here encrypts.
class Transport {
 public:
  virtual ~Transport() = default;
  virtual absl::Status Send(const Envelope& envelope) = 0;
  // Next envelope in send order, or nullopt once drained.
  virtual absl::StatusOr<std::optional<Envelope>> Next() = 0;
};

enum class TransportKind { kInProcess, kSocket };

std::string_view TransportName(TransportKind kind);
absl::StatusOr<TransportKind> TransportFromName(std::string_view name);

std::unique_ptr<Transport> MakeInProcessTransport();
// One AF_UNIX stream socket pair per directed edge, carrying u32
// length-prefixed frames in plaintext.
absl::StatusOr<std::unique_ptr<Transport>> MakeSocketTransport();
absl::StatusOr<std::unique_ptr<Transport>> MakeTransport(TransportKind kind);

}  // namespace dqot

#endif  // DQOT_HARNESS_TRANSPORT_H_
