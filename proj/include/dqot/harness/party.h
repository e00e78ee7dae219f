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

#ifndef DQOT_HARNESS_PARTY_H_
#define DQOT_HARNESS_PARTY_H_

#include <chrono>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "dqot/harness/role.h"
#include "dqot/harness/transcript.h"
#include "dqot/harness/transport.h"

namespace dqot {

// Collects the messages a party emits during one step. The phase label is
// attached here, at send time.
class Outbox {
 public:
  explicit Outbox(Role from) : from_(from) {}

  void Send(Role to, std::string phase, std::vector<uint8_t> bytes) {
    queued_.push_back(Envelope{from_, to, std::move(phase), std::move(bytes)});
  }
  std::vector<Envelope> Take() { return std::move(queued_); }

 private:
  Role from_;
  std::vector<Envelope> queued_;
};

// A protocol participant as a message-driven state machine.
class Party {
 public:
  virtual ~Party() = default;
  virtual Role role() const = 0;
  virtual absl::Status Start(Outbox& out) {
    (void)out;
    return absl::OkStatus();
  }
  virtual absl::Status Receive(const Envelope& in, Outbox& out) = 0;
};

// Single-threaded deterministic scheduler: starts parties in the given order,
// then delivers messages in global send order until the transport drains.
// A failure while handling message seq N is reported as
// "seq N (X->Y): <cause>" with the original status code.
absl::StatusOr<Transcript> RunParties(
    const std::vector<Party*>& parties, Transport& transport,
    std::chrono::microseconds delay = std::chrono::microseconds(0));

}  // namespace dqot

#endif  // DQOT_HARNESS_PARTY_H_
