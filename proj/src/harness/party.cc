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

#include "dqot/harness/party.h"

#include <map>
#include <thread>

#include "dqot/harness/wire.h"
#include "dqot/util/errors.h"
#include "dqot/util/status_macros.h"

namespace dqot {
namespace {

absl::Status Annotate(const absl::Status& status, std::string_view where) {
  return absl::Status(status.code(), std::string(where).append(": ").append(
                                         std::string(status.message())));
}

}  // namespace

absl::StatusOr<Transcript> RunParties(const std::vector<Party*>& parties,
                                      Transport& transport,
                                      std::chrono::microseconds delay) {
  std::map<Role, Party*> by_role;
  for (Party* p : parties) {
    if (!by_role.emplace(p->role(), p).second) {
      return ParameterError(
          std::string("duplicate party ").append(RoleName(p->role())));
    }
  }
  Transcript transcript;
  auto flush = [&](Outbox& out) -> absl::Status {
    for (Envelope& e : out.Take()) {
      if (!by_role.contains(e.to)) {
        return ParameterError(
            std::string("no party plays ").append(RoleName(e.to)));
      }
      RETURN_IF_ERROR(transport.Send(e));
      transcript.Append(e.from, e.to, std::move(e.phase), std::move(e.bytes));
    }
    return absl::OkStatus();
  };

  for (Party* p : parties) {
    Outbox out(p->role());
    absl::Status s = p->Start(out);
    if (!s.ok()) {
      return Annotate(
          s, std::string("start (").append(RoleName(p->role())).append(")"));
    }
    RETURN_IF_ERROR(flush(out));
  }

  for (uint64_t seq = 0;; ++seq) {
    ASSIGN_OR_RETURN(std::optional<Envelope> next, transport.Next());
    if (!next.has_value()) break;
    if (delay.count() > 0) std::this_thread::sleep_for(delay);
    Party* target = by_role.at(next->to);
    Outbox out(target->role());
    absl::StatusOr<std::pair<Role, MessageType>> header =
        PeekHeader(next->bytes);
    if (header.ok() && header->first != next->from) {
      header = ProtocolViolationError("role byte disagrees with the channel");
    }
    absl::Status s =
        header.ok() ? target->Receive(*next, out) : header.status();
    if (!s.ok()) {
      return Annotate(s, "seq " + std::to_string(seq) + " (" +
                             std::string(RoleName(next->from)) + "->" +
                             std::string(RoleName(next->to)) + ")");
    }
    RETURN_IF_ERROR(flush(out));
  }
  return transcript;
}

}  // namespace dqot
