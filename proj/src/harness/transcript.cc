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

#include "dqot/harness/transcript.h"

#include <fstream>

#include "absl/strings/escaping.h"
#include "dqot/util/errors.h"
#include "json.hpp"

namespace dqot {

const TranscriptEntry& Transcript::Append(Role from, Role to, std::string phase,
                                          std::vector<uint8_t> bytes) {
  entries_.push_back(TranscriptEntry{entries_.size(), from, to,
                                     std::move(phase), std::move(bytes)});
  return entries_.back();
}

std::string Transcript::ToJsonLines() const {
  std::string out;
  for (const TranscriptEntry& e : entries_) {
    nlohmann::ordered_json line;
    line["seq"] = e.seq;
    line["from"] = std::string(RoleName(e.from));
    line["to"] = std::string(RoleName(e.to));
    line["phase"] = e.phase;
    line["hex"] = absl::BytesToHexString(absl::string_view(
        reinterpret_cast<const char*>(e.bytes.data()), e.bytes.size()));
    out += line.dump();
    out += '\n';
  }
  return out;
}

absl::Status Transcript::WriteJsonLines(const std::string& path) const {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) return ParameterError("cannot open " + path);
  file << ToJsonLines();
  if (!file) return ParameterError("write failed for " + path);
  return absl::OkStatus();
}

bool CheckSenderPush(const Transcript& t,
                     const std::set<std::string>& excluded_phases) {
  for (const TranscriptEntry& e : t.entries()) {
    if (e.from == Role::kR && e.to == Role::kS &&
        !excluded_phases.contains(e.phase)) {
      return false;
    }
  }
  return true;
}

EfficiencyCounts CheckEfficiency(const Transcript& t, Role role) {
  EfficiencyCounts counts;
  auto add = [](TrafficCount& c, const TranscriptEntry& e) {
    ++c.messages;
    c.bytes += e.bytes.size();
  };
  for (const TranscriptEntry& e : t.entries()) {
    if (e.from == role) {
      add(counts.sent, e);
      add(counts.sent_by_phase[e.phase], e);
    }
    if (e.to == role) {
      add(counts.received, e);
      add(counts.received_by_phase[e.phase], e);
    }
  }
  return counts;
}

}  // namespace dqot
