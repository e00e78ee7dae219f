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

#ifndef DQOT_HARNESS_TRANSCRIPT_H_
#define DQOT_HARNESS_TRANSCRIPT_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "dqot/harness/role.h"

namespace dqot {

struct TranscriptEntry {
  uint64_t seq = 0;
  Role from = Role::kR;
  Role to = Role::kS;
  std::string phase;
  std::vector<uint8_t> bytes;
  friend bool operator==(const TranscriptEntry&,
                         const TranscriptEntry&) = default;
};

// Every message of one run in send order. seq counts up from 0.
class Transcript {
 public:
  const TranscriptEntry& Append(Role from, Role to, std::string phase,
                                std::vector<uint8_t> bytes);

  const std::vector<TranscriptEntry>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // One JSON object per line: seq, from, to, phase, hex.
  std::string ToJsonLines() const;
  absl::Status WriteJsonLines(const std::string& path) const;

  friend bool operator==(const Transcript&, const Transcript&) = default;

 private:
  std::vector<TranscriptEntry> entries_;
};

// True iff no entry outside `excluded_phases` goes from R to S.
bool CheckSenderPush(const Transcript& t,
                     const std::set<std::string>& excluded_phases = {});

struct TrafficCount {
  size_t messages = 0;
  size_t bytes = 0;
  friend bool operator==(const TrafficCount&, const TrafficCount&) = default;
};

struct EfficiencyCounts {
  TrafficCount sent;
  TrafficCount received;
  std::map<std::string, TrafficCount> sent_by_phase;
  std::map<std::string, TrafficCount> received_by_phase;
};

EfficiencyCounts CheckEfficiency(const Transcript& t, Role role);

}  // namespace dqot

#endif  // DQOT_HARNESS_TRANSCRIPT_H_
