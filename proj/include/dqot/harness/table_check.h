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

#ifndef DQOT_HARNESS_TABLE_CHECK_H_
#define DQOT_HARNESS_TABLE_CHECK_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "dqot/crypto/group.h"

namespace dqot {

// One (s1, s2) cell of the delta/beta table: the exponents of g expected in
// delta_0, delta_1, beta_0, beta_1, checked by brute-force discrete log.
struct TableCellCheck {
  uint8_t s1 = 0;
  uint8_t s2 = 0;
  std::string expected;  // e.g. "d0=r2 d1=a-r2 b0=r2+r1 b1=a-r2-r1"
  uint64_t combinations = 0;
  uint64_t mismatches = 0;
  bool pass() const { return combinations > 0 && mismatches == 0; }
};

// Runs the P2 and P1 transforms for every r1, r2 in [r_begin, r_end) and all
// four share cells. Needs a subgroup small enough to enumerate (q < 2^20).
absl::StatusOr<std::vector<TableCellCheck>> CheckDeltaBetaTable(
    const GroupParams& params, uint64_t r_begin, uint64_t r_end);

// Brute-force discrete log table for an enumerable subgroup.
class DiscreteLogTable {
 public:
  static absl::StatusOr<DiscreteLogTable> Create(const GroupParams& params);
  // Returns q (an impossible log) for non-members.
  uint64_t Log(const GroupElement& e) const;

 private:
  explicit DiscreteLogTable(std::vector<uint32_t> logs, uint64_t q)
      : logs_(std::move(logs)), q_(q) {}
  std::vector<uint32_t> logs_;  // indexed by element value
  uint64_t q_;
};

}  // namespace dqot

#endif  // DQOT_HARNESS_TABLE_CHECK_H_
