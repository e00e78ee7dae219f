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

#include "dqot/harness/table_check.h"

#include "dqot/crypto/secret_sharing.h"
#include "dqot/ot/delegated_query.h"
#include "dqot/util/errors.h"
#include "dqot/util/status_macros.h"

namespace dqot {
namespace {

constexpr uint64_t kMaxEnumerableQ = uint64_t{1} << 20;

struct Exponents {
  int64_t d0, d1, b0, b1;
};

// The printed cell expressions, as functions of a = log C.
Exponents Expected(uint8_t s1, uint8_t s2, int64_t a, int64_t r1, int64_t r2) {
  Exponents e{};
  e.d0 = s2 == 0 ? r2 : a - r2;
  e.d1 = s2 == 0 ? a - r2 : r2;
  if (s1 == 0 && s2 == 0) {
    e.b0 = r2 + r1;
    e.b1 = a - r2 - r1;
  } else if (s1 == 0 && s2 == 1) {
    e.b0 = a - r2 + r1;
    e.b1 = r2 - r1;
  } else if (s1 == 1 && s2 == 0) {
    e.b0 = a - r2 - r1;
    e.b1 = r2 + r1;
  } else {
    e.b0 = r2 - r1;
    e.b1 = a - r2 + r1;
  }
  return e;
}

const char* ExpectedText(uint8_t s1, uint8_t s2) {
  static const char* kText[2][2] = {{"d0=r2 d1=a-r2 b0=r2+r1 b1=a-r2-r1",
                                     "d0=a-r2 d1=r2 b0=a-r2+r1 b1=r2-r1"},
                                    {"d0=r2 d1=a-r2 b0=a-r2-r1 b1=r2+r1",
                                     "d0=a-r2 d1=r2 b0=r2-r1 b1=a-r2+r1"}};
  return kText[s1][s2];
}

uint64_t Mod(int64_t v, uint64_t q) {
  int64_t m = v % static_cast<int64_t>(q);
  return static_cast<uint64_t>(m < 0 ? m + static_cast<int64_t>(q) : m);
}

}  // namespace

absl::StatusOr<DiscreteLogTable> DiscreteLogTable::Create(
    const GroupParams& params) {
  if (params.q() >= kMaxEnumerableQ) {
    return ParameterError("subgroup too large to enumerate");
  }
  uint64_t p = params.p().get_ui();
  uint64_t q = params.q().get_ui();
  uint64_t g = params.g().value.get_ui();
  std::vector<uint32_t> logs(p, static_cast<uint32_t>(q));
  uint64_t acc = 1;
  for (uint64_t k = 0; k < q; ++k) {
    logs[acc] = static_cast<uint32_t>(k);
    acc = acc * g % p;
  }
  return DiscreteLogTable(std::move(logs), q);
}

uint64_t DiscreteLogTable::Log(const GroupElement& e) const {
  if (e.value < 0 || e.value >= static_cast<unsigned long>(logs_.size())) {
    return q_;
  }
  return logs_[e.value.get_ui()];
}

absl::StatusOr<std::vector<TableCellCheck>> CheckDeltaBetaTable(
    const GroupParams& params, uint64_t r_begin, uint64_t r_end) {
  ASSIGN_OR_RETURN(DiscreteLogTable dl, DiscreteLogTable::Create(params));
  uint64_t q = params.q().get_ui();
  int64_t a = static_cast<int64_t>(dl.Log(params.c()));
  std::vector<TableCellCheck> cells;
  for (uint8_t s1 = 0; s1 < 2; ++s1) {
    for (uint8_t s2 = 0; s2 < 2; ++s2) {
      TableCellCheck cell;
      cell.s1 = s1;
      cell.s2 = s2;
      cell.expected = ExpectedText(s1, s2);
      for (uint64_t r1 = r_begin; r1 < r_end; ++r1) {
        for (uint64_t r2 = r_begin; r2 < r_end; ++r2) {
          Scalar sr1 = ScalarFromInteger(mpz_class(r1), params);
          Scalar sr2 = ScalarFromInteger(mpz_class(r2), params);
          DeltaPair delta = P2Transform(params, BitShare{s2}, sr2);
          ASSIGN_OR_RETURN(BetaPair beta,
                           P1Transform(params, BitShare{s1}, sr1, delta));
          Exponents want = Expected(s1, s2, a, static_cast<int64_t>(r1),
                                    static_cast<int64_t>(r2));
          bool ok = dl.Log(delta.d0) == Mod(want.d0, q) &&
                    dl.Log(delta.d1) == Mod(want.d1, q) &&
                    dl.Log(beta.b0) == Mod(want.b0, q) &&
                    dl.Log(beta.b1) == Mod(want.b1, q);
          ++cell.combinations;
          if (!ok) ++cell.mismatches;
        }
      }
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

}  // namespace dqot
