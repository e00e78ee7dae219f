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

#ifndef DQOT_UTIL_STATUS_MACROS_H_
#define DQOT_UTIL_STATUS_MACROS_H_

#include "absl/status/status.h"
#include "absl/status/statusor.h"

#define DQOT_STATUS_CONCAT_INNER_(x, y) x##y
#define DQOT_STATUS_CONCAT_(x, y) DQOT_STATUS_CONCAT_INNER_(x, y)

// Evaluates an expression producing absl::Status and returns early on error.
#define RETURN_IF_ERROR(expr)                    \
  do {                                           \
    absl::Status _dqot_status = (expr);          \
    if (!_dqot_status.ok()) return _dqot_status; \
  } while (0)

#define DQOT_ASSIGN_OR_RETURN_IMPL_(statusor, lhs, rexpr) \
  auto statusor = (rexpr);                                \
  if (!statusor.ok()) return statusor.status();           \
  lhs = std::move(statusor).value()

// Evaluates an expression producing absl::StatusOr<T>; on success assigns the
// value to `lhs`, otherwise returns the error.
#define ASSIGN_OR_RETURN(lhs, rexpr)                                          \
  DQOT_ASSIGN_OR_RETURN_IMPL_(DQOT_STATUS_CONCAT_(_dqot_statusor_, __LINE__), \
                              lhs, rexpr)

#endif  // DQOT_UTIL_STATUS_MACROS_H_
