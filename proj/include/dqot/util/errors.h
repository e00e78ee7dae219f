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

#ifndef DQOT_UTIL_ERRORS_H_
#define DQOT_UTIL_ERRORS_H_

#include <string_view>

#include "absl/status/status.h"

namespace dqot {

// Error categories shared by every protocol. Each maps onto a fixed absl
// status code so callers can branch on the code alone.
//
//   parameter error          -> kInvalidArgument
//   protocol violation       -> kFailedPrecondition
//   retrieval failure        -> kDataLoss
//   parameter-gen exhaustion -> kResourceExhausted
absl::Status ParameterError(std::string_view message);
absl::Status ProtocolViolationError(std::string_view message);
absl::Status RetrievalFailureError(std::string_view message);
absl::Status GenerationFailureError(std::string_view message);

bool IsParameterError(const absl::Status& status);
bool IsProtocolViolation(const absl::Status& status);
bool IsRetrievalFailure(const absl::Status& status);
bool IsGenerationFailure(const absl::Status& status);

}  // namespace dqot

#endif  // DQOT_UTIL_ERRORS_H_
