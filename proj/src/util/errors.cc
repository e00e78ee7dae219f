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

#include "dqot/util/errors.h"

#include <string>

namespace dqot {

absl::Status ParameterError(std::string_view message) {
  return absl::InvalidArgumentError(
      std::string("parameter error: ").append(message));
}

absl::Status ProtocolViolationError(std::string_view message) {
  return absl::FailedPreconditionError(
      std::string("protocol violation: ").append(message));
}

absl::Status RetrievalFailureError(std::string_view message) {
  return absl::DataLossError(
      std::string("retrieval failure: ").append(message));
}

absl::Status GenerationFailureError(std::string_view message) {
  return absl::ResourceExhaustedError(
      std::string("parameter generation failure: ").append(message));
}

bool IsParameterError(const absl::Status& status) {
  return status.code() == absl::StatusCode::kInvalidArgument;
}

bool IsProtocolViolation(const absl::Status& status) {
  return status.code() == absl::StatusCode::kFailedPrecondition;
}

bool IsRetrievalFailure(const absl::Status& status) {
  return status.code() == absl::StatusCode::kDataLoss;
}

bool IsGenerationFailure(const absl::Status& status) {
  return status.code() == absl::StatusCode::kResourceExhausted;
}

}  // namespace dqot
