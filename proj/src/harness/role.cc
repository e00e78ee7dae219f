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

#include "dqot/harness/role.h"

#include <string>

#include "dqot/util/errors.h"

namespace dqot {

std::string_view RoleName(Role role) {
  switch (role) {
    case Role::kR:
      return "R";
    case Role::kS:
      return "S";
    case Role::kP1:
      return "P1";
    case Role::kP2:
      return "P2";
    case Role::kT:
      return "T";
    case Role::kHelper:
      return "Helper";
  }
  return "?";
}

absl::StatusOr<Role> RoleFromByte(uint8_t byte) {
  if (byte < 1 || byte > 6) {
    return ProtocolViolationError("unknown role byte " + std::to_string(byte));
  }
  return static_cast<Role>(byte);
}

absl::StatusOr<Role> RoleFromName(std::string_view name) {
  for (Role role : kAllRoles) {
    if (RoleName(role) == name) return role;
  }
  return ParameterError(std::string("unknown role ").append(name));
}

}  // namespace dqot
