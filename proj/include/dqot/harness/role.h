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

#ifndef DQOT_HARNESS_ROLE_H_
#define DQOT_HARNESS_ROLE_H_

#include <array>
#include <cstdint>
#include <string_view>

#include "absl/status/statusor.h"

namespace dqot {

// Party identities. The numeric value is the role byte on the wire.
enum class Role : uint8_t {
  kR = 1,
  kS = 2,
  kP1 = 3,
  kP2 = 4,
  kT = 5,
  kHelper = 6,
};

inline constexpr std::array<Role, 6> kAllRoles = {
    Role::kR, Role::kS, Role::kP1, Role::kP2, Role::kT, Role::kHelper};

std::string_view RoleName(Role role);
absl::StatusOr<Role> RoleFromByte(uint8_t byte);
absl::StatusOr<Role> RoleFromName(std::string_view name);

}  // namespace dqot

#endif  // DQOT_HARNESS_ROLE_H_
