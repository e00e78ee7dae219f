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

#include "dqot/crypto/bigint.h"

#include <cassert>

namespace dqot {

mpz_class BigIntFromBytes(std::span<const uint8_t> bytes) {
  mpz_class v;
  if (!bytes.empty()) {
    mpz_import(v.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
  }
  return v;
}

std::vector<uint8_t> BigIntToBytes(const mpz_class& value, size_t width) {
  assert(value >= 0);
  std::vector<uint8_t> out(width, 0);
  size_t used = ByteLength(value);
  assert(used <= width);
  if (used > 0) {
    size_t written = 0;
    mpz_export(out.data() + (width - used), &written, 1, 1, 1, 0,
               value.get_mpz_t());
  }
  return out;
}

size_t BitLength(const mpz_class& value) {
  if (value == 0) return 0;
  return mpz_sizeinbase(value.get_mpz_t(), 2);
}

size_t ByteLength(const mpz_class& value) { return (BitLength(value) + 7) / 8; }

}  // namespace dqot
