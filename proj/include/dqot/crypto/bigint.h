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

#ifndef DQOT_CRYPTO_BIGINT_H_
#define DQOT_CRYPTO_BIGINT_H_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dqot {

// Big-endian unsigned conversions between GMP integers and bytes.
mpz_class BigIntFromBytes(std::span<const uint8_t> bytes);

// Fixed-width big-endian encoding, left-padded with zeros. The value must fit
// in `width` bytes.
std::vector<uint8_t> BigIntToBytes(const mpz_class& value, size_t width);

size_t BitLength(const mpz_class& value);
size_t ByteLength(const mpz_class& value);

}  // namespace dqot

#endif  // DQOT_CRYPTO_BIGINT_H_
