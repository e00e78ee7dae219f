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

#ifndef DQOT_TESTS_TEST_UTIL_H_
#define DQOT_TESTS_TEST_UTIL_H_

#include <boost/math/distributions/chi_squared.hpp>
#include <cstdint>
#include <deque>
#include <vector>

#include "dqot/crypto/group.h"
#include "dqot/crypto/random.h"

namespace dqot::testing {

// Hands out scripted bytes first, then falls back to a seeded stream.
class ScriptedRandom final : public RandomSource {
 public:
  explicit ScriptedRandom(std::vector<uint8_t> script, uint64_t seed = 99)
      : script_(script.begin(), script.end()), fallback_(seed, "scripted") {}

  void Fill(std::span<uint8_t> out) override {
    for (uint8_t& b : out) {
      if (script_.empty()) {
        fallback_.Fill(std::span<uint8_t>(&b, 1));
      } else {
        b = script_.front();
        script_.pop_front();
      }
    }
  }

 private:
  std::deque<uint8_t> script_;
  Drbg fallback_;
};

// p = 23, q = 11, g = 2, C = 13 = 2^7.
inline GroupParams TinyParams() { return *GroupParams::Create(23, 2, 13); }

inline double ChiSquarePValue(double statistic, double dof) {
  boost::math::chi_squared_distribution<double> dist(dof);
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

// Goodness of fit against a uniform distribution over counts.size() bins.
inline double UniformityPValue(const std::vector<uint64_t>& counts) {
  double total = 0;
  for (uint64_t c : counts) total += static_cast<double>(c);
  double expected = total / static_cast<double>(counts.size());
  double stat = 0;
  for (uint64_t c : counts) {
    double d = static_cast<double>(c) - expected;
    stat += d * d / expected;
  }
  return ChiSquarePValue(stat, static_cast<double>(counts.size() - 1));
}

// Chi-square test of homogeneity for two samples over the same bins. Bins
// empty in both samples are dropped.
inline double TwoSamplePValue(const std::vector<uint64_t>& a,
                              const std::vector<uint64_t>& b) {
  double na = 0, nb = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    na += static_cast<double>(a[i]);
    nb += static_cast<double>(b[i]);
  }
  double stat = 0;
  int bins = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    double row = static_cast<double>(a[i] + b[i]);
    if (row == 0) continue;
    ++bins;
    double ea = row * na / (na + nb);
    double eb = row * nb / (na + nb);
    stat += (a[i] - ea) * (a[i] - ea) / ea + (b[i] - eb) * (b[i] - eb) / eb;
  }
  return ChiSquarePValue(stat, bins - 1);
}

}  // namespace dqot::testing

#endif  // DQOT_TESTS_TEST_UTIL_H_
